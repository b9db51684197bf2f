#include "cuspsys/presets.hpp"

#include <array>
#include <map>
#include <utility>

#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

constexpr int kBlock = 4;  // fine cells per unit side of a building block

using Point = std::pair<int, int>;

// Triangulates a union of fine lattice cells, each split by the diagonal from
// its lower-left to its upper-right corner. Returns oriented sides keyed by
// their endpoint lattice points.
struct CellComplex {
  std::map<Point, int> label;
  std::vector<std::array<int, 3>> triangles;

  int id(Point p) { return label.emplace(p, static_cast<int>(label.size())).first->second; }

  void add_cell(int x, int y) {
    const int a = id({x, y}), b = id({x + 1, y}), c = id({x + 1, y + 1}), d = id({x, y + 1});
    triangles.push_back({a, b, c});
    triangles.push_back({a, c, d});
  }
};

}  // namespace

IdealTriangulation torus16() {
  auto v = [](int i, int j) { return kBlock * ((j % kBlock + kBlock) % kBlock) + (i % kBlock + kBlock) % kBlock; };
  std::vector<std::array<int, 3>> triangles;
  for (int j = 0; j < kBlock; ++j) {
    for (int i = 0; i < kBlock; ++i) {
      triangles.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      triangles.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  }
  return IdealTriangulation::from_labeled_triangles(triangles);
}

IdealTriangulation genus_surface(int genus) {
  if (genus < 2) {
    throw Error(ErrorKind::kBadGenus,
                "genus preset requires g >= 2, got " + std::to_string(genus));
  }
  const int h = genus - 1;

  CellComplex cx;
  for (int y = 0; y < kBlock; ++y)
    for (int x = 0; x < 2 * h * kBlock; ++x) cx.add_cell(x, y);
  for (int y = kBlock; y < 2 * kBlock; ++y)
    for (int x = 0; x < h * kBlock; ++x) cx.add_cell(x, y);

  // Polygon corners in block units, counterclockwise from the bottom-left.
  std::vector<Point> corners;
  for (int x = 0; x <= 2 * h; ++x) corners.push_back({x, 0});
  for (int x = 2 * h; x >= h; --x) corners.push_back({x, 1});
  for (int x = h; x >= 0; --x) corners.push_back({x, 2});
  corners.push_back({0, 1});
  // corners.front() closes the loop; every consecutive pair is a unit side.
  const int sides = static_cast<int>(corners.size());
  if (sides != 4 * genus) {
    throw Error(ErrorKind::kBadGenus, "internal: polygon has " + std::to_string(sides) + " sides");
  }

  std::map<std::pair<int, int>, SideRef> oriented;
  for (int t = 0; t < static_cast<int>(cx.triangles.size()); ++t)
    for (int s = 0; s < 3; ++s)
      oriented[{cx.triangles[t][s], cx.triangles[t][(s + 1) % 3]}] = SideRef{t, s};

  GluingTable table{static_cast<int>(cx.triangles.size()), {}};
  for (const auto& [key, side] : oriented) {
    const auto it = oriented.find({key.second, key.first});
    if (it != oriented.end() && side < it->second) table.gluings.push_back({side, it->second});
  }

  // Triangle side carrying fine segment k of unit side i, traversed
  // counterclockwise around the polygon.
  auto boundary_segment = [&](int i, int k) {
    const Point p = corners[i];
    const Point q = corners[(i + 1) % sides];
    const int dx = q.first - p.first, dy = q.second - p.second;
    const Point from{kBlock * p.first + k * dx, kBlock * p.second + k * dy};
    const Point to{from.first + dx, from.second + dy};
    return oriented.at({cx.label.at(from), cx.label.at(to)});
  };
  for (int j = 0; j < genus; ++j) {
    for (const auto& [first, second] : {std::pair{4 * j, 4 * j + 2}, std::pair{4 * j + 1, 4 * j + 3}}) {
      // x and x^-1 traverse the identified sides in opposite directions.
      for (int k = 0; k < kBlock; ++k) {
        table.gluings.push_back({boundary_segment(first, k), boundary_segment(second, kBlock - 1 - k)});
      }
    }
  }
  return IdealTriangulation::from_gluing(table);
}

IdealTriangulation sphere4() {
  const std::array<std::array<int, 3>, 4> faces{{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}};
  return IdealTriangulation::from_labeled_triangles(faces);
}

IdealTriangulation thrice_punctured_sphere() {
  const std::array<std::array<int, 3>, 2> faces{{{0, 1, 2}, {0, 2, 1}}};
  return IdealTriangulation::from_labeled_triangles(faces);
}

IdealTriangulation preset(std::string_view name, std::optional<int> genus) {
  if (name == "torus16") return torus16();
  if (name == "sphere4") return sphere4();
  if (name == "genus") {
    if (!genus) throw Error(ErrorKind::kBadGenus, "genus preset requires a genus g >= 2");
    return genus_surface(*genus);
  }
  throw Error(ErrorKind::kUnknownPreset, "unknown preset '" + std::string(name) + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"torus16", "genus", "sphere4"};
  return names;
}

}  // namespace cuspsys
