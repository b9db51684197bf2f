#include "cuspsys/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::string side_name(SideRef s) {
  return "(" + std::to_string(s.triangle) + ", " + std::to_string(s.side) + ")";
}

}  // namespace

IdealTriangulation::IdealTriangulation(std::vector<int> partner) : partner_(std::move(partner)) {
  const int halfedges = static_cast<int>(partner_.size());
  DisjointSets corners(halfedges);
  for (int h = 0; h < halfedges; ++h) {
    const int t = h / 3, s = h % 3;
    const int p = partner_[h];
    const int tp = p / 3, sp = p % 3;
    corners.unite(3 * t + s, 3 * tp + (sp + 1) % 3);
    corners.unite(3 * t + (s + 1) % 3, 3 * tp + sp);
  }
  std::map<int, int> label;
  corner_cusp_.resize(halfedges);
  for (int c = 0; c < halfedges; ++c) {
    const auto [it, inserted] = label.emplace(corners.find(c), static_cast<int>(label.size()));
    corner_cusp_[c] = it->second;
  }
  cusp_count_ = static_cast<int>(label.size());
}

IdealTriangulation IdealTriangulation::from_gluing(const GluingTable& table) {
  const int T = table.triangle_count;
  if (T <= 0) throw Error(ErrorKind::kUnpairedSide, "gluing table has no triangles");

  std::vector<int> partner(3 * T, -1);
  std::vector<int> preserves(3 * T, 0);
  auto check_side = [T](SideRef s) {
    if (s.triangle < 0 || s.triangle >= T || s.side < 0 || s.side > 2) {
      throw Error(ErrorKind::kUnpairedSide, "side " + side_name(s) + " does not exist");
    }
  };
  for (const Gluing& g : table.gluings) {
    check_side(g.a);
    check_side(g.b);
    if (g.a == g.b) {
      throw Error(ErrorKind::kUnpairedSide, "side " + side_name(g.a) + " is glued to itself");
    }
    const int ha = 3 * g.a.triangle + g.a.side;
    const int hb = 3 * g.b.triangle + g.b.side;
    for (int h : {ha, hb}) {
      if (partner[h] != -1) {
        throw Error(ErrorKind::kUnpairedSide,
                    "side " + side_name({h / 3, h % 3}) + " is glued more than once");
      }
    }
    partner[ha] = hb;
    partner[hb] = ha;
    preserves[ha] = preserves[hb] = g.preserves_orientation ? 1 : 0;
  }
  for (int h = 0; h < 3 * T; ++h) {
    if (partner[h] == -1) {
      throw Error(ErrorKind::kUnpairedSide, "side " + side_name({h / 3, h % 3}) + " is not glued");
    }
  }

  // Connectedness and orientation in one traversal: sign[t] = -1 marks a
  // triangle whose corner order must be reversed.
  std::vector<int> sign(T, 0);
  std::queue<int> frontier;
  sign[0] = 1;
  frontier.push(0);
  int reached = 1;
  while (!frontier.empty()) {
    const int t = frontier.front();
    frontier.pop();
    for (int s = 0; s < 3; ++s) {
      const int h = 3 * t + s;
      const int u = partner[h] / 3;
      const int want = preserves[h] ? -sign[t] : sign[t];
      if (sign[u] == 0) {
        sign[u] = want;
        ++reached;
        frontier.push(u);
      } else if (sign[u] != want) {
        throw Error(ErrorKind::kNonOrientable,
                    "no consistent orientation across side " + side_name({t, s}));
      }
    }
  }
  if (reached != T) {
    throw Error(ErrorKind::kDisconnected, "surface is disconnected: " + std::to_string(reached) +
                                              " of " + std::to_string(T) + " triangles reachable");
  }

  // Reversing a triangle's corner order (c0, c1, c2) -> (c0, c2, c1) maps
  // side s to side 2 - s.
  auto renumber = [&sign](int h) {
    const int t = h / 3, s = h % 3;
    return sign[t] > 0 ? h : 3 * t + (2 - s);
  };
  std::vector<int> oriented(3 * T);
  for (int h = 0; h < 3 * T; ++h) oriented[renumber(h)] = renumber(partner[h]);
  return IdealTriangulation(std::move(oriented));
}

IdealTriangulation IdealTriangulation::from_labeled_triangles(
    std::span<const std::array<int, 3>> triangles) {
  std::map<std::pair<int, int>, SideRef> sides;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    for (int s = 0; s < 3; ++s) {
      const std::pair<int, int> key{triangles[t][s], triangles[t][(s + 1) % 3]};
      if (!sides.emplace(key, SideRef{t, s}).second) {
        throw Error(ErrorKind::kUnpairedSide, "oriented side (" + std::to_string(key.first) +
                                                  ", " + std::to_string(key.second) +
                                                  ") occurs twice");
      }
    }
  }
  GluingTable table{static_cast<int>(triangles.size()), {}};
  for (const auto& [key, side] : sides) {
    const auto it = sides.find({key.second, key.first});
    if (it == sides.end()) {
      throw Error(ErrorKind::kUnpairedSide, "side " + side_name(side) + " has no partner");
    }
    if (side < it->second) table.gluings.push_back({side, it->second});
  }
  return from_gluing(table);
}

SideRef IdealTriangulation::partner(SideRef s) const {
  const int p = partner_.at(3 * s.triangle + s.side);
  return {p / 3, p % 3};
}

int IdealTriangulation::cusp_at(int triangle, int corner) const {
  return corner_cusp_.at(3 * triangle + corner);
}

GluingTable IdealTriangulation::gluing_table() const {
  GluingTable table{triangle_count(), {}};
  table.gluings.reserve(partner_.size() / 2);
  for (int h = 0; h < static_cast<int>(partner_.size()); ++h) {
    if (h < partner_[h]) {
      table.gluings.push_back({{h / 3, h % 3}, {partner_[h] / 3, partner_[h] % 3}});
    }
  }
  return table;
}

SurfaceTopology topology(const IdealTriangulation& tri) {
  SurfaceTopology top;
  top.triangles = tri.triangle_count();
  top.edges = tri.edge_count();
  top.cusps = tri.cusp_count();
  // n - E + T = 2 - 2g for the compactified surface.
  top.genus = (2 - (top.cusps - top.edges + top.triangles)) / 2;
  return top;
}

}  // namespace cuspsys
