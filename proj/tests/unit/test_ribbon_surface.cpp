#include <doctest.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cuspsys/error.hpp"
#include "cuspsys/presets.hpp"
#include "cuspsys/ribbon_graph.hpp"
#include "cuspsys/surface_io.hpp"
#include "cuspsys/triangulation.hpp"
#include "oracles.hpp"

using namespace cuspsys;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParse;
}

GluingTable two_triangles() {
  GluingTable t;
  t.triangle_count = 2;
  t.gluings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}};
  return t;
}

int euler_lhs(const IdealTriangulation& tri) {
  // n - 3T/2 + T
  return tri.cusp_count() - 3 * tri.triangle_count() / 2 + tri.triangle_count();
}

}  // namespace

TEST_CASE("torus16 from its preset") {
  const IdealTriangulation tri = torus16();
  CHECK(tri.triangle_count() == 32);
  CHECK(topology(tri) == SurfaceTopology{1, 16, 32, 48});
  const RibbonGraph g(tri);
  CHECK(g.face_census() == std::map<int, int>{{6, 16}});
  CHECK(oracle::degree_census(tri.partner_array()) == g.face_census());
}

TEST_CASE("minimal two-triangle surface") {
  const IdealTriangulation tri = IdealTriangulation::from_gluing(two_triangles());
  CHECK(tri.triangle_count() == 2);
  CHECK(topology(tri) == SurfaceTopology{0, 3, 2, 3});
  CHECK(RibbonGraph(tri).face_census() == std::map<int, int>{{2, 3}});
  CHECK(topology(thrice_punctured_sphere()) == topology(tri));
}

TEST_CASE("sphere4 is the tetrahedron") {
  const IdealTriangulation tri = sphere4();
  CHECK(topology(tri) == SurfaceTopology{0, 4, 4, 6});
  CHECK(RibbonGraph(tri).face_census() == std::map<int, int>{{3, 4}});
  const std::array<std::array<int, 3>, 4> faces{{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}};
  const IdealTriangulation labeled = IdealTriangulation::from_labeled_triangles(faces);
  CHECK(topology(labeled) == topology(tri));
}

TEST_CASE("genus presets: signature, census and handshake") {
  for (int g = 2; g <= 8; ++g) {
    CAPTURE(g);
    const IdealTriangulation tri = genus_surface(g);
    const SurfaceTopology top = topology(tri);
    CHECK(top.genus == g);
    CHECK(top.cusps == 46 * g - 46);
    CHECK(euler_lhs(tri) == 2 - 2 * g);
    const RibbonGraph graph(tri);
    const std::map<int, int> expected{{6, 46 * g - 47}, {12 * g - 6, 1}};
    CHECK(graph.face_census() == expected);
    CHECK(oracle::degree_census(tri.partner_array()) == expected);
    int degree_sum = 0;
    for (const auto& [d, count] : graph.face_census()) degree_sum += d * count;
    CHECK(degree_sum == 2 * top.edges);
    CHECK(preset("genus", g).partner_array() == tri.partner_array());
  }
}

TEST_CASE("Euler relation and degree sum on every preset") {
  for (const IdealTriangulation& tri : {torus16(), sphere4(), thrice_punctured_sphere(), genus_surface(3)}) {
    const SurfaceTopology top = topology(tri);
    CHECK(euler_lhs(tri) == 2 - 2 * top.genus);
    const RibbonGraph g(tri);
    int sum = 0;
    for (int f = 0; f < g.face_count(); ++f) sum += static_cast<int>(g.face(f).size());
    CHECK(sum == 2 * g.edge_count());
    CHECK(g.face_count() == tri.cusp_count());
  }
}

TEST_CASE("ribbon graph structure") {
  const RibbonGraph g(torus16());
  for (Dart d = 0; d < g.dart_count(); ++d) {
    CHECK(g.reverse(d) != d);
    CHECK(g.reverse(g.reverse(d)) == d);
    CHECK(g.edge_of(d) == g.edge_of(g.reverse(d)));
    CHECK(g.tail(g.left_successor(d)) == g.head(d));
    CHECK(g.tail(g.right_successor(d)) == g.head(d));
    CHECK(g.left_successor(d) != g.right_successor(d));
    // faces are the always-left cycles and lie on the left of their darts
    CHECK(g.face_of(g.left_successor(d)) == g.face_of(d));
  }
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& darts = g.face(f);
    for (std::size_t i = 0; i < darts.size(); ++i)
      CHECK(g.left_successor(darts[i]) == darts[(i + 1) % darts.size()]);
  }
}

TEST_CASE("gluing validation errors") {
  SUBCASE("side glued to itself") {
    GluingTable t = two_triangles();
    t.gluings[0] = {{0, 0}, {0, 0}};
    CHECK(kind_of([&] { IdealTriangulation::from_gluing(t); }) == ErrorKind::kUnpairedSide);
  }
  SUBCASE("side left free") {
    GluingTable t = two_triangles();
    t.gluings.pop_back();
    CHECK(kind_of([&] { IdealTriangulation::from_gluing(t); }) == ErrorKind::kUnpairedSide);
  }
  SUBCASE("side used twice") {
    GluingTable t = two_triangles();
    t.gluings[2] = {{0, 2}, {1, 0}};
    CHECK(kind_of([&] { IdealTriangulation::from_gluing(t); }) == ErrorKind::kUnpairedSide);
  }
  SUBCASE("mixed orientation flags") {
    GluingTable t = two_triangles();
    t.gluings[0].preserves_orientation = true;
    CHECK(kind_of([&] { IdealTriangulation::from_gluing(t); }) == ErrorKind::kNonOrientable);
  }
  SUBCASE("all flags preserving is fixed by re-orienting a triangle") {
    GluingTable t = two_triangles();
    for (Gluing& gl : t.gluings) gl.preserves_orientation = true;
    // flipping triangle 1 sends its side s to 2 - s and makes every gluing reversing
    GluingTable flipped;
    flipped.triangle_count = 2;
    for (const Gluing& gl : t.gluings) flipped.gluings.push_back({gl.a, {gl.b.triangle, 2 - gl.b.side}});
    std::vector<int> partner(6);
    for (const Gluing& gl : flipped.gluings) {
      partner[3 * gl.a.triangle + gl.a.side] = 3 * gl.b.triangle + gl.b.side;
      partner[3 * gl.b.triangle + gl.b.side] = 3 * gl.a.triangle + gl.a.side;
    }
    const auto classes = oracle::corner_classes(partner);
    const int cusps = *std::max_element(classes.begin(), classes.end()) + 1;
    const SurfaceTopology got = topology(IdealTriangulation::from_gluing(t));
    CHECK(got == topology(IdealTriangulation::from_gluing(flipped)));
    CHECK(got.cusps == cusps);
    CHECK(2 * got.genus + got.cusps == 3);
  }
  SUBCASE("two separate pieces") {
    GluingTable t;
    t.triangle_count = 4;
    t.gluings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}},
                 {{2, 0}, {3, 0}}, {{2, 1}, {3, 2}}, {{2, 2}, {3, 1}}};
    CHECK(kind_of([&] { IdealTriangulation::from_gluing(t); }) == ErrorKind::kDisconnected);
  }
}

TEST_CASE("preset lookup errors") {
  CHECK(kind_of([] { preset("klein"); }) == ErrorKind::kUnknownPreset);
  CHECK(kind_of([] { preset("genus"); }) == ErrorKind::kBadGenus);
  CHECK(kind_of([] { preset("genus", 1); }) == ErrorKind::kBadGenus);
  CHECK(kind_of([] { genus_surface(0); }) == ErrorKind::kBadGenus);
}

TEST_CASE("surface file round trip") {
  for (const IdealTriangulation& tri : {torus16(), sphere4(), genus_surface(2)}) {
    std::stringstream buf;
    write_gluing_table(buf, tri.gluing_table());
    const GluingTable back = read_gluing_table(buf);
    const IdealTriangulation again = IdealTriangulation::from_gluing(back);
    CHECK(again.partner_array() == tri.partner_array());
  }
  const auto path = std::filesystem::temp_directory_path() / "cuspsys_unit_roundtrip.surf";
  save_surface(path, torus16());
  CHECK(load_surface(path).partner_array() == torus16().partner_array());
  std::filesystem::remove(path);
}

TEST_CASE("surface file parsing") {
  SUBCASE("comments, blank lines and flags") {
    std::istringstream in("# two triangles\n\ntriangles 2\n0 0 1 0\n0 1 1 2 r\n0 2 1 1 p\n");
    const GluingTable t = read_gluing_table(in);
    CHECK(t.triangle_count == 2);
    REQUIRE(t.gluings.size() == 3);
    CHECK(t.gluings[2].preserves_orientation);
    CHECK(kind_of([&] { IdealTriangulation::from_gluing(t); }) == ErrorKind::kNonOrientable);
  }
  SUBCASE("malformed input") {
    for (const char* text : {"", "triangles x\n", "triangles 2\n0 0 1\n", "triangles 2\n0 0 1 0 q\n",
                             "0 0 1 0\n", "triangles 2\n0 3 1 0\n", "triangles 2\n0 0 5 0\n"}) {
      CAPTURE(text);
      std::istringstream in(text);
      CHECK(kind_of([&] { IdealTriangulation::from_gluing(read_gluing_table(in)); }) ==
            ErrorKind::kParse);
    }
  }
  SUBCASE("missing file") {
    CHECK(kind_of([] { load_surface("/nonexistent/cuspsys.surf"); }) == ErrorKind::kParse);
  }
}
