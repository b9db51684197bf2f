#pragma once

#include <array>
#include <span>
#include <vector>

namespace cuspsys {

// Side `side` of a triangle runs from corner `side` to corner `side + 1`
// (mod 3); corners are listed counterclockwise.
struct SideRef {
  int triangle = 0;
  int side = 0;

  friend bool operator==(const SideRef&, const SideRef&) = default;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

struct Gluing {
  SideRef a;
  SideRef b;
  // By default a gluing reverses the boundary orientations induced by the two
  // triangles. Setting this marks a gluing that preserves them, which forces
  // one of the two triangles to be re-oriented (or the surface to be
  // non-orientable).
  bool preserves_orientation = false;

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct GluingTable {
  int triangle_count = 0;
  std::vector<Gluing> gluings;
};

// A connected, oriented surface built from ideal triangles glued without
// shear. Immutable once constructed; every instance is validated.
class IdealTriangulation {
 public:
  // Validates pairing, connectedness and orientability. Triangles that must be
  // flipped to make all gluings orientation-reversing are re-oriented, which
  // renumbers their sides (old side s becomes side 2 - s).
  static IdealTriangulation from_gluing(const GluingTable& table);

  // Builds a triangulation from triangles given as counterclockwise triples of
  // vertex labels: the side (u, v) is glued to the unique side (v, u).
  static IdealTriangulation from_labeled_triangles(
      std::span<const std::array<int, 3>> triangles);

  int triangle_count() const noexcept { return static_cast<int>(partner_.size() / 3); }
  int edge_count() const noexcept { return static_cast<int>(partner_.size() / 2); }
  int cusp_count() const noexcept { return cusp_count_; }

  SideRef partner(SideRef s) const;
  // Cusp (ideal vertex class) at corner `corner` of triangle `triangle`.
  int cusp_at(int triangle, int corner) const;

  // Canonical table: one record per pair with a < b, all orientation-reversing.
  GluingTable gluing_table() const;

  // Flat half-edge view used by RibbonGraph: index 3 * triangle + side.
  const std::vector<int>& partner_array() const noexcept { return partner_; }

 private:
  IdealTriangulation(std::vector<int> partner);

  std::vector<int> partner_;
  std::vector<int> corner_cusp_;
  int cusp_count_ = 0;
};

struct SurfaceTopology {
  int genus = 0;
  int cusps = 0;
  int triangles = 0;
  int edges = 0;

  // Euler characteristic of the punctured surface, 2 - 2g - n.
  int euler_characteristic() const noexcept { return 2 - 2 * genus - cusps; }
  friend bool operator==(const SurfaceTopology&, const SurfaceTopology&) = default;
};

SurfaceTopology topology(const IdealTriangulation& tri);

}  // namespace cuspsys
