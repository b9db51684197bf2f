#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuspsys/triangulation.hpp"

namespace cuspsys {

// Torus with 16 cusps: a 4x4 grid of squares, each split by a diagonal in
// the same direction (32 triangles), opposite sides identified.
IdealTriangulation torus16();

// Genus g >= 2 surface with 46g - 46 cusps: 3(g - 1) copies of the 4x4
// block laid out as a 1 x (g - 1) row of blocks on top of the left end of a
// 1 x 2(g - 1) row. The 4g unit sides of this polygon, listed
// counterclockwise from the bottom-left corner, are identified by the
// pattern a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1.
IdealTriangulation genus_surface(int genus);

// Four-punctured sphere from the boundary of a tetrahedron.
IdealTriangulation sphere4();

// Thrice-punctured sphere: two triangles glued along all three sides.
IdealTriangulation thrice_punctured_sphere();

// Lookup by name: "torus16", "genus" (needs g >= 2) or "sphere4".
IdealTriangulation preset(std::string_view name, std::optional<int> genus = std::nullopt);

const std::vector<std::string>& preset_names();

}  // namespace cuspsys
