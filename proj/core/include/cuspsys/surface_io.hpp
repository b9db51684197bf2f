#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cuspsys/triangulation.hpp"

namespace cuspsys {

// Text surface format:
//
//   # comments and blank lines are ignored
//   triangles <T>
//   <tri_a> <side_a> <tri_b> <side_b> [r|p]
//   ...
//
// One record per glued pair of sides. The optional fifth field marks the
// gluing as orientation-reversing (`r`, the default) or preserving (`p`).
GluingTable read_gluing_table(std::istream& in);
void write_gluing_table(std::ostream& out, const GluingTable& table);

IdealTriangulation load_surface(const std::filesystem::path& path);
void save_surface(const std::filesystem::path& path, const IdealTriangulation& tri);

}  // namespace cuspsys
