#include "cuspsys/surface_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

GluingTable read_gluing_table(std::istream& in) {
  GluingTable table;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;

    if (!have_header) {
      if (first != "triangles") parse_error(lineno, "expected 'triangles <count>' header");
      if (!(fields >> table.triangle_count) || table.triangle_count <= 0) {
        parse_error(lineno, "triangle count must be a positive integer");
      }
      have_header = true;
      continue;
    }

    Gluing g;
    std::istringstream record(line);
    if (!(record >> g.a.triangle >> g.a.side >> g.b.triangle >> g.b.side)) {
      parse_error(lineno, "expected '<tri_a> <side_a> <tri_b> <side_b> [r|p]'");
    }
    for (const SideRef& r : {g.a, g.b}) {
      if (r.triangle < 0 || r.triangle >= table.triangle_count || r.side < 0 || r.side > 2) {
        parse_error(lineno, "side (" + std::to_string(r.triangle) + ", " + std::to_string(r.side) +
                                ") is out of range");
      }
    }
    std::string flag;
    if (record >> flag) {
      if (flag == "p") {
        g.preserves_orientation = true;
      } else if (flag != "r") {
        parse_error(lineno, "orientation flag must be 'r' or 'p', got '" + flag + "'");
      }
    }
    if (record >> flag) parse_error(lineno, "trailing fields");
    table.gluings.push_back(g);
  }
  if (!have_header) parse_error(lineno, "missing 'triangles <count>' header");
  return table;
}

void write_gluing_table(std::ostream& out, const GluingTable& table) {
  out << "# cuspsys surface: zero-shear ideal triangulation\n";
  out << "triangles " << table.triangle_count << '\n';
  for (const Gluing& g : table.gluings) {
    out << g.a.triangle << ' ' << g.a.side << ' ' << g.b.triangle << ' ' << g.b.side;
    if (g.preserves_orientation) out << " p";
    out << '\n';
  }
}

IdealTriangulation load_surface(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open surface file " + path.string());
  return IdealTriangulation::from_gluing(read_gluing_table(in));
}

void save_surface(const std::filesystem::path& path, const IdealTriangulation& tri) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, "cannot write surface file " + path.string());
  write_gluing_table(out, tri.gluing_table());
}

}  // namespace cuspsys
