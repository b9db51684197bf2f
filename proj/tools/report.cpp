#include "report.hpp"

#include <sstream>

namespace cuspsys::cli {

namespace {

ordered_json bound_json(const BoundValue& b) {
  ordered_json j;
  if (b.applicable()) {
    j["value"] = *b.value;
  } else {
    j["value"] = nullptr;
    j["excluded"] = b.excluded;
  }
  return j;
}

std::string number(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string bound_cell(const BoundValue& b) { return b.applicable() ? number(*b.value) : ""; }

}  // namespace

std::vector<WordRow> word_rows(const std::vector<GeodesicClass>& classes) {
  std::vector<WordRow> rows;
  for (const GeodesicClass& c : classes) {
    const std::string word = c.word.compact();
    if (!rows.empty() && rows.back().word == word && rows.back().trace == c.trace) {
      ++rows.back().count;
      continue;
    }
    rows.push_back({word, c.trace, c.length, c.peripheral, 1});
  }
  return rows;
}

ordered_json to_json(const SurfaceTopology& top) {
  return {{"genus", top.genus},
          {"cusps", top.cusps},
          {"triangles", top.triangles},
          {"edges", top.edges},
          {"euler_characteristic", top.euler_characteristic()}};
}

ordered_json census_json(const RibbonGraph& graph) {
  ordered_json out = ordered_json::array();
  for (const auto& [degree, count] : graph.face_census()) out.push_back({{"degree", degree}, {"count", count}});
  return out;
}

ordered_json to_json(const std::vector<WordRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const WordRow& r : rows) {
    ordered_json row{{"word", r.word}, {"trace", r.trace}};
    row["length"] = r.length ? ordered_json(*r.length) : ordered_json(nullptr);
    row["peripheral"] = r.peripheral;
    row["count"] = r.count;
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json to_json(const TraceBudget& budget, bool certified) {
  return {{"trace_max", budget.trace_max},
          {"length_bound", budget.length_bound},
          {"source", budget.source},
          {"certified", certified}};
}

ordered_json to_json(const BoundReport& report) {
  ordered_json out;
  out["signature"] = {{"genus", report.signature.genus}, {"cusps", report.signature.cusps}};
  if (report.length) {
    out["length"] = report.length->value;
    out["trace"] = report.length->trace ? ordered_json(*report.length->trace) : ordered_json(nullptr);
  } else {
    out["length"] = nullptr;
    out["trace"] = nullptr;
  }
  if (report.systole) {
    const SysUpper& s = *report.systole;
    out["sys_upper"] = {{"closed_case", bound_json(s.closed_case)},
                        {"case_many_cusps", bound_json(s.case_many_cusps)},
                        {"case_close_pair", bound_json(s.case_close_pair)},
                        {"case_self_loop", bound_json(s.case_self_loop)},
                        {"three_case_max", bound_json(s.three_case_max)},
                        {"schmutz", bound_json(s.schmutz)},
                        {"packaged", bound_json(s.packaged)},
                        {"minimum", s.minimum},
                        {"minimum_source", s.minimum_source},
                        {"packaging_discrepancy", s.packaging_discrepancy}};
    try {
      const TraceBudget budget = certified_trace_budget(report.signature);
      out["trace_budget"] = to_json(budget, true);
    } catch (const std::exception&) {
      out["trace_budget"] = nullptr;
    }
  } else {
    out["sys_upper"] = {{"error", report.systole_error}};
  }
  out["sphere_kissing"] = bound_json(report.sphere_kissing);
  if (report.pants) {
    const PantsQuantities& p = *report.pants;
    out["pants"] = {{"horoball_distance", p.horoball_distance},
                    {"cusp_to_curve", p.cusp_to_curve},
                    {"sin_angle", p.sin_angle},
                    {"angle", p.angle},
                    {"cusp_curve_count", p.cusp_curve_count},
                    {"disk_radius", p.disk_radius},
                    {"intersection_distance", p.intersection_distance},
                    {"collar_width", p.collar_width},
                    {"long_branch", p.long_branch}};
  } else {
    out["pants"] = nullptr;
  }
  if (report.kissing) {
    const KissUpper& k = *report.kissing;
    out["kissing"] = {{"cosh_floor", k.cosh_floor},
                      {"a_cap_horoball", bound_json(k.a_cap_horoball)},
                      {"a_cap_euler", bound_json(k.a_cap_euler)},
                      {"b_cap", bound_json(k.b_cap)},
                      {"c_cap", bound_json(k.c_cap)},
                      {"covering_count", bound_json(k.covering_count)},
                      {"curves_per_disk", bound_json(k.curves_per_disk)},
                      {"disks_per_curve", bound_json(k.disks_per_curve)},
                      {"kissbound", bound_json(k.kissbound)},
                      {"kissbound_universal", bound_json(k.kissbound_universal)},
                      {"sphere", bound_json(k.sphere)}};
  } else {
    out["kissing"] = nullptr;
  }
  return out;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"max_deviation", c.max_deviation},
                      {"seconds", c.seconds},
                      {"detail", c.detail}});
  }
  ordered_json table = ordered_json::array();
  for (const SysboundRow& r : report.sysbound_table) {
    table.push_back({{"genus", r.genus},
                     {"case_many_cusps", r.case_many_cusps},
                     {"case_close_pair", r.case_close_pair},
                     {"case_self_loop", r.case_self_loop},
                     {"three_case_max", r.three_case_max},
                     {"packaged", r.packaged},
                     {"close_pair_exceeds_packaged", r.close_pair_exceeds}});
  }
  return {{"passed", report.passed()}, {"checks", checks}, {"sysbound_table", table}};
}

ordered_json classification_json(const RibbonGraph& graph, const std::vector<GeodesicClass>& systoles,
                                 const ClassificationResult& result) {
  ordered_json rows = ordered_json::array();
  std::map<std::string, int> counts{{"A", 0}, {"B", 0}, {"C", 0}};
  int max_crossing = 0;
  for (std::size_t i = 0; i < systoles.size(); ++i) {
    const SystoleClassification& l = result.labels[i];
    const std::string label(1, static_cast<char>(l.label));
    ++counts[label];
    ordered_json cusps = ordered_json::array();
    for (int f : l.bounded_cusps) cusps.push_back(graph.cusp_of_face(f));
    for (std::size_t j = i + 1; j < systoles.size(); ++j) max_crossing = std::max(max_crossing, result.crossings[i][j]);
    rows.push_back({{"index", i},
                    {"word", systoles[i].word.compact()},
                    {"walk", systoles[i].walk.darts()},
                    {"label", label},
                    {"simple", l.simple},
                    {"self_crossings", result.crossings[i][i]},
                    {"bounded_cusps", cusps},
                    {"partner", l.partner ? ordered_json(*l.partner) : ordered_json(nullptr)}});
  }
  return {{"counts", counts}, {"max_pair_crossing", max_crossing}, {"classes", rows}};
}

CsvTable rows_csv(const std::vector<WordRow>& rows) {
  CsvTable t{{"word", "trace", "length", "peripheral", "count"}};
  for (const WordRow& r : rows) {
    t.push_back({r.word, std::to_string(r.trace), r.length ? number(*r.length) : "",
                 r.peripheral ? "true" : "false", std::to_string(r.count)});
  }
  return t;
}

CsvTable bounds_csv(const BoundReport& report) {
  CsvTable t{{"quantity", "value"}};
  if (report.systole) {
    const SysUpper& s = *report.systole;
    t.push_back({"closed_case", bound_cell(s.closed_case)});
    t.push_back({"case_many_cusps", bound_cell(s.case_many_cusps)});
    t.push_back({"case_close_pair", bound_cell(s.case_close_pair)});
    t.push_back({"case_self_loop", bound_cell(s.case_self_loop)});
    t.push_back({"three_case_max", bound_cell(s.three_case_max)});
    t.push_back({"schmutz", bound_cell(s.schmutz)});
    t.push_back({"packaged", bound_cell(s.packaged)});
    t.push_back({"minimum", number(s.minimum)});
  }
  t.push_back({"sphere_kissing", bound_cell(report.sphere_kissing)});
  if (report.pants) {
    const PantsQuantities& p = *report.pants;
    t.push_back({"horoball_distance", number(p.horoball_distance)});
    t.push_back({"cusp_to_curve", number(p.cusp_to_curve)});
    t.push_back({"sin_angle", number(p.sin_angle)});
    t.push_back({"cusp_curve_count", number(p.cusp_curve_count)});
    t.push_back({"disk_radius", number(p.disk_radius)});
    t.push_back({"intersection_distance", number(p.intersection_distance)});
    t.push_back({"collar_width", number(p.collar_width)});
  }
  if (report.kissing) {
    const KissUpper& k = *report.kissing;
    t.push_back({"a_cap_horoball", bound_cell(k.a_cap_horoball)});
    t.push_back({"a_cap_euler", bound_cell(k.a_cap_euler)});
    t.push_back({"b_cap", bound_cell(k.b_cap)});
    t.push_back({"c_cap", bound_cell(k.c_cap)});
    t.push_back({"covering_count", bound_cell(k.covering_count)});
    t.push_back({"curves_per_disk", bound_cell(k.curves_per_disk)});
    t.push_back({"disks_per_curve", bound_cell(k.disks_per_curve)});
    t.push_back({"kissbound", bound_cell(k.kissbound)});
    t.push_back({"kissbound_universal", bound_cell(k.kissbound_universal)});
    t.push_back({"sphere", bound_cell(k.sphere)});
  }
  return t;
}

CsvTable verify_csv(const VerificationReport& report) {
  CsvTable t{{"criterion", "name", "passed", "max_deviation", "seconds", "detail"}};
  for (const Check& c : report.checks) {
    t.push_back({std::to_string(c.criterion), c.name, c.passed ? "true" : "false", number(c.max_deviation),
                 number(c.seconds), c.detail});
  }
  return t;
}

CsvTable classification_csv(const std::vector<GeodesicClass>& systoles, const ClassificationResult& result) {
  CsvTable t{{"index", "word", "label", "self_crossings", "partner"}};
  for (std::size_t i = 0; i < systoles.size(); ++i) {
    const SystoleClassification& l = result.labels[i];
    t.push_back({std::to_string(i), systoles[i].word.compact(), std::string(1, static_cast<char>(l.label)),
                 std::to_string(result.crossings[i][i]), l.partner ? std::to_string(*l.partner) : ""});
  }
  return t;
}

std::string render_csv(const CsvTable& table) {
  std::string out;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cuspsys::cli
