#pragma once

#include <string>
#include <vector>

#include "cuspsys/bounds.hpp"
#include "cuspsys/curve_topology.hpp"
#include "cuspsys/geodesics.hpp"
#include "cuspsys/verification.hpp"
#include "json.hpp"

namespace cuspsys::cli {

using nlohmann::ordered_json;

// Aggregated class-table row: all walk classes sharing a canonical word.
struct WordRow {
  std::string word;
  std::int64_t trace = 0;
  std::optional<double> length;
  bool peripheral = false;
  std::size_t count = 0;
};

std::vector<WordRow> word_rows(const std::vector<GeodesicClass>& classes);

ordered_json to_json(const SurfaceTopology& top);
ordered_json census_json(const RibbonGraph& graph);
ordered_json to_json(const std::vector<WordRow>& rows);
ordered_json to_json(const TraceBudget& budget, bool certified);
ordered_json to_json(const BoundReport& report);
ordered_json to_json(const VerificationReport& report);
ordered_json classification_json(const RibbonGraph& graph, const std::vector<GeodesicClass>& systoles,
                                 const ClassificationResult& result);

// Fixed-column CSV tables; the first row is the header.
using CsvTable = std::vector<std::vector<std::string>>;
CsvTable rows_csv(const std::vector<WordRow>& rows);
CsvTable bounds_csv(const BoundReport& report);
CsvTable verify_csv(const VerificationReport& report);
CsvTable classification_csv(const std::vector<GeodesicClass>& systoles, const ClassificationResult& result);
std::string render_csv(const CsvTable& table);

}  // namespace cuspsys::cli
