#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuspsys/bounds.hpp"
#include "cuspsys/ribbon_graph.hpp"
#include "cuspsys/turn_word.hpp"

namespace cuspsys {

// A cyclic, non-backtracking sequence of darts in which each dart starts at
// the vertex where the previous one (cyclically) ends.
class ClosedWalk {
 public:
  // Throws kBacktracking if some dart is followed by its own reverse and
  // kInvalidWalk if consecutive darts do not connect.
  ClosedWalk(std::vector<Dart> darts, const RibbonGraph& graph);

  const std::vector<Dart>& darts() const noexcept { return darts_; }
  std::size_t size() const noexcept { return darts_.size(); }
  Dart operator[](std::size_t i) const { return darts_[i]; }

  ClosedWalk reversed(const RibbonGraph& graph) const;

  // Least rotation, by dart index, of the walk and of its reverse. Two walks
  // represent the same unoriented free homotopy class iff their keys match.
  std::vector<Dart> class_key(const RibbonGraph& graph) const;

  // True when the dart sequence is not a proper power of a shorter walk.
  bool primitive() const;

  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;

 private:
  ClosedWalk() = default;
  std::vector<Dart> darts_;
};

// Turn taken when `out` follows `in`. Throws kBacktracking or kInvalidWalk.
Turn turn_between(const RibbonGraph& graph, Dart in, Dart out);

TurnWord word_of_walk(const ClosedWalk& walk, const RibbonGraph& graph);

// Follows `word` from `start`; nullopt if the path does not close up at
// `start` after the last letter.
std::optional<ClosedWalk> walk_from_word(const RibbonGraph& graph, Dart start, const TurnWord& word);

ClosedWalk face_walk(const RibbonGraph& graph, int face);

// Topology of the surface carried by the graph (faces are the cusps).
SurfaceTopology topology(const RibbonGraph& graph);

struct GeodesicClass {
  TurnWord word;                 // canonical word
  ClosedWalk walk;               // canonical representative (the class key)
  std::int64_t trace = 0;
  std::optional<double> length;  // absent for peripheral classes
  bool peripheral = false;
  std::uint64_t multiplicity = 0;  // representatives hit by the search (diagnostic)
};

struct EnumerationOptions {
  std::int64_t trace_max = 2;
  std::uint64_t node_cap = 100'000'000;
  // Adds start-dart symmetry breaking and a one-letter closing lookahead to
  // the monotone trace cut. The result set is identical either way.
  bool prune = true;
  int threads = 1;
  // When the node cap is hit: return the partial result (complete = false)
  // instead of throwing kBudgetExceeded.
  bool allow_partial = false;
};

struct EnumerationResult {
  // Sorted by (trace, canonical word, class key).
  std::vector<GeodesicClass> classes;
  std::uint64_t nodes = 0;
  bool complete = true;
};

// All primitive unoriented closed geodesic classes with trace <= trace_max.
EnumerationResult enumerate_classes(const RibbonGraph& graph, const EnumerationOptions& options);

// Reference enumerator: every non-backtracking closed walk of at most
// `max_length` darts, no trace cut at all. Exponential; for small checks.
std::vector<GeodesicClass> enumerate_by_length(const RibbonGraph& graph, int max_length);

struct SystoleOptions {
  // Overrides the certified budget derived from the systole bounds.
  std::optional<std::int64_t> trace_max;
  std::uint64_t node_cap = 100'000'000;
  int threads = 1;
  bool allow_partial = false;
};

struct SystoleResult {
  std::int64_t trace = 0;
  double length = 0.0;
  std::vector<GeodesicClass> systoles;
  TraceBudget budget;         // budget used; source "user" when overridden
  bool certified = false;     // budget came from a valid systole bound
  std::uint64_t nodes = 0;
  bool complete = true;
};

// Throws kNoEssentialCurve when no essential class lies within the budget,
// kTraceBudgetRequired when no bound applies and none was supplied.
SystoleResult systole(const RibbonGraph& graph, const SystoleOptions& options = {});

std::size_t kissing_number(const RibbonGraph& graph, const SystoleOptions& options = {});

}  // namespace cuspsys
