#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cuspsys/geodesics.hpp"

namespace cuspsys {

// Crossings between the geodesic representatives of two closed walks.
//
// Two non-backtracking walks on a ribbon graph overlap in maximal common
// segments (in the same or in opposite direction). A segment is a crossing
// exactly when the walks arrive on different sides and leave on different
// sides. Non-backtracking walks carry no bigons, so the count is the
// geometric intersection number of the two classes.
//
// Throws kSameClass when the walks represent the same unoriented class (or
// powers of a common one).
int crossing_number(const RibbonGraph& graph, const ClosedWalk& a, const ClosedWalk& b);

// Transverse self-crossings of a primitive walk. 0 iff the class is simple.
int self_crossings(const RibbonGraph& graph, const ClosedWalk& walk);

// One piece of a surface cut along a multicurve.
struct ComplementComponent {
  int genus = 0;
  int cusps = 0;
  int boundaries = 0;
  int euler_characteristic = 0;  // of the compact piece, cusps as boundary circles
  std::vector<int> cusp_faces;   // ribbon-graph faces (cusps) it contains
  // (curve index, side) for each boundary circle; side 0 = left, 1 = right.
  std::vector<std::pair<int, int>> sides;

  friend bool operator==(const ComplementComponent&, const ComplementComponent&) = default;
};

// Cuts along pairwise disjoint simple essential curves. Components are
// listed in order of their smallest piece. Throws kPeripheralCurve for a
// cusp loop, kNotSimple if a curve crosses itself or another curve and
// kSameClass for a repeated class.
std::vector<ComplementComponent> cut_along(const RibbonGraph& graph,
                                           std::span<const ClosedWalk> curves);
std::vector<ComplementComponent> cut_along(const RibbonGraph& graph, const ClosedWalk& curve);

enum class SystoleLabel : char { kA = 'A', kB = 'B', kC = 'C' };

struct SystoleClassification {
  SystoleLabel label = SystoleLabel::kC;
  bool simple = true;
  // A: the two cusps (faces) the class bounds.
  std::vector<int> bounded_cusps;
  // B: index of a partner class with which it bounds a cusp.
  std::optional<std::size_t> partner;
};

struct ClassificationResult {
  std::vector<SystoleClassification> labels;  // parallel to the input classes
  // Pairwise crossing numbers, crossings[i][j]; the diagonal holds self-crossings.
  std::vector<std::vector<int>> crossings;
};

// A: some complementary component is a disk with two cusps.
// B: not A, and some other non-A class disjoint from it co-bounds a
//    once-punctured annulus with it.
// C: everything else (including non-simple classes).
ClassificationResult classify_systoles(const RibbonGraph& graph,
                                       std::span<const GeodesicClass> systoles);

}  // namespace cuspsys
