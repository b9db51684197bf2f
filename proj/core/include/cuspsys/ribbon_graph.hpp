#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cuspsys/triangulation.hpp"

namespace cuspsys {

// A directed edge of the dual graph. Dart 3t + s leaves the vertex dual to
// triangle t through side s and arrives at the vertex of the adjacent
// triangle.
using Dart = std::int32_t;

// The cubic ribbon graph dual to an ideal triangulation. The cyclic order at
// each vertex is the counterclockwise side order 0, 1, 2 of its triangle.
class RibbonGraph {
 public:
  explicit RibbonGraph(const IdealTriangulation& tri);

  int vertex_count() const noexcept { return static_cast<int>(reverse_.size() / 3); }
  int dart_count() const noexcept { return static_cast<int>(reverse_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }

  Dart reverse(Dart d) const { return reverse_[d]; }
  int tail(Dart d) const noexcept { return d / 3; }
  int head(Dart d) const { return reverse_[d] / 3; }

  // Next half-edge counterclockwise around the same vertex.
  static Dart rotate(Dart h) noexcept { return 3 * (h / 3) + (h % 3 + 1) % 3; }

  // Continuations after arriving along `d`: the right turn leaves through the
  // side following the entry side, the left turn through the one after it.
  Dart right_successor(Dart d) const { return rotate(reverse_[d]); }
  Dart left_successor(Dart d) const { return rotate(rotate(reverse_[d])); }

  // Undirected edge id, shared by a dart and its reverse.
  int edge_of(Dart d) const { return edge_id_[d]; }
  // The dart of each edge taken as its positive direction.
  Dart positive_dart(int edge) const { return positive_[edge]; }

  // Faces are the always-turn-left cycles; the face of `d` lies on its left.
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int face_of(Dart d) const { return face_of_[d]; }
  const std::vector<Dart>& face(int f) const { return faces_.at(f); }
  // Cusp of the triangulation that face `f` winds around.
  int cusp_of_face(int f) const { return face_cusp_.at(f); }

  // Face degree -> number of faces of that degree.
  std::map<int, int> face_census() const;

 private:
  std::vector<Dart> reverse_;
  std::vector<int> edge_id_;
  std::vector<Dart> positive_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> face_of_;
  std::vector<int> face_cusp_;
};

}  // namespace cuspsys
