#include "cuspsys/ribbon_graph.hpp"

namespace cuspsys {

RibbonGraph::RibbonGraph(const IdealTriangulation& tri)
    : reverse_(tri.partner_array().begin(), tri.partner_array().end()) {
  const int darts = dart_count();
  edge_id_.assign(darts, -1);
  for (Dart d = 0; d < darts; ++d) {
    if (edge_id_[d] != -1) continue;
    edge_id_[d] = edge_id_[reverse_[d]] = static_cast<int>(positive_.size());
    positive_.push_back(d);
  }

  face_of_.assign(darts, -1);
  for (Dart start = 0; start < darts; ++start) {
    if (face_of_[start] != -1) continue;
    const int f = static_cast<int>(faces_.size());
    std::vector<Dart> cycle;
    Dart d = start;
    do {
      face_of_[d] = f;
      cycle.push_back(d);
      d = left_successor(d);
    } while (d != start);
    faces_.push_back(std::move(cycle));
    // Turning left pivots around the corner on the left of the dart, which
    // is corner s + 1 of the triangle the dart leaves through side s.
    face_cusp_.push_back(tri.cusp_at(start / 3, (start % 3 + 1) % 3));
  }
}

std::map<int, int> RibbonGraph::face_census() const {
  std::map<int, int> census;
  for (const auto& f : faces_) ++census[static_cast<int>(f.size())];
  return census;
}

}  // namespace cuspsys
