#include "cuspsys/curve_topology.hpp"

#include <algorithm>
#include <numeric>

#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<int> parent;
};

Dart at(const std::vector<Dart>& w, long i) {
  const long n = static_cast<long>(w.size());
  return w[static_cast<std::size_t>(((i % n) + n) % n)];
}

// Linked maximal common segments of x and y, both read in their own
// direction. With `skip_diagonal`, segments starting at equal offsets are
// ignored (x and y are the same walk).
int linked_segments(const RibbonGraph& graph, const std::vector<Dart>& x, const std::vector<Dart>& y,
                    bool skip_diagonal) {
  const long px = static_cast<long>(x.size());
  const long py = static_cast<long>(y.size());
  const long cap = px + py;
  int linked = 0;
  for (long i = 0; i < px; ++i) {
    for (long j = 0; j < py; ++j) {
      if (skip_diagonal && i == j) continue;
      if (x[i] != y[j] || at(x, i - 1) == at(y, j - 1)) continue;
      long k = 1;
      while (k < cap && at(x, i + k) == at(y, j + k)) ++k;
      if (k == cap) {
        throw Error(ErrorKind::kSameClass, "walks run together indefinitely: same class");
      }
      const Dart h = x[i];
      const bool left_before = graph.reverse(at(x, i - 1)) == RibbonGraph::rotate(h);
      const Dart last = at(x, i + k - 1);
      const bool left_after = at(x, i + k) == graph.left_successor(last);
      if (left_before != left_after) ++linked;
    }
  }
  return linked;
}

std::vector<Dart> primitive_root(const std::vector<Dart>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return {w.begin(), w.begin() + static_cast<long>(p)};
  }
  return w;
}

bool is_rotation(const std::vector<Dart>& x, const std::vector<Dart>& y) {
  if (x.size() != y.size()) return false;
  std::vector<Dart> xx(x);
  xx.insert(xx.end(), x.begin(), x.end());
  return std::search(xx.begin(), xx.end(), y.begin(), y.end()) != xx.end();
}

std::vector<Dart> reversed(const RibbonGraph& graph, const std::vector<Dart>& w) {
  std::vector<Dart> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(graph.reverse(*it));
  return out;
}

void require_essential(const RibbonGraph& graph, const ClosedWalk& walk) {
  if (word_of_walk(walk, graph).is_peripheral()) {
    throw Error(ErrorKind::kPeripheralCurve, "curve is a cusp loop");
  }
}

// A strand of a curve along one band, oriented along the band's positive dart.
struct Pass {
  int curve;
  long position;
  bool forward;  // the curve crosses the band along its positive dart
};

class Cutter {
 public:
  Cutter(const RibbonGraph& graph, std::span<const ClosedWalk> curves)
      : graph_(graph), curves_(curves) {}

  std::vector<ComplementComponent> run() {
    order_passes();
    number_strips();
    cut_disks();
    return assemble();
  }

 private:
  // Dart number `step` of the pass read in the positive direction of its band.
  Dart along(const Pass& p, long step) const {
    const auto& w = curves_[p.curve].darts();
    return p.forward ? at(w, p.position + step) : graph_.reverse(at(w, p.position - step));
  }

  // True when `p` runs to the left of `q` in their common band: follow both
  // until they part; the one that turns left there is on the left.
  bool left_of(const Pass& p, const Pass& q) const {
    if (p.curve == q.curve && p.position == q.position) return false;
    const long cap = static_cast<long>(curves_[p.curve].size() + curves_[q.curve].size()) + 1;
    for (long step = 1; step < cap; ++step) {
      const Dart a = along(p, step);
      const Dart b = along(q, step);
      if (a != b) return a == graph_.left_successor(along(p, step - 1));
    }
    throw Error(ErrorKind::kSameClass, "two strands never part: repeated class");
  }

  void order_passes() {
    passes_.assign(graph_.edge_count(), {});
    for (int c = 0; c < static_cast<int>(curves_.size()); ++c) {
      const auto& w = curves_[c].darts();
      for (long i = 0; i < static_cast<long>(w.size()); ++i) {
        const int e = graph_.edge_of(w[i]);
        passes_[e].push_back({c, i, w[i] == graph_.positive_dart(e)});
      }
    }
    rank_.resize(curves_.size());
    for (std::size_t c = 0; c < curves_.size(); ++c) rank_[c].assign(curves_[c].size(), 0);
    for (auto& band : passes_) {
      std::sort(band.begin(), band.end(),
                [this](const Pass& p, const Pass& q) { return left_of(p, q); });
      for (int r = 0; r < static_cast<int>(band.size()); ++r) rank_[band[r].curve][band[r].position] = r;
    }
  }

  int strips(int edge) const { return static_cast<int>(passes_[edge].size()) + 1; }
  int strip_piece(int edge, int strip) const { return strip_base_[edge] + strip; }

  void number_strips() {
    strip_base_.assign(graph_.edge_count(), 0);
    int next = 0;
    for (int e = 0; e < graph_.edge_count(); ++e) {
      strip_base_[e] = next;
      next += strips(e);
    }
    piece_count_ = next;
  }

  // Endpoint index, counterclockwise along the attachment of half-edge `h`,
  // of the strand with rank r in the band of h.
  int endpoint_index(Dart h, int r) const {
    const int k = strips(graph_.edge_of(h)) - 1;
    return h == graph_.positive_dart(graph_.edge_of(h)) ? k - 1 - r : r;
  }
  // Strip met as sub-interval j counterclockwise along the attachment of h.
  int strip_at(Dart h, int j) const {
    const int k = strips(graph_.edge_of(h)) - 1;
    return h == graph_.positive_dart(graph_.edge_of(h)) ? k - j : j;
  }

  // Cuts each vertex disk along the chords the curves draw through it; every
  // region is a new piece, glued to the strip ends on its boundary.
  void cut_disks() {
    const int vertices = graph_.vertex_count();
    // first endpoint position of each half-edge's attachment around its vertex
    std::vector<int> first(graph_.dart_count(), 0);
    std::vector<int> total(vertices, 0);
    for (int v = 0; v < vertices; ++v) {
      for (int s = 0; s < 3; ++s) {
        first[3 * v + s] = total[v];
        total[v] += strips(graph_.edge_of(3 * v + s)) - 1;
      }
    }
    std::vector<std::vector<int>> chord(vertices);
    for (int v = 0; v < vertices; ++v) chord[v].assign(total[v], -1);
    for (std::size_t c = 0; c < curves_.size(); ++c) {
      const auto& w = curves_[c].darts();
      const long n = static_cast<long>(w.size());
      for (long i = 0; i < n; ++i) {
        const Dart in = graph_.reverse(w[i]);
        const Dart out = at(w, i + 1);
        const int v = graph_.tail(out);
        const int p = first[in] + endpoint_index(in, rank_[c][i]);
        const int q = first[out] + endpoint_index(out, rank_[c][(i + 1) % n]);
        chord[v][p] = q;
        chord[v][q] = p;
      }
    }

    strip_ends_.clear();
    for (int v = 0; v < vertices; ++v) {
      const int n = total[v];
      // Arc a runs from endpoint a to endpoint a + 1; a region is an orbit of
      // a -> chord(a + 1).
      std::vector<int> region(std::max(n, 1), -1);
      for (int a = 0; a < static_cast<int>(region.size()); ++a) {
        if (region[a] != -1) continue;
        const int piece = piece_count_++;
        for (int b = a; region[b] == -1; b = n == 0 ? b : chord[v][(b + 1) % n]) region[b] = piece;
      }
      for (int s = 0; s < 3; ++s) {
        const Dart h = 3 * v + s;
        const int k = strips(graph_.edge_of(h)) - 1;
        for (int j = 0; j <= k; ++j) {
          // sub-interval j sits just after endpoint first + j - 1
          int arc = n == 0 ? 0 : (first[h] + j - 1 + n) % n;
          strip_ends_.push_back({strip_piece(graph_.edge_of(h), strip_at(h, j)), region[arc]});
        }
      }
    }
  }

  std::vector<ComplementComponent> assemble() const {
    DisjointSets sets(piece_count_);
    for (const auto& [strip, region] : strip_ends_) sets.unite(strip, region);

    std::vector<int> slot(piece_count_, -1);
    std::vector<ComplementComponent> out;
    for (int p = 0; p < piece_count_; ++p) {
      const int root = sets.find(p);
      if (slot[root] == -1) {
        slot[root] = static_cast<int>(out.size());
        out.emplace_back();
      }
      ++out[slot[root]].euler_characteristic;
    }
    for (const auto& end : strip_ends_) --out[slot[sets.find(end.first)]].euler_characteristic;

    for (int f = 0; f < graph_.face_count(); ++f) {
      const Dart d = graph_.face(f).front();
      const int e = graph_.edge_of(d);
      const int strip = d == graph_.positive_dart(e) ? 0 : strips(e) - 1;
      ComplementComponent& comp = out[slot[sets.find(strip_piece(e, strip))]];
      ++comp.cusps;
      comp.cusp_faces.push_back(f);
    }
    for (int c = 0; c < static_cast<int>(curves_.size()); ++c) {
      const Dart d = curves_[c][0];
      const int e = graph_.edge_of(d);
      const int r = rank_[c][0];
      const bool forward = d == graph_.positive_dart(e);
      const int left = forward ? r : r + 1;
      const int right = forward ? r + 1 : r;
      out[slot[sets.find(strip_piece(e, left))]].sides.emplace_back(c, 0);
      out[slot[sets.find(strip_piece(e, right))]].sides.emplace_back(c, 1);
    }
    for (ComplementComponent& comp : out) {
      comp.boundaries = static_cast<int>(comp.sides.size());
      comp.genus = (2 - comp.euler_characteristic - comp.cusps - comp.boundaries) / 2;
    }
    return out;
  }

  const RibbonGraph& graph_;
  std::span<const ClosedWalk> curves_;
  std::vector<std::vector<Pass>> passes_;
  std::vector<std::vector<int>> rank_;
  std::vector<int> strip_base_;
  int piece_count_ = 0;
  std::vector<std::pair<int, int>> strip_ends_;  // (strip piece, region piece)
};

}  // namespace

int crossing_number(const RibbonGraph& graph, const ClosedWalk& a, const ClosedWalk& b) {
  const std::vector<Dart> ra = primitive_root(a.darts());
  if (is_rotation(ra, primitive_root(b.darts())) ||
      is_rotation(ra, primitive_root(reversed(graph, b.darts())))) {
    throw Error(ErrorKind::kSameClass, "walks represent the same class");
  }
  return linked_segments(graph, a.darts(), b.darts(), false) +
         linked_segments(graph, a.darts(), reversed(graph, b.darts()), false);
}

int self_crossings(const RibbonGraph& graph, const ClosedWalk& walk) {
  const auto& w = walk.darts();
  // Each crossing is seen once from either strand.
  return (linked_segments(graph, w, w, true) + linked_segments(graph, w, reversed(graph, w), false)) / 2;
}

std::vector<ComplementComponent> cut_along(const RibbonGraph& graph,
                                           std::span<const ClosedWalk> curves) {
  for (std::size_t i = 0; i < curves.size(); ++i) {
    require_essential(graph, curves[i]);
    if (self_crossings(graph, curves[i]) != 0) {
      throw Error(ErrorKind::kNotSimple, "curve " + std::to_string(i) + " crosses itself");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (crossing_number(graph, curves[i], curves[j]) != 0) {
        throw Error(ErrorKind::kNotSimple,
                    "curves " + std::to_string(j) + " and " + std::to_string(i) + " cross");
      }
    }
  }
  return Cutter(graph, curves).run();
}

std::vector<ComplementComponent> cut_along(const RibbonGraph& graph, const ClosedWalk& curve) {
  return cut_along(graph, std::span<const ClosedWalk>(&curve, 1));
}

ClassificationResult classify_systoles(const RibbonGraph& graph,
                                       std::span<const GeodesicClass> systoles) {
  const std::size_t k = systoles.size();
  ClassificationResult result;
  result.labels.resize(k);
  result.crossings.assign(k, std::vector<int>(k, 0));

  for (std::size_t i = 0; i < k; ++i) {
    result.crossings[i][i] = self_crossings(graph, systoles[i].walk);
    for (std::size_t j = 0; j < i; ++j) {
      result.crossings[i][j] = result.crossings[j][i] =
          crossing_number(graph, systoles[i].walk, systoles[j].walk);
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    SystoleClassification& label = result.labels[i];
    label.simple = result.crossings[i][i] == 0;
    if (!label.simple || systoles[i].peripheral) continue;
    for (const ComplementComponent& comp : cut_along(graph, systoles[i].walk)) {
      if (comp.genus == 0 && comp.cusps == 2 && comp.boundaries == 1) {
        label.label = SystoleLabel::kA;
        label.bounded_cusps = comp.cusp_faces;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    SystoleClassification& label = result.labels[i];
    if (!label.simple || label.label == SystoleLabel::kA || systoles[i].peripheral) continue;
    for (std::size_t j = 0; j < k && !label.partner; ++j) {
      const SystoleClassification& other = result.labels[j];
      if (j == i || !other.simple || other.label == SystoleLabel::kA || systoles[j].peripheral ||
          result.crossings[i][j] != 0) {
        continue;
      }
      const ClosedWalk pair[] = {systoles[i].walk, systoles[j].walk};
      for (const ComplementComponent& comp : cut_along(graph, pair)) {
        const bool from_both =
            std::any_of(comp.sides.begin(), comp.sides.end(), [](auto s) { return s.first == 0; }) &&
            std::any_of(comp.sides.begin(), comp.sides.end(), [](auto s) { return s.first == 1; });
        if (comp.genus == 0 && comp.cusps == 1 && comp.boundaries == 2 && from_both) {
          label.label = SystoleLabel::kB;
          label.partner = j;
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace cuspsys
