#include "cuspsys/geodesics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

#include "cuspsys/error.hpp"

namespace cuspsys {

namespace {

std::vector<Dart> least_rotation(const std::vector<Dart>& seq) {
  std::vector<Dart> best = seq;
  std::vector<Dart> candidate(seq.size());
  for (std::size_t shift = 1; shift < seq.size(); ++shift) {
    std::rotate_copy(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(shift), seq.end(),
                     candidate.begin());
    if (candidate < best) best = candidate;
  }
  return best;
}

std::vector<Dart> reversed_darts(const std::vector<Dart>& darts, const RibbonGraph& graph) {
  std::vector<Dart> out;
  out.reserve(darts.size());
  for (auto it = darts.rbegin(); it != darts.rend(); ++it) out.push_back(graph.reverse(*it));
  return out;
}

bool is_primitive(const std::vector<Dart>& darts) {
  const std::size_t k = darts.size();
  for (std::size_t period = 1; period < k; ++period) {
    if (k % period != 0) continue;
    bool repeats = true;
    for (std::size_t i = period; i < k && repeats; ++i) repeats = darts[i] == darts[i - period];
    if (repeats) return false;
  }
  return true;
}

struct ClassRecord {
  std::int64_t trace = 0;
  std::uint64_t hits = 0;
};

using ClassMap = std::map<std::vector<Dart>, ClassRecord>;

std::vector<GeodesicClass> finalize(const ClassMap& found, const RibbonGraph& graph) {
  std::vector<GeodesicClass> out;
  out.reserve(found.size());
  for (const auto& [key, rec] : found) {
    ClosedWalk walk(key, graph);
    TurnWord word = canonical(word_of_walk(walk, graph));
    GeodesicClass cls{std::move(word), std::move(walk), rec.trace, std::nullopt, false, rec.hits};
    cls.peripheral = cls.word.is_peripheral();
    if (!cls.peripheral) cls.length = length_from_trace(cls.trace);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
    return std::tie(a.trace, a.word, a.walk.darts()) < std::tie(b.trace, b.word, b.walk.darts());
  });
  return out;
}

// Depth-first search over non-backtracking walks from one start dart.
// Every walk prefix with letter product P closes into a word whose trace is
// at least tr(P), since all letters are entrywise >= I and P >= 0; the search
// cuts a branch once that lower bound exceeds the budget.
class WalkSearch {
 public:
  WalkSearch(const RibbonGraph& graph, const EnumerationOptions& options,
             std::atomic<std::uint64_t>& shared_nodes, std::atomic<bool>& aborted)
      : graph_(graph), opt_(options), shared_nodes_(shared_nodes), aborted_(aborted) {}

  void run(Dart start) {
    start_ = start;
    run_limit_[0] = static_cast<int>(graph_.face(graph_.face_of(start)).size());
    run_limit_[1] = static_cast<int>(graph_.face(graph_.face_of(graph_.reverse(start))).size());
    path_.assign(1, start);
    if (!count_node()) return;
    search(UnimodularMatrix{}, 0, Turn::kLeft);
  }

  void flush() {
    shared_nodes_ += pending_;
    pending_ = 0;
  }

  ClassMap& found() { return found_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // `run` counts the letters so far if they are all equal to `run_letter`,
  // and is -1 once both letters occur.
  void search(const UnimodularMatrix& product, int run, Turn run_letter) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    const Dart last = path_.back();
    for (const Turn turn : {Turn::kLeft, Turn::kRight}) {
      const Dart next = turn == Turn::kLeft ? graph_.left_successor(last) : graph_.right_successor(last);
      const UnimodularMatrix extended = product.times(turn);
      const std::int64_t tr = extended.trace();
      int next_run = -1;
      if (path_.size() == 1) {
        next_run = 1;
      } else if (run >= 0 && turn == run_letter) {
        next_run = run + 1;
      }
      const Turn next_letter = path_.size() == 1 ? turn : run_letter;

      if (next == start_ && tr <= opt_.trace_max) record(tr);

      if (opt_.prune && next < start_) continue;
      std::int64_t bound = tr;
      // A single-letter prefix that has already gone once around its face can
      // only close primitively after a letter of the other kind:
      // tr(X^m Y) = m + 2.
      if (next_run >= 0 && next_run >= run_limit_[static_cast<int>(next_letter)]) {
        bound = std::max<std::int64_t>(bound, next_run + 2);
      }
      if (opt_.prune) {
        // Closing the walk takes at least one more letter.
        bound = std::max(bound, std::min(extended.times(Turn::kLeft).trace(),
                                         extended.times(Turn::kRight).trace()));
      }
      if (bound > opt_.trace_max) continue;

      if (!count_node()) return;
      path_.push_back(next);
      search(extended, next_run, next_letter);
      path_.pop_back();
    }
  }

  // A node past the cap is not visited and not counted.
  bool count_node() {
    if (aborted_.load(std::memory_order_relaxed)) return false;
    if (shared_nodes_.load(std::memory_order_relaxed) + pending_ + 1 > opt_.node_cap) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    if (++pending_ >= 4096) flush();
    return true;
  }

  void record(std::int64_t tr) {
    if (!is_primitive(path_)) return;
    std::vector<Dart> key = least_rotation(path_);
    std::vector<Dart> back = least_rotation(reversed_darts(path_, graph_));
    if (back < key) key = std::move(back);
    ClassRecord& rec = found_[std::move(key)];
    rec.trace = tr;
    ++rec.hits;
  }

  const RibbonGraph& graph_;
  const EnumerationOptions& opt_;
  std::atomic<std::uint64_t>& shared_nodes_;
  std::atomic<bool>& aborted_;

  Dart start_ = 0;
  int run_limit_[2] = {0, 0};
  std::vector<Dart> path_;
  ClassMap found_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
};

void merge_into(ClassMap& total, ClassMap& part) {
  for (auto& [key, rec] : part) {
    ClassRecord& dst = total[key];
    dst.trace = rec.trace;
    dst.hits += rec.hits;
  }
}

}  // namespace

ClosedWalk::ClosedWalk(std::vector<Dart> darts, const RibbonGraph& graph) : darts_(std::move(darts)) {
  if (darts_.empty()) throw Error(ErrorKind::kInvalidWalk, "closed walk must be nonempty");
  for (Dart d : darts_) {
    if (d < 0 || d >= graph.dart_count()) {
      throw Error(ErrorKind::kInvalidWalk, "dart " + std::to_string(d) + " is not in the graph");
    }
  }
  for (std::size_t i = 0; i < darts_.size(); ++i) {
    turn_between(graph, darts_[i], darts_[(i + 1) % darts_.size()]);
  }
}

ClosedWalk ClosedWalk::reversed(const RibbonGraph& graph) const {
  ClosedWalk out;
  out.darts_ = reversed_darts(darts_, graph);
  return out;
}

std::vector<Dart> ClosedWalk::class_key(const RibbonGraph& graph) const {
  std::vector<Dart> key = least_rotation(darts_);
  std::vector<Dart> back = least_rotation(reversed_darts(darts_, graph));
  return back < key ? back : key;
}

bool ClosedWalk::primitive() const { return is_primitive(darts_); }

Turn turn_between(const RibbonGraph& graph, Dart in, Dart out) {
  if (graph.head(in) != graph.tail(out)) {
    throw Error(ErrorKind::kInvalidWalk, "dart " + std::to_string(out) +
                                             " does not start where dart " + std::to_string(in) +
                                             " ends");
  }
  if (out == graph.reverse(in)) {
    throw Error(ErrorKind::kBacktracking,
                "walk backtracks along dart " + std::to_string(in));
  }
  return out == graph.right_successor(in) ? Turn::kRight : Turn::kLeft;
}

TurnWord word_of_walk(const ClosedWalk& walk, const RibbonGraph& graph) {
  std::vector<Turn> letters;
  letters.reserve(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    letters.push_back(turn_between(graph, walk[i], walk[(i + 1) % walk.size()]));
  }
  return TurnWord(std::move(letters));
}

std::optional<ClosedWalk> walk_from_word(const RibbonGraph& graph, Dart start, const TurnWord& word) {
  std::vector<Dart> darts{start};
  Dart d = start;
  for (std::size_t i = 0; i < word.size(); ++i) {
    d = word[i] == Turn::kLeft ? graph.left_successor(d) : graph.right_successor(d);
    if (i + 1 < word.size()) darts.push_back(d);
  }
  if (d != start) return std::nullopt;
  return ClosedWalk(std::move(darts), graph);
}

ClosedWalk face_walk(const RibbonGraph& graph, int face) { return ClosedWalk(graph.face(face), graph); }

SurfaceTopology topology(const RibbonGraph& graph) {
  SurfaceTopology top;
  top.triangles = graph.vertex_count();
  top.edges = graph.edge_count();
  top.cusps = graph.face_count();
  top.genus = (2 - (top.cusps - top.edges + top.triangles)) / 2;
  return top;
}

EnumerationResult enumerate_classes(const RibbonGraph& graph, const EnumerationOptions& options) {
  std::atomic<std::uint64_t> shared_nodes{0};
  std::atomic<bool> aborted{false};
  const int threads = std::max(1, std::min(options.threads, graph.dart_count()));

  std::vector<ClassMap> parts(threads);
  std::vector<std::uint64_t> node_counts(threads, 0);
  auto worker = [&](int index) {
    for (Dart start = index; start < graph.dart_count(); start += threads) {
      WalkSearch search(graph, options, shared_nodes, aborted);
      search.run(start);
      search.flush();
      node_counts[index] += search.nodes();
      merge_into(parts[index], search.found());
      if (aborted) break;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
  }

  ClassMap all;
  EnumerationResult result;
  for (int i = 0; i < threads; ++i) {
    merge_into(all, parts[i]);
    result.nodes += node_counts[i];
  }
  result.complete = !aborted;
  if (!result.complete && !options.allow_partial) {
    throw Error(ErrorKind::kBudgetExceeded,
                "enumeration exceeded the node cap of " + std::to_string(options.node_cap) +
                    " at trace bound " + std::to_string(options.trace_max));
  }
  result.classes = finalize(all, graph);
  return result;
}

std::vector<GeodesicClass> enumerate_by_length(const RibbonGraph& graph, int max_length) {
  ClassMap found;
  std::vector<Dart> path;
  auto visit = [&](auto&& self, Dart start) -> void {
    const Dart last = path.back();
    for (const Dart next : {graph.left_successor(last), graph.right_successor(last)}) {
      if (next == start && is_primitive(path)) {
        ClosedWalk walk(path, graph);
        ClassRecord& rec = found[walk.class_key(graph)];
        const TurnWord word = word_of_walk(walk, graph);
        try {
          rec.trace = trace(word);
        } catch (const Error&) {
          rec.trace = std::numeric_limits<std::int64_t>::max();
        }
        ++rec.hits;
      }
      if (static_cast<int>(path.size()) < max_length) {
        path.push_back(next);
        self(self, start);
        path.pop_back();
      }
    }
  };
  for (Dart start = 0; start < graph.dart_count(); ++start) {
    path.assign(1, start);
    visit(visit, start);
  }
  return finalize(found, graph);
}

SystoleResult systole(const RibbonGraph& graph, const SystoleOptions& options) {
  const SurfaceTopology top = topology(graph);
  const Signature sig{top.genus, top.cusps};

  SystoleResult result;
  std::optional<TraceBudget> certified;
  try {
    certified = certified_trace_budget(sig);
  } catch (const Error&) {
    certified.reset();
  }
  if (options.trace_max) {
    result.budget = {*options.trace_max, 0.0, "user"};
    result.certified = certified && *options.trace_max >= certified->trace_max;
  } else if (certified) {
    result.budget = *certified;
    result.certified = true;
  } else {
    throw Error(ErrorKind::kTraceBudgetRequired,
                "no systole bound applies to signature (" + std::to_string(sig.genus) + ", " +
                    std::to_string(sig.cusps) + "); supply a trace bound");
  }

  EnumerationOptions enum_opts;
  enum_opts.trace_max = result.budget.trace_max;
  enum_opts.node_cap = options.node_cap;
  enum_opts.threads = options.threads;
  enum_opts.allow_partial = options.allow_partial;
  EnumerationResult found = enumerate_classes(graph, enum_opts);
  result.nodes = found.nodes;
  result.complete = found.complete;

  for (GeodesicClass& cls : found.classes) {
    if (cls.peripheral) continue;
    if (!result.systoles.empty() && cls.trace > result.trace) break;
    result.trace = cls.trace;
    result.systoles.push_back(std::move(cls));
  }
  if (result.systoles.empty()) {
    if (!found.complete) {
      throw Error(ErrorKind::kBudgetExceeded, "node cap reached before any essential class was found");
    }
    throw Error(ErrorKind::kNoEssentialCurve, "no essential closed geodesic with trace <= " +
                                                  std::to_string(result.budget.trace_max));
  }
  result.length = length_from_trace(result.trace);
  return result;
}

std::size_t kissing_number(const RibbonGraph& graph, const SystoleOptions& options) {
  return systole(graph, options).systoles.size();
}

}  // namespace cuspsys
