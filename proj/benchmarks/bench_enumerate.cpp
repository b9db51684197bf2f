#include <benchmark/benchmark.h>

#include "cuspsys/curve_topology.hpp"
#include "cuspsys/geodesics.hpp"
#include "cuspsys/presets.hpp"
#include "cuspsys/ribbon_graph.hpp"
#include "cuspsys/turn_word.hpp"

using namespace cuspsys;

namespace {

const RibbonGraph& torus_graph() {
  static const RibbonGraph g(torus16());
  return g;
}

// args: trace_max, prune
void BM_EnumerateTorus16(benchmark::State& state) {
  EnumerationOptions o;
  o.trace_max = state.range(0);
  o.prune = state.range(1) != 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const EnumerationResult r = enumerate_classes(torus_graph(), o);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.classes.data());
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_EnumerateTorus16)->ArgsProduct({{34, 60, 120}, {0, 1}})->Unit(benchmark::kMillisecond);

// args: genus, prune
void BM_EnumerateGenus(benchmark::State& state) {
  const RibbonGraph g(genus_surface(static_cast<int>(state.range(0))));
  EnumerationOptions o;
  o.trace_max = 34;
  o.prune = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(g, o).classes.size());
}
BENCHMARK(BM_EnumerateGenus)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EnumerateThreads(benchmark::State& state) {
  EnumerationOptions o;
  o.trace_max = 200;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(torus_graph(), o).classes.size());
}
BENCHMARK(BM_EnumerateThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SystoleGenus(benchmark::State& state) {
  const RibbonGraph g(genus_surface(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(systole(g).systoles.size());
}
BENCHMARK(BM_SystoleGenus)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyTorus16(benchmark::State& state) {
  const SystoleResult s = systole(torus_graph());
  for (auto _ : state) benchmark::DoNotOptimize(classify_systoles(torus_graph(), s.systoles).labels.size());
}
BENCHMARK(BM_ClassifyTorus16)->Unit(benchmark::kMillisecond);

void BM_Trace(benchmark::State& state) {
  const TurnWord w = TurnWord::parse("(L4R)4L3R2");
  for (auto _ : state) benchmark::DoNotOptimize(trace(w));
}
BENCHMARK(BM_Trace);

}  // namespace

BENCHMARK_MAIN();
