#include <benchmark/benchmark.h>

#include "tvgkit/domination.hpp"
#include "tvgkit/engine.hpp"
#include "tvgkit/journey.hpp"
#include "tvgkit/metrics.hpp"
#include "tvgkit/scenarios.hpp"

using namespace tvgkit;

namespace {

void BM_EnumerateMds(benchmark::State& state) {
  const StaticGraph g = named_graph("cycle", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_dominating_sets(g));
}
BENCHMARK(BM_EnumerateMds)->DenseRange(6, 14, 4);

void BM_FindSmdsTree(benchmark::State& state) {
  const StaticGraph g = named_graph("path", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_smds(g));
}
BENCHMARK(BM_FindSmdsTree)->DenseRange(6, 14, 4);

void BM_EarliestArrival(benchmark::State& state) {
  RandomCotParams p;
  p.nodes = static_cast<std::size_t>(state.range(0));
  p.extra_edge_probability = 0.3;
  p.seed = 7;
  const Tvg t = generate_random_cot(p);
  const auto vs = t.graph().vertices();
  for (auto _ : state) {
    benchmark::DoNotOptimize(earliest_arrival(t, *vs.begin(), *vs.rbegin(), 5, HopRule::kDeliverable));
  }
}
BENCHMARK(BM_EarliestArrival)->RangeMultiplier(2)->Range(4, 32);

void BM_SimulateGk(benchmark::State& state) {
  const Tvg g = generate_gk(static_cast<int>(state.range(0)));
  const auto config = parse_protocol("ug");
  for (auto _ : state) {
    const Trace t = run(g, config, 200);
    benchmark::DoNotOptimize(measure(g, config, t));
  }
}
BENCHMARK(BM_SimulateGk)->DenseRange(1, 7, 2);

}  // namespace

// the packaged libbenchmark_main.a is LTO bytecode from another gcc release
BENCHMARK_MAIN();
