#include <benchmark/benchmark.h>

#include "egocount/evaluation.hpp"
#include "egocount/generators.hpp"
#include "egocount/pipeline.hpp"

using namespace egocount;

namespace {

const Graph& graph() {
  static const Graph g = generators::barabasi_albert(5000, 5, 2);
  return g;
}

const CountingPlan& triangle() {
  static const CountingPlan plan = [] {
    auto p = patterns::clique(3);
    auto o = automorphism_orbits(p);
    return CountingPlan(p, o, CompositionMatrix::unannotated(o.multiplicities),
                        NeighborhoodMode::kUndirectedFull);
  }();
  return plan;
}

void BM_Draw(benchmark::State& state, SampleDesign design) {
  EgoSampler sampler(graph(), std::move(design));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(static_cast<std::size_t>(state.range(0)), ++seed));
}
BENCHMARK_CAPTURE(BM_Draw, uis_wor, SampleDesign::uis(false))->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_Draw, wis, SampleDesign::wis())->Arg(100)->Arg(1000);
BENCHMARK_CAPTURE(BM_Draw, rw, SampleDesign::random_walk(4))->Arg(100)->Arg(1000);

// Sample, extract, count and estimate from scratch.
void BM_EstimatePipeline(benchmark::State& state) {
  EgoSampler sampler(graph(), SampleDesign::uis(false));
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto sample = sampler.draw(n, ++seed);
    auto egonets = collect_egonets(graph(), sampler, sample, NeighborhoodMode::kUndirectedFull, 1);
    benchmark::DoNotOptimize(estimate(egonets, triangle(), {}));
  }
}
BENCHMARK(BM_EstimatePipeline)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

// One simulation replication once per-vertex totals are cached.
void BM_CensusReplication(benchmark::State& state) {
  EgoCensus::Options options;
  options.unique_copies = true;
  static const EgoCensus census(graph(), NeighborhoodMode::kUndirectedFull, {&triangle()}, options);
  EgoSampler sampler(graph(), SampleDesign::uis(false));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto sample = sampler.draw(static_cast<std::size_t>(state.range(0)), ++seed);
    benchmark::DoNotOptimize(census.role_occupancy(0, sample));
    benchmark::DoNotOptimize(census.unique_counting(0, sample, sampler));
  }
}
BENCHMARK(BM_CensusReplication)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
