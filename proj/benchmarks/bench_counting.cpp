#include <benchmark/benchmark.h>

#include "egocount/counting.hpp"
#include "egocount/generators.hpp"

using namespace egocount;

namespace {

const Graph& graph() {
  static const Graph g = generators::barabasi_albert(5000, 5, 1);
  return g;
}

CountingPlan plan(const Pattern& p) {
  auto o = automorphism_orbits(p);
  return CountingPlan(p, o, CompositionMatrix::unannotated(o.multiplicities),
                      NeighborhoodMode::kUndirectedFull);
}

// Per-egonet role degrees over the first 200 (highest-degree) vertices.
void run_role_degrees(benchmark::State& state, const Pattern& p) {
  const auto pl = plan(p);
  std::vector<Egonet> egonets;
  for (Vertex v = 0; v < 200; ++v) egonets.push_back(extract_egonet(graph(), v, pl.mode()));
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (const auto& e : egonets) total += total_role_degree(e, pl);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(egonets.size()));
}

void BM_RoleDegreesTriangle(benchmark::State& s) { run_role_degrees(s, patterns::clique(3)); }
void BM_RoleDegreesWedge(benchmark::State& s) { run_role_degrees(s, patterns::path(3)); }
void BM_RoleDegreesStar4(benchmark::State& s) { run_role_degrees(s, patterns::star(3)); }
void BM_RoleDegreesMaximal3(benchmark::State& s) { run_role_degrees(s, patterns::maximal_clique(3)); }
BENCHMARK(BM_RoleDegreesTriangle);
BENCHMARK(BM_RoleDegreesWedge);
BENCHMARK(BM_RoleDegreesStar4);
BENCHMARK(BM_RoleDegreesMaximal3);

void BM_ExtractEgonet(benchmark::State& state) {
  const Graph& g = graph();
  Vertex v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_egonet(g, v, NeighborhoodMode::kUndirectedFull));
    v = (v + 97) % static_cast<Vertex>(g.vertex_count());
  }
}
BENCHMARK(BM_ExtractEgonet);

void BM_UniqueCopiesTriangle(benchmark::State& state) {
  const auto pl = plan(patterns::clique(3));
  const Egonet e = extract_egonet(graph(), 0, pl.mode());
  for (auto _ : state) benchmark::DoNotOptimize(unique_copies(e, pl));
}
BENCHMARK(BM_UniqueCopiesTriangle);

void BM_AutomorphismOrbits(benchmark::State& state) {
  const Pattern p = patterns::clique(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_orbits(p));
}
BENCHMARK(BM_AutomorphismOrbits)->DenseRange(3, 8);

void BM_OracleTriangles(benchmark::State& state) {
  const auto pl = plan(patterns::clique(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_count(graph(), pl.pattern(), pl.orbits(), pl.composition()));
  }
}
BENCHMARK(BM_OracleTriangles)->Unit(benchmark::kMillisecond);

}  // namespace
