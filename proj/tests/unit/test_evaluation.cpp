#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "brute_force.hpp"
#include "egocount/error.hpp"
#include "egocount/evaluation.hpp"
#include "egocount/generators.hpp"

using namespace egocount;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

std::string small_spec(const std::string& design, const std::string& grid, int replications,
                       const std::string& extra = "") {
  return R"({"graph":{"generator":"barabasi_albert","n":40,"m":3,"seed":4,
             "states":{"probabilities":[0.5,0.5],"seed":2}},
            "patterns":[{"id":"tri","name":"k3","edges":[[0,1],[1,2],[0,2]]},
                        {"id":"wedge","name":"p3","edges":[[0,1],[1,2]]},
                        {"family":"maximal_cliques","min_order":2,"max_order":4}],
            "design":)" + design + R"(,"grid":)" + grid +
         R"(,"replications":)" + std::to_string(replications) + extra + "}";
}

}  // namespace

TEST(Metrics, Nrmse) {
  std::vector<double> exact = {10, 10, 10}, spread = {9, 11};
  EXPECT_DOUBLE_EQ(nrmse(exact, 10), 0.0);
  EXPECT_DOUBLE_EQ(nrmse(spread, 10), 0.1);
  EXPECT_EQ(code_of([&] { nrmse(spread, 0); }), ErrorCode::kUndefinedMetric);
  EXPECT_DOUBLE_EQ(rmse(spread, 0), std::sqrt(101.0));
}

TEST(Metrics, Nmae) {
  std::vector<double> x = {1, 1}, xhat = {2, 0};
  EXPECT_DOUBLE_EQ(nmae(x, x), 0.0);
  EXPECT_DOUBLE_EQ(nmae(xhat, x), 1.0);
  std::vector<double> zeros = {0, 0};
  EXPECT_EQ(code_of([&] { nmae(xhat, zeros); }), ErrorCode::kUndefinedMetric);
}

TEST(Metrics, Median) {
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
}

TEST(DoublingGrid, Shape) {
  EXPECT_EQ(doubling_grid(5, 40), (std::vector<std::size_t>{5, 10, 20, 40}));
  EXPECT_EQ(doubling_grid(5, 50), (std::vector<std::size_t>{5, 10, 20, 40, 50}));
  EXPECT_EQ(doubling_grid(3, 3), (std::vector<std::size_t>{3}));
  EXPECT_EQ(code_of([] { doubling_grid(0, 4); }), ErrorCode::kInvalidArgument);
}

TEST(Simulation, CensusGridHasNoError) {
  auto spec = parse_simulation_spec(
      small_spec(R"({"kind":"uis-wor"})", "[40]", 3, R"(,"estimators":["ro","uc"])"));
  auto report = run_simulation(spec, 2);
  ASSERT_FALSE(report.rows.empty());
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.grid, 40u);
    EXPECT_NEAR(row.value, 0.0, 1e-12) << row.pattern << " " << row.metric << " " << row.estimator;
    EXPECT_DOUBLE_EQ(row.nodes_pct, 100.0);
    EXPECT_DOUBLE_EQ(row.edges_pct, 100.0);
  }
}

TEST(Simulation, OneRowPerPatternGridAndMetric) {
  auto spec = parse_simulation_spec(
      small_spec(R"({"kind":"uis-wor"})", R"({"doubling":{"start":5,"stop":40}})", 5));
  auto report = run_simulation(spec, 1);
  // 5 patterns (tri, wedge, three maximal cliques) x {nrmse, bias}, plus one NMAE
  // row per group (tri, wedge, maximal_cliques), per grid point.
  EXPECT_EQ(spec.patterns.size(), 5u);
  EXPECT_EQ(report.rows.size(), 4u * (5 * 2 + 3));
  std::set<std::tuple<std::string, std::size_t, std::string>> keys;
  for (const auto& row : report.rows) keys.insert({row.pattern, row.grid, row.metric});
  EXPECT_EQ(keys.size(), report.rows.size());
  auto csv = simulation_to_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "pattern,estimator,grid,metric,value,noise,truth,mean_estimate,flag,nodes_pct,edges_pct");
}

TEST(Simulation, CompositionFamilyPartitionsTruth) {
  auto spec = parse_simulation_spec(R"({"graph":{"generator":"erdos_renyi","n":30,"p":0.3,"seed":9,
        "states":{"probabilities":[0.4,0.6],"seed":3}},
      "patterns":[{"family":"maximal_cliques","min_order":3,"max_order":3,"compositions":true},
                  {"family":"maximal_cliques","min_order":3,"max_order":3,"group":"all"}],
      "design":{"kind":"uis-wor"},"grid":[30],"replications":1})");
  auto report = run_simulation(spec, 1);
  ASSERT_EQ(report.truth.size(), 5u);  // four compositions of three vertices over two states
  EXPECT_EQ(report.truth[0] + report.truth[1] + report.truth[2] + report.truth[3], report.truth[4]);
}

TEST(Simulation, ZeroTruthFallsBackToRmse) {
  auto spec = parse_simulation_spec(R"({"graph":{"generator":"barabasi_albert","n":30,"m":1,"seed":1},
      "patterns":[{"id":"tri","edges":[[0,1],[1,2],[0,2]]}],
      "design":{"kind":"uis-wor"},"grid":[10],"replications":4})");
  auto report = run_simulation(spec, 1);
  ASSERT_EQ(report.truth[0], 0u);
  EXPECT_EQ(report.rows[0].metric, "rmse");
  EXPECT_EQ(report.rows[0].flag, "zero_truth");
}

TEST(Simulation, DeterministicAcrossWorkerCounts) {
  for (const std::string design :
       {R"({"kind":"uis-wr"})", R"({"kind":"wis","weights":"degree"})", R"({"kind":"rw","thinning":2})"}) {
    auto spec = parse_simulation_spec(
        small_spec(design, "[4,8]", 20, R"(,"estimators":["ro","uc"],"seed":11)"));
    const auto one = simulation_to_csv(run_simulation(spec, 1));
    EXPECT_EQ(one, simulation_to_csv(run_simulation(spec, 4)));
    EXPECT_EQ(one, simulation_to_csv(run_simulation(spec, 16)));
    EXPECT_EQ(simulation_to_json(spec, run_simulation(spec, 1)),
              simulation_to_json(spec, run_simulation(spec, 16)));
  }
}

TEST(Simulation, SpecErrors) {
  EXPECT_EQ(code_of([] { parse_simulation_spec("{"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] {
              parse_simulation_spec(small_spec(R"({"kind":"uis-wor"})", "[41]", 2));
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] {
              parse_simulation_spec(small_spec(R"({"kind":"uis-wor"})", "[4]", 2)
                                        .replace(1, 0, R"("mode":"out",)"));
            }),
            ErrorCode::kModeMismatch);
}

// Census shortcuts agree with recounting the sampled egonets directly.
TEST(EgoCensus, MatchesDirectComputation) {
  Graph g = generators::with_states(generators::erdos_renyi(35, 0.2, 6),
                                    generators::random_states(35, {0.5, 0.5}, 1));
  auto p = patterns::clique(3);
  auto o = automorphism_orbits(p);
  CountingPlan plan(p, o, CompositionMatrix::unannotated(o.multiplicities),
                    NeighborhoodMode::kUndirectedFull);
  EgoCensus::Options options;
  options.unique_copies = true;
  options.coverage = true;
  EgoCensus census(g, NeighborhoodMode::kUndirectedFull, {&plan}, options);
  EgoSampler sampler(g, SampleDesign::uis(false));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = sampler.draw(8, seed);
    double ro = 0.0;
    std::set<CopyKey> keys;
    std::set<Vertex> nodes;
    for (std::size_t i = 0; i < s.n(); ++i) {
      Egonet e = extract_egonet(g, s.unique_egos[i], plan.mode());
      ro += total_role_degree(e, plan) / s.inclusion[i];
      for (auto& c : unique_copies(e, plan)) keys.insert(c.key);
      nodes.insert(e.members().begin(), e.members().end());
    }
    ro /= plan.multiplicity_sum();
    EXPECT_NEAR(census.role_occupancy(0, s), ro, 1e-9);
    const double pi = subgraph_inclusion_prob(DesignKind::kUisWithoutReplacement, 35, 8, 3);
    EXPECT_NEAR(census.unique_counting(0, s, sampler), keys.size() / pi, 1e-9);

    std::size_t covered_edges = 0;
    for (auto [u, v] : g.edges()) {
      for (Vertex ego : s.unique_egos) {
        const bool has_u = u == ego || g.has_edge(ego, u);
        const bool has_v = v == ego || g.has_edge(ego, v);
        if (has_u && has_v) {
          ++covered_edges;
          break;
        }
      }
    }
    auto c = census.coverage(s);
    EXPECT_DOUBLE_EQ(c.nodes, nodes.size() / 35.0);
    EXPECT_DOUBLE_EQ(c.edges, covered_edges / static_cast<double>(g.edge_count()));
  }
}
