#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "brute_force.hpp"
#include "egocount/error.hpp"
#include "egocount/estimation.hpp"
#include "egocount/generators.hpp"
#include "egocount/pipeline.hpp"

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

const Graph kK4 = Graph::from_edges(4, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

CountingPlan unannotated_plan(const Pattern& p, NeighborhoodMode mode) {
  auto o = automorphism_orbits(p);
  return CountingPlan(p, o, CompositionMatrix::unannotated(o.multiplicities), mode);
}

// Straight double sum over j != k, kept deliberately naive.
double ht_reference(const std::vector<double>& t, const std::vector<double>& p,
                    const std::vector<double>& joint, double m) {
  const std::size_t n = t.size();
  double v = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    v += (1 / (p[j] * p[j]) - 1 / p[j]) * (t[j] / m) * (t[j] / m);
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      v += (1 / (p[j] * p[k]) - 1 / joint[j * n + k]) * (t[j] / m) * (t[k] / m);
    }
  }
  return v;
}

}  // namespace

TEST(RoleOccupancy, CensusOnK4) {
  std::vector<RoleDegreeVector> d(4, RoleDegreeVector{3});
  std::vector<double> p(4, 1.0);
  EXPECT_DOUBLE_EQ(estimate_role_occupancy(d, p, 3).estimate, 4.0);
}

TEST(RoleOccupancy, SingleEgo) {
  std::vector<RoleDegreeVector> d = {{6}};
  std::vector<double> p = {0.5};
  EXPECT_DOUBLE_EQ(estimate_role_occupancy(d, p, 3).estimate, 4.0);
}

TEST(RoleOccupancy, Errors) {
  std::vector<double> t = {1.0};
  std::vector<double> zero = {0.0};
  std::vector<double> half = {0.5};
  EXPECT_EQ(code_of([&] { estimate_role_occupancy_totals(t, half, 0); }),
            ErrorCode::kEmptyObservableSet);
  EXPECT_EQ(code_of([&] { estimate_role_occupancy_totals(t, zero, 1); }),
            ErrorCode::kInvalidArgument);
}

TEST(RoleOccupancy, ScaleEquivariance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    std::vector<double> t(n), scaled(n), p(n);
    const double c = 0.5 + static_cast<double>(rng() % 7);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<double>(rng() % 20);
      scaled[i] = c * t[i];
      p[i] = unit(rng);
    }
    const int m = 1 + static_cast<int>(rng() % 4);
    auto a = estimate_role_occupancy_totals(t, p, m).estimate;
    auto b = estimate_role_occupancy_totals(scaled, p, m).estimate;
    EXPECT_NEAR(b, c * a, 1e-9 * std::max(1.0, b));
    auto va = variance_ht(t, p, JointInclusion::independent(), m).value;
    auto vb = variance_ht(scaled, p, JointInclusion::independent(), m).value;
    EXPECT_NEAR(vb, c * c * va, 1e-9 * std::max(1.0, vb));
  }
}

TEST(HorvitzThompson, CensusIsZero) {
  std::vector<double> t = {3, 3, 3, 3}, p(4, 1.0);
  EXPECT_DOUBLE_EQ(variance_ht(t, p, JointInclusion::uniform_without_replacement(4, 4), 3).value, 0.0);
  EXPECT_DOUBLE_EQ(variance_ht(t, p, JointInclusion::matrix(4, std::vector<double>(16, 1.0)), 3).value,
                   0.0);
}

TEST(HorvitzThompson, IndependentDropsCrossTerms) {
  std::vector<double> t = {4, 1, 7}, p = {0.2, 0.5, 0.8};
  double expected = 0.0;
  for (int i = 0; i < 3; ++i) expected += (1 / (p[i] * p[i]) - 1 / p[i]) * (t[i] / 2) * (t[i] / 2);
  EXPECT_NEAR(variance_ht(t, p, JointInclusion::independent(), 2).value, expected, 1e-12);
}

TEST(HorvitzThompson, ShortcutMatchesDoubleSum) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t N = 20 + rng() % 30, n = 2 + rng() % 15;
    std::vector<double> t(n), p(n, double(n) / N);
    for (auto& x : t) x = static_cast<double>(rng() % 30);
    const double pjk = double(n) * (n - 1) / (double(N) * (N - 1));
    std::vector<double> joint(n * n, pjk);
    auto fast = variance_ht(t, p, JointInclusion::uniform_without_replacement(N, n), 3);
    const double slow = ht_reference(t, p, joint, 3);
    EXPECT_NEAR(fast.value, std::max(0.0, slow), 1e-8 * std::max(1.0, std::abs(slow)));
    auto explicit_matrix = variance_ht(t, p, JointInclusion::matrix(n, joint), 3);
    EXPECT_NEAR(explicit_matrix.value, fast.value, 1e-8 * std::max(1.0, fast.value));
  }
}

TEST(HorvitzThompson, WithReplacementJoint) {
  std::vector<double> per_draw = {0.1, 0.3, 0.05};
  const std::size_t draws = 4;
  auto joint = JointInclusion::with_replacement(per_draw, draws);
  std::vector<double> p(3);
  for (int i = 0; i < 3; ++i) p[i] = 1 - std::pow(1 - per_draw[i], draws);
  // Inclusion-exclusion: P(j and k) = 1 - P(no j) - P(no k) + P(neither).
  const double expected = 1 - std::pow(0.9, 4) - std::pow(0.7, 4) + std::pow(0.6, 4);
  EXPECT_NEAR(joint(0, 1, p[0], p[1]), expected, 1e-15);
  EXPECT_NEAR(joint(1, 2, p[1], p[2]), 1 - std::pow(0.7, 4) - std::pow(0.95, 4) + std::pow(0.65, 4),
              1e-15);
}

TEST(HorvitzThompson, NegativeValueIsTruncatedAndFlagged) {
  std::vector<double> t = {1, 1}, p = {0.5, 0.5};
  auto v = variance_ht(t, p, JointInclusion::matrix(2, {0.5, 0.1, 0.1, 0.5}), 1);
  EXPECT_DOUBLE_EQ(v.value, 0.0);
  EXPECT_TRUE(v.truncated);
  auto ok = variance_ht(t, p, JointInclusion::independent(), 1);
  EXPECT_FALSE(ok.truncated);
  EXPECT_NEAR(ok.value, 4.0, 1e-12);
}

TEST(BrewerHanif, Examples) {
  std::vector<double> t = {3, 5, 2, 8}, w(4, 1.0);
  const double census = estimate_role_occupancy_totals(t, w, 2).estimate;
  EXPECT_DOUBLE_EQ(variance_brewer_hanif(t, w, 4, 2, census), 0.0);

  std::vector<double> equal = {4, 4, 4}, p(3, 0.3);
  const double est = estimate_role_occupancy_totals(equal, p, 2).estimate;
  EXPECT_NEAR(variance_brewer_hanif(equal, p, 10, 2, est), 0.0, 1e-9);

  std::vector<double> one = {4};
  std::vector<double> one_p = {0.3};
  EXPECT_EQ(code_of([&] { variance_brewer_hanif(one, one_p, 10, 2, 1.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(BrewerHanif, WeightsKnownUpToScale) {
  std::vector<double> t = {3, 9, 1, 6}, w = {2, 5, 1, 3}, w10 = {20, 50, 10, 30};
  EXPECT_NEAR(variance_brewer_hanif(t, w, 40, 2, 30.0), variance_brewer_hanif(t, w10, 40, 2, 30.0),
              1e-9);
}

TEST(UniqueCounting, Examples) {
  std::vector<double> pi = {0.25};
  EXPECT_DOUBLE_EQ(estimate_unique_counting(pi, 3).estimate, 4.0);
  std::vector<double> bad = {0.0};
  EXPECT_EQ(code_of([&] { estimate_unique_counting(bad, 3); }), ErrorCode::kInvalidArgument);
}

TEST(Pipeline, CensusOnK4) {
  auto plan = unannotated_plan(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  EgoSampler sampler(kK4, SampleDesign::uis(false));
  auto sample = sampler.draw(4, 1);
  auto egonets = collect_egonets(kK4, sampler, sample, plan.mode(), 2);
  auto ro = estimate(egonets, plan, {});
  EXPECT_DOUBLE_EQ(ro.estimate, 4.0);
  ASSERT_TRUE(ro.variance.has_value());
  EXPECT_DOUBLE_EQ(*ro.variance, 0.0);
  EXPECT_EQ(ro.variance_method, VarianceMethod::kHorvitzThompson);

  EstimateOptions uc;
  uc.estimator = EstimatorKind::kUniqueCounting;
  auto u = estimate(egonets, plan, uc);
  EXPECT_DOUBLE_EQ(u.estimate, 4.0);
  EXPECT_EQ(u.copies_observed, 4u);
  EXPECT_FALSE(u.variance.has_value());
  uc.variance = VarianceMethod::kHorvitzThompson;
  EXPECT_EQ(code_of([&] { estimate(egonets, plan, uc); }), ErrorCode::kUnsupportedDesign);
}

TEST(Pipeline, RandomWalkDefaultsToBrewerHanif) {
  Graph g = generators::barabasi_albert(60, 2, 3);
  auto plan = unannotated_plan(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  EgoSampler sampler(g, SampleDesign::random_walk(2));
  auto egonets = collect_egonets(g, sampler, sampler.draw(20, 4), plan.mode(), 1);
  auto r = estimate(egonets, plan, {});
  EXPECT_EQ(r.variance_method, VarianceMethod::kBrewerHanif);
  EstimateOptions ht;
  ht.variance = VarianceMethod::kHorvitzThompson;
  EXPECT_EQ(code_of([&] { estimate(egonets, plan, ht); }), ErrorCode::kUnsupportedDesign);
}

// Census estimation is exact for every estimator on random annotated graphs.
TEST(Pipeline, CensusExactOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto tiny = reference::random_tiny(14, 0.35, false, 2, 77 + seed);
    Graph g = tiny.to_graph();
    EgoSampler sampler(g, SampleDesign::uis(false));
    auto all = collect_egonets(g, sampler, sampler.draw(g.vertex_count(), 1),
                               NeighborhoodMode::kUndirectedFull, 1);
    for (auto p : {patterns::clique(3), patterns::path(3), patterns::star(3)}) {
      auto o = automorphism_orbits(p);
      for (const auto& u : enumerate_compositions(o.multiplicities, 2)) {
        CountingPlan plan(p, o, u, NeighborhoodMode::kUndirectedFull);
        const double truth = static_cast<double>(reference::brute_copies(tiny, p, u).size());
        EXPECT_NEAR(estimate(all, plan, {}).estimate, truth, 1e-9);
        EstimateOptions uc;
        uc.estimator = EstimatorKind::kUniqueCounting;
        EXPECT_NEAR(estimate(all, plan, uc).estimate, truth, 1e-9);
      }
    }
  }
}

TEST(Pipeline, DeduplicateKeepsFirstOccurrence) {
  ObservedCopy a{{1, {1, 2, 3}, {}}, {1}};
  ObservedCopy b{{1, {1, 2, 4}, {}}, {1}};
  auto out = deduplicate_copies({a, b, a, b, a});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].key, a.key);
  EXPECT_EQ(out[1].key, b.key);
}
