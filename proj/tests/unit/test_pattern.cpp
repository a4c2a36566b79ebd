#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "egocount/error.hpp"
#include "egocount/pattern.hpp"

using namespace egocount;

namespace {

Pattern make(int order, std::vector<std::pair<int, int>> edges, bool directed = false) {
  Pattern p;
  p.order = order;
  p.directed = directed;
  p.edges = std::move(edges);
  return p;
}

const Pattern kFeedForward = make(3, {{0, 1}, {0, 2}, {1, 2}}, true);
// Two orbits of size two: {0,1} and {2,3}.
const Pattern kTwoByTwo = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

std::vector<int> observable(const Pattern& p, NeighborhoodMode mode) {
  return observable_orbits(automorphism_orbits(p), p, mode);
}

}  // namespace

TEST(Orbits, Triangle) {
  auto o = automorphism_orbits(patterns::clique(3));
  EXPECT_EQ(o.orbit_count(), 1);
  EXPECT_EQ(o.multiplicities, (std::vector<int>{3}));
  EXPECT_EQ(o.automorphism_count(), 6u);
}

TEST(Orbits, Path) {
  auto o = automorphism_orbits(make(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(o.orbits, (std::vector<std::vector<int>>{{0, 2}, {1}}));
  EXPECT_EQ(o.multiplicities, (std::vector<int>{2, 1}));
}

TEST(Orbits, TwoOrbitsOfTwo) {
  auto o = automorphism_orbits(kTwoByTwo);
  EXPECT_EQ(o.orbit_count(), 2);
  EXPECT_EQ(o.multiplicities, (std::vector<int>{2, 2}));
}

TEST(Orbits, FeedForwardHasNoSymmetry) {
  auto o = automorphism_orbits(kFeedForward);
  EXPECT_EQ(o.multiplicities, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(o.automorphism_count(), 1u);
}

TEST(Orbits, TooLarge) {
  EXPECT_EQ(code_of([] { automorphism_orbits(patterns::clique(9)); }), ErrorCode::kPatternTooLarge);
  EXPECT_NO_THROW(automorphism_orbits(patterns::clique(9), 9));
}

TEST(Orbits, AgreeWithExhaustivePermutationSearch) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = 2 + static_cast<int>(rng() % 5);
    const bool directed = rng() % 3 == 0;
    Pattern p;
    p.order = order;
    p.directed = directed;
    for (int u = 0; u < order; ++u) {
      for (int v = 0; v < order; ++v) {
        if (u == v || (!directed && v < u)) continue;
        if (rng() % 2) p.edges.emplace_back(u, v);
      }
    }
    auto expected = reference::brute_orbits(p);
    auto o = automorphism_orbits(p);
    for (int v = 0; v < order; ++v) {
      EXPECT_EQ(o.orbits[o.orbit_of[v]].front(), expected[v]);
    }
  }
}

// Relabeling the pattern permutes orbits but keeps the multiset of sizes and
// the group order.
TEST(Orbits, RelabelingInvariance) {
  std::mt19937_64 rng(11);
  for (const auto& base : reference::undirected_quads()) {
    auto reference = automorphism_orbits(base);
    auto sizes = reference.multiplicities;
    std::sort(sizes.begin(), sizes.end());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(base.order);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Pattern relabeled = base;
      for (auto& [u, v] : relabeled.edges) {
        u = perm[u];
        v = perm[v];
      }
      auto o = automorphism_orbits(relabeled);
      auto got = o.multiplicities;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, sizes) << base.name;
      EXPECT_EQ(o.automorphism_count(), reference.automorphism_count());
      for (int v = 0; v < base.order; ++v) {
        EXPECT_EQ(o.multiplicities[o.orbit_of[perm[v]]],
                  reference.multiplicities[reference.orbit_of[v]]);
      }
    }
  }
}

TEST(Observable, Examples) {
  EXPECT_EQ(observable(patterns::clique(3), NeighborhoodMode::kUndirectedFull),
            (std::vector<int>{0}));
  EXPECT_EQ(observable(make(3, {{0, 1}, {1, 2}}), NeighborhoodMode::kUndirectedFull),
            (std::vector<int>{1}));
  EXPECT_TRUE(observable(patterns::cycle(4), NeighborhoodMode::kUndirectedFull).empty());
  EXPECT_EQ(observable(kFeedForward, NeighborhoodMode::kDirectedOut), (std::vector<int>{0}));
  EXPECT_EQ(observable(kFeedForward, NeighborhoodMode::kDirectedUnion),
            (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(observable(kFeedForward, NeighborhoodMode::kDirectedIn), (std::vector<int>{2}));
}

TEST(Observable, MultiplicitySum) {
  auto o = with_observable(automorphism_orbits(patterns::star(3)), patterns::star(3),
                           NeighborhoodMode::kUndirectedFull);
  EXPECT_EQ(o.observable_multiplicities, (std::vector<int>{1}));
  EXPECT_EQ(o.multiplicity_sum, 1);
  auto k4 = with_observable(automorphism_orbits(patterns::clique(4)), patterns::clique(4),
                            NeighborhoodMode::kUndirectedFull);
  EXPECT_EQ(k4.multiplicity_sum, 4);
}

TEST(Validate, Examples) {
  const auto full = NeighborhoodMode::kUndirectedFull;
  auto k3 = patterns::clique(3);
  EXPECT_NO_THROW(validate_pattern(k3, automorphism_orbits(k3), CompositionMatrix::from_rows({{3}}), full));

  auto c4 = patterns::cycle(4);
  EXPECT_EQ(code_of([&] {
              validate_pattern(c4, automorphism_orbits(c4), CompositionMatrix::from_rows({{4}}), full);
            }),
            ErrorCode::kEmptyObservableSet);

  auto orbits = automorphism_orbits(kTwoByTwo);
  EXPECT_NO_THROW(validate_pattern(kTwoByTwo, orbits,
                                   CompositionMatrix::from_rows({{1, 1, 0}, {0, 0, 2}}), full));
  EXPECT_EQ(code_of([&] {
              validate_pattern(kTwoByTwo, orbits,
                               CompositionMatrix::from_rows({{2, 1, 0}, {0, 1, 0}}), full);
            }),
            ErrorCode::kCompositionRowSumMismatch);
  EXPECT_EQ(code_of([&] {
              validate_pattern(kTwoByTwo, orbits, CompositionMatrix::from_rows({{2}}), full);
            }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] {
              validate_pattern(kFeedForward, automorphism_orbits(kFeedForward),
                               CompositionMatrix::from_rows({{1}, {1}, {1}}), full);
            }),
            ErrorCode::kModeMismatch);
}

TEST(Validate, MalformedPatterns) {
  EXPECT_EQ(code_of([] { make(2, {{0, 0}}).check(); }), ErrorCode::kInvalidPattern);
  EXPECT_EQ(code_of([] { make(2, {{0, 2}}).check(); }), ErrorCode::kInvalidPattern);
  EXPECT_EQ(code_of([] { make(2, {{0, 1}, {1, 0}}).check(); }), ErrorCode::kInvalidPattern);
  Pattern bad_clique = make(3, {{0, 1}, {1, 2}});
  bad_clique.count_mode = CountMode::kMaximalClique;
  EXPECT_EQ(code_of([&] { bad_clique.check(); }), ErrorCode::kInvalidPattern);
}

TEST(Compositions, EnumerationCountsAndRowSums) {
  // Rows with sums 2 and 2 over 3 states: C(4,2)^2 = 36 matrices.
  auto all = enumerate_compositions({2, 2}, 3);
  EXPECT_EQ(all.size(), 36u);
  for (const auto& u : all) {
    EXPECT_EQ(u.row_sum(0), 2);
    EXPECT_EQ(u.row_sum(1), 2);
  }
  EXPECT_EQ(enumerate_compositions({3}, 2).size(), 4u);
}

TEST(PatternSpec, JsonRoundTrip) {
  auto spec = parse_pattern_spec(
      R"({"name":"ffl","directed":true,"edges":[[0,1],[0,2],[1,2]],"mode":"out"})");
  EXPECT_EQ(spec.pattern.order, 3);
  EXPECT_EQ(spec.mode, NeighborhoodMode::kDirectedOut);
  EXPECT_TRUE(spec.unannotated);
  auto again = parse_pattern_spec(pattern_spec_to_json(spec));
  EXPECT_EQ(again.pattern.edges, spec.pattern.edges);
  EXPECT_EQ(again.mode, spec.mode);
  EXPECT_EQ(fingerprint(again.pattern, again.composition), fingerprint(spec.pattern, spec.composition));
  EXPECT_EQ(code_of([] { parse_pattern_spec("{"); }), ErrorCode::kParse);
}

TEST(PatternSpec, FingerprintSeparatesCompositionAndMode) {
  auto k3 = patterns::clique(3);
  auto a = fingerprint(k3, CompositionMatrix::from_rows({{2, 1}}));
  auto b = fingerprint(k3, CompositionMatrix::from_rows({{1, 2}}));
  auto c = fingerprint(patterns::clique(3, CountMode::kNonInduced), CompositionMatrix::from_rows({{2, 1}}));
  EXPECT_NE(a, b);
  EXPECT_NE(a, c);
}
