#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "brute_force.hpp"
#include "egocount/counting.hpp"
#include "egocount/error.hpp"

using namespace egocount;

namespace {

CountingPlan plan_for(const Pattern& p, NeighborhoodMode mode,
                      std::optional<CompositionMatrix> u = std::nullopt) {
  auto orbits = automorphism_orbits(p);
  if (!u) u = CompositionMatrix::unannotated(orbits.multiplicities);
  return CountingPlan(p, orbits, *u, mode);
}

Graph undirected(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
                 std::vector<OriginalId> ids = {}) {
  return Graph::from_edges(n, false, std::move(edges), {}, std::move(ids));
}

// a=0, b=1, c=2, d=3
const Graph kTrianglePendant = undirected(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
const Graph kK4 = undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

std::set<std::vector<OriginalId>> key_vertices(const std::vector<ObservedCopy>& copies) {
  std::set<std::vector<OriginalId>> out;
  for (const auto& c : copies) out.insert(c.key.vertices);
  return out;
}

// Role degrees of `ego` computed from the whole-graph brute-force copy list.
RoleDegreeVector brute_role_degrees(const std::vector<reference::BruteCopy>& copies,
                                    const OrbitStructure& orbits, Vertex ego) {
  RoleDegreeVector d(orbits.observable.size(), 0);
  for (const auto& c : copies) {
    auto it = std::find(c.vertices.begin(), c.vertices.end(), static_cast<int>(ego));
    if (it == c.vertices.end()) continue;
    const int orbit = c.orbit_of_vertex[it - c.vertices.begin()];
    auto role = std::find(orbits.observable.begin(), orbits.observable.end(), orbit);
    if (role != orbits.observable.end()) ++d[role - orbits.observable.begin()];
  }
  return d;
}

struct Case {
  Pattern pattern;
  NeighborhoodMode mode;
};

std::vector<Case> undirected_cases() {
  std::vector<Case> cases;
  const auto full = NeighborhoodMode::kUndirectedFull;
  cases.push_back({patterns::clique(2), full});
  cases.push_back({patterns::clique(3), full});
  cases.push_back({patterns::path(3), full});
  cases.push_back({patterns::path(3, CountMode::kNonInduced), full});
  for (auto q : reference::undirected_quads()) {
    cases.push_back({q, full});
    q.count_mode = CountMode::kNonInduced;
    cases.push_back({q, full});
  }
  for (int k = 2; k <= 4; ++k) cases.push_back({patterns::maximal_clique(k), full});
  return cases;
}

std::vector<Case> directed_cases() {
  std::vector<Case> cases;
  for (auto mode : {NeighborhoodMode::kDirectedUnion, NeighborhoodMode::kDirectedOut,
                    NeighborhoodMode::kDirectedIn}) {
    for (auto t : reference::directed_triads()) {
      cases.push_back({t, mode});
      t.count_mode = CountMode::kNonInduced;
      cases.push_back({t, mode});
    }
  }
  return cases;
}

bool countable(const Case& c) {
  auto o = automorphism_orbits(c.pattern);
  return !observable_orbits(o, c.pattern, c.mode).empty();
}

}  // namespace

TEST(RoleDegrees, EdgeAtStarCenter) {
  Graph star = undirected(4, {{0, 1}, {0, 2}, {0, 3}});
  auto plan = plan_for(patterns::clique(2), NeighborhoodMode::kUndirectedFull);
  EXPECT_EQ(role_degrees(extract_egonet(star, 0, plan.mode()), plan), (RoleDegreeVector{3}));
}

TEST(RoleDegrees, TriangleInK4) {
  auto plan = plan_for(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_EQ(role_degrees(extract_egonet(kK4, v, plan.mode()), plan), (RoleDegreeVector{3}));
  }
}

TEST(RoleDegrees, InducedTwoPathCenter) {
  auto plan = plan_for(patterns::path(3), NeighborhoodMode::kUndirectedFull);
  EXPECT_EQ(role_degrees(extract_egonet(kTrianglePendant, 2, plan.mode()), plan),
            (RoleDegreeVector{2}));
}

TEST(RoleDegrees, MaximalEdgeAtPendant) {
  auto plan = plan_for(patterns::maximal_clique(2), NeighborhoodMode::kUndirectedFull);
  EXPECT_EQ(role_degrees(extract_egonet(kTrianglePendant, 3, plan.mode()), plan),
            (RoleDegreeVector{1}));
  EXPECT_EQ(role_degrees(extract_egonet(kTrianglePendant, 2, plan.mode()), plan),
            (RoleDegreeVector{1}));
}

TEST(RoleDegrees, ModeMismatch) {
  auto plan = plan_for(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  Graph d = Graph::from_edges(3, true, {{0, 1}, {1, 2}, {2, 0}});
  try {
    role_degrees(extract_egonet(d, 0, NeighborhoodMode::kDirectedUnion), plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModeMismatch);
  }
}

TEST(UniqueCopies, TrianglesInK4) {
  auto plan = plan_for(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  auto from0 = unique_copies(extract_egonet(kK4, 0, plan.mode()), plan);
  EXPECT_EQ(key_vertices(from0),
            (std::set<std::vector<OriginalId>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
  auto both = key_vertices(from0);
  for (const auto& k : key_vertices(unique_copies(extract_egonet(kK4, 1, plan.mode()), plan))) {
    both.insert(k);
  }
  // {0,1,2} and {0,1,3} are seen from both egos: 3 + 3 - 2.
  EXPECT_EQ(both, (std::set<std::vector<OriginalId>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

TEST(UniqueCopies, ObservableMembersListed) {
  auto plan = plan_for(patterns::path(3), NeighborhoodMode::kUndirectedFull);
  Graph path = undirected(3, {{0, 1}, {1, 2}}, {10, 11, 12});
  auto copies = unique_copies(extract_egonet(path, 1, plan.mode()), plan);
  ASSERT_EQ(copies.size(), 1u);
  EXPECT_EQ(copies[0].key.vertices, (std::vector<OriginalId>{10, 11, 12}));
  EXPECT_EQ(copies[0].observable_members, (std::vector<OriginalId>{11}));
}

TEST(UniqueCopies, UnlabeledEgonetRejected) {
  auto plan = plan_for(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  Egonet e = Egonet::from_local(NeighborhoodMode::kUndirectedFull, 3, {{0, 1}, {1, 2}, {0, 2}},
                                {1, 1, 1}, {});
  EXPECT_EQ(total_role_degree(e, plan), 1u);
  try {
    unique_copies(e, plan);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kUnlabeledSample);
  }
}

// One triangle {7,2,4} seen from egos 7 and 4 (and not from 6): per-ego
// totals add to two, the labeled union holds one copy.
TEST(UniqueCopies, SharedCopyCountedOnceInUnion) {
  std::istringstream edges("7 2\n2 4\n4 7\n6 4\n6 5\n");
  Graph g = load_graph(edges, nullptr, false);
  auto plan = plan_for(patterns::clique(3), NeighborhoodMode::kUndirectedFull);
  std::uint64_t total = 0;
  std::set<CopyKey> keys;
  for (OriginalId id : {7, 4, 6}) {
    Egonet e = extract_egonet(g, *g.find_original(id), plan.mode());
    total += total_role_degree(e, plan);
    for (auto& c : unique_copies(e, plan)) keys.insert(c.key);
  }
  EXPECT_EQ(total, 2u);
  ASSERT_EQ(keys.size(), 1u);
  EXPECT_EQ(keys.begin()->vertices, (std::vector<OriginalId>{2, 4, 7}));
}

TEST(MaximalCliques, Examples) {
  auto k4 = enumerate_maximal_cliques(extract_egonet(kK4, 0, NeighborhoodMode::kUndirectedFull));
  EXPECT_EQ(k4, (std::vector<std::vector<LocalVertex>>{{0, 1, 2, 3}}));

  Egonet c = extract_egonet(kTrianglePendant, 2, NeighborhoodMode::kUndirectedFull);
  std::set<std::vector<Vertex>> got;
  for (const auto& clique : enumerate_maximal_cliques(c)) {
    std::vector<Vertex> members;
    for (auto v : clique) members.push_back(c.members()[v]);
    std::sort(members.begin(), members.end());
    got.insert(members);
  }
  EXPECT_EQ(got, (std::set<std::vector<Vertex>>{{0, 1, 2}, {2, 3}}));

  Graph star = undirected(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(enumerate_maximal_cliques(extract_egonet(star, 0, NeighborhoodMode::kUndirectedFull)).size(),
            3u);
}

// Per-ego role degrees match a whole-graph brute force for every vertex, and
// summing them over all vertices gives the copy count times Σm.
TEST(RoleDegrees, MatchBruteForceEverywhere) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (const bool directed : {false, true}) {
      auto tiny = reference::random_tiny(9, directed ? 0.3 : 0.45, directed, 1, 500 + seed);
      Graph g = tiny.to_graph();
      for (const auto& c : directed ? directed_cases() : undirected_cases()) {
        if (!countable(c)) continue;
        auto plan = plan_for(c.pattern, c.mode);
        auto copies = reference::brute_copies(tiny, c.pattern, plan.composition());
        std::uint64_t sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          auto d = role_degrees(extract_egonet(g, v, c.mode), plan);
          ASSERT_EQ(d, brute_role_degrees(copies, plan.orbits(), v))
              << c.pattern.name << " " << to_string(c.mode) << " seed " << seed << " ego " << v;
          for (auto x : d) sum += x;
        }
        EXPECT_EQ(sum, copies.size() * static_cast<std::uint64_t>(plan.multiplicity_sum()));
      }
    }
  }
}

TEST(UniqueCopies, CensusUnionIsEveryCopy) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto tiny = reference::random_tiny(9, 0.45, false, 1, 900 + seed);
    Graph g = tiny.to_graph();
    for (const auto& c : undirected_cases()) {
      if (!countable(c)) continue;
      auto plan = plan_for(c.pattern, c.mode);
      std::set<CopyKey> keys;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (auto& copy : unique_copies(extract_egonet(g, v, c.mode), plan)) keys.insert(copy.key);
      }
      auto copies = reference::brute_copies(tiny, c.pattern, plan.composition());
      EXPECT_EQ(keys.size(), copies.size()) << c.pattern.name << " seed " << seed;
    }
  }
}

TEST(RoleDegrees, NonInducedDominatesInduced) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto tiny = reference::random_tiny(10, 0.5, false, 1, 40 + seed);
    Graph g = tiny.to_graph();
    for (auto q : reference::undirected_quads()) {
      if (!countable({q, NeighborhoodMode::kUndirectedFull})) continue;
      auto induced = plan_for(q, NeighborhoodMode::kUndirectedFull);
      q.count_mode = CountMode::kNonInduced;
      auto non_induced = plan_for(q, NeighborhoodMode::kUndirectedFull);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto e = extract_egonet(g, v, NeighborhoodMode::kUndirectedFull);
        auto a = role_degrees(e, induced), b = role_degrees(e, non_induced);
        for (std::size_t j = 0; j < a.size(); ++j) EXPECT_LE(a[j], b[j]);
      }
    }
  }
}

TEST(RoleDegrees, CompositionsPartitionUnannotatedCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto tiny = reference::random_tiny(11, 0.45, false, 2, 70 + seed);
    Graph g = tiny.to_graph();
    for (const auto& c : undirected_cases()) {
      if (!countable(c)) continue;
      auto whole = plan_for(c.pattern, c.mode);
      std::vector<CountingPlan> parts;
      for (auto& u : enumerate_compositions(whole.orbits().multiplicities, 2)) {
        parts.push_back(plan_for(c.pattern, c.mode, u));
      }
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto e = extract_egonet(g, v, c.mode);
        auto expected = role_degrees(e, whole);
        RoleDegreeVector sum(expected.size(), 0);
        for (const auto& part : parts) {
          auto d = role_degrees(e, part);
          for (std::size_t j = 0; j < d.size(); ++j) sum[j] += d[j];
        }
        EXPECT_EQ(sum, expected) << c.pattern.name << " seed " << seed << " ego " << v;
      }
    }
  }
}

TEST(RoleDegrees, InvariantUnderAlterPermutation) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto tiny = reference::random_tiny(10, 0.5, false, 2, 300 + seed);
    Graph g = tiny.to_graph();
    Egonet e = extract_egonet(g, 0, NeighborhoodMode::kUndirectedFull);
    std::vector<LocalVertex> perm(e.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<std::pair<LocalVertex, LocalVertex>> edges;
    for (auto [a, b] : e.edges()) edges.emplace_back(perm[a], perm[b]);
    std::vector<State> states(e.size());
    std::vector<OriginalId> labels(e.size());
    for (LocalVertex v = 0; v < e.size(); ++v) {
      states[perm[v]] = e.state(v);
      labels[perm[v]] = e.labels()[v];
    }
    Egonet shuffled = Egonet::from_local(NeighborhoodMode::kUndirectedFull, e.size(),
                                         std::move(edges), std::move(states), std::move(labels));
    for (const auto& c : undirected_cases()) {
      if (!countable(c)) continue;
      auto plan = plan_for(c.pattern, c.mode);
      EXPECT_EQ(role_degrees(e, plan), role_degrees(shuffled, plan)) << c.pattern.name;
      std::set<CopyKey> a, b;
      for (auto& x : unique_copies(e, plan)) a.insert(x.key);
      for (auto& x : unique_copies(shuffled, plan)) b.insert(x.key);
      EXPECT_EQ(a, b);
    }
  }
}
