#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "egocount/egonet.hpp"
#include "egocount/graph.hpp"
#include "egocount/pattern.hpp"

namespace egocount {

/// d_j: copies (of the requested composition) in which the ego holds
/// observable role R_j.
using RoleDegreeVector = std::vector<std::uint64_t>;

/// Identity of one copy of a pattern: its members' original ids (sorted) and,
/// for non-induced counting, the sorted edge subset it uses.
struct CopyKey {
  std::uint64_t pattern = 0;
  std::vector<OriginalId> vertices;
  std::vector<std::pair<OriginalId, OriginalId>> edges;

  auto operator<=>(const CopyKey&) const = default;
  bool operator==(const CopyKey&) const = default;
};

struct CopyKeyHash {
  std::size_t operator()(const CopyKey& key) const noexcept;
};

/// A copy seen from one ego, together with every member that occupies an
/// observable role in it (needed for copy inclusion probabilities).
struct ObservedCopy {
  CopyKey key;
  std::vector<OriginalId> observable_members;
};

/// A validated counting task compiled for repeated per-egonet evaluation.
///
/// For every observable role the plan fixes one representative pattern vertex
/// at the ego, orders the remaining vertices connectivity-first and adds
/// ordering constraints from the root's stabilizer so that each copy is
/// produced exactly once. Immutable and safe to share across threads.
class CountingPlan {
 public:
  CountingPlan(Pattern pattern, const OrbitStructure& orbits, CompositionMatrix composition,
               NeighborhoodMode mode);
  /// Convenience: computes the orbit structure itself.
  CountingPlan(Pattern pattern, CompositionMatrix composition, NeighborhoodMode mode);
  explicit CountingPlan(const PatternSpec& spec);

  const Pattern& pattern() const noexcept { return pattern_; }
  const OrbitStructure& orbits() const noexcept { return orbits_; }
  const CompositionMatrix& composition() const noexcept { return composition_; }
  NeighborhoodMode mode() const noexcept { return mode_; }
  int role_count() const noexcept { return static_cast<int>(orbits_.observable.size()); }
  int multiplicity_sum() const noexcept { return orbits_.multiplicity_sum; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Calls `visit(role, image)` once per copy in which the ego occupies an
  /// observable role; image[v] is the local vertex hosting pattern vertex v.
  void for_each_copy(const Egonet& egonet,
                     const std::function<void(int, std::span<const LocalVertex>)>& visit) const;

  struct Check {
    int position;
    std::int8_t forward;   // arc earlier->current: 1 required, 0 forbidden, -1 free
    std::int8_t backward;  // arc current->earlier (directed only)
  };
  struct Step {
    int vertex = 0;
    int orbit = 0;
    int anchor = -1;          // earlier position whose neighbor list seeds candidates
    bool anchor_out = true;   // use out(anchor) rather than in(anchor)
    std::vector<Check> checks;
    std::vector<int> above;   // image must exceed the image at these positions
    std::vector<int> below;   // image must be smaller than the image at these positions
  };
  struct RolePlan {
    int orbit = 0;
    std::vector<Step> steps;  // steps[0] is the root, mapped to the ego
  };

  const std::vector<RolePlan>& role_plans() const noexcept { return roles_; }

  /// Throws kModeMismatch unless the egonet was collected under mode().
  void require_mode(const Egonet& egonet) const;

 private:
  void compile();

  Pattern pattern_;
  OrbitStructure orbits_;
  CompositionMatrix composition_;
  NeighborhoodMode mode_;
  std::uint64_t fingerprint_ = 0;
  std::vector<RolePlan> roles_;
};

RoleDegreeVector role_degrees(const Egonet& egonet, const CountingPlan& plan);

/// Sum of role_degrees over roles.
std::uint64_t total_role_degree(const Egonet& egonet, const CountingPlan& plan);

/// Copies in which the ego occupies an observable role. Requires labels
/// (throws kUnlabeledSample otherwise).
std::vector<ObservedCopy> unique_copies(const Egonet& egonet, const CountingPlan& plan);

/// Every maximal clique of an undirected egonet that contains the ego, each as
/// ascending local ids. Uses pivoted Bron-Kerbosch seeded with the ego.
std::vector<std::vector<LocalVertex>> enumerate_maximal_cliques(const Egonet& egonet);

// ---- whole-graph oracle -------------------------------------------------

struct OracleOptions {
  /// Refuse when the cost heuristic exceeds this many elementary steps.
  double budget = 2e10;
};

/// Rough upper bound on the oracle's search effort.
double oracle_cost(const Graph& g, const Pattern& pattern);

/// Exact number of copies of the pattern with the given composition in the
/// whole graph. Shares no code with the egonet path: general patterns are
/// counted as embeddings from every start vertex divided by |Aut(H)|; maximal
/// cliques by ordered clique listing plus a common-neighbor maximality test.
std::uint64_t exact_count(const Graph& g, const Pattern& pattern, const OrbitStructure& orbits,
                          const CompositionMatrix& composition, const OracleOptions& options = {});

}  // namespace egocount
