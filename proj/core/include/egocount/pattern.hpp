#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "egocount/graph.hpp"

namespace egocount {

enum class CountMode {
  kInduced,
  kNonInduced,
  kMaximalClique,  // induced complete pattern, counted only where maximal
};

std::string_view to_string(CountMode mode);
CountMode parse_count_mode(std::string_view text);

inline constexpr int kDefaultOrderCap = 8;

/// The subgraph H being counted.
struct Pattern {
  std::string name;
  bool directed = false;
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // arcs when directed
  CountMode count_mode = CountMode::kInduced;

  /// Throws kInvalidPattern on loops, duplicates, out-of-range ids, order < 2,
  /// or a maximal-clique pattern that is not an undirected complete graph.
  void check() const;
  bool has_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }
  bool is_complete() const;
};

/// Automorphism orbits of a pattern plus, once a neighborhood mode is fixed,
/// the observable roles.
struct OrbitStructure {
  std::vector<int> orbit_of;               // per pattern vertex
  std::vector<std::vector<int>> orbits;    // members, ascending; orbits ordered by min member
  std::vector<int> multiplicities;         // M
  std::vector<std::vector<int>> automorphisms;  // every automorphism as an image vector
  std::vector<int> observable;             // R (filled by with_observable)
  std::vector<int> observable_multiplicities;  // m_j = M[R_j]
  int multiplicity_sum = 0;                // Σ m_j

  int orbit_count() const { return static_cast<int>(orbits.size()); }
  std::size_t automorphism_count() const { return automorphisms.size(); }
};

/// a x p matrix of non-negative counts; entry (i, j) is the number of members
/// of orbit i carrying state j+1.
class CompositionMatrix {
 public:
  CompositionMatrix() = default;
  CompositionMatrix(int rows, int cols, std::vector<int> values);
  static CompositionMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// The unannotated case: one column equal to M.
  static CompositionMatrix unannotated(const std::vector<int>& multiplicities);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int at(int row, int col) const { return values_[static_cast<std::size_t>(row) * cols_ + col]; }
  int row_sum(int row) const;
  /// Column counting a vertex in `state`, or -1 if none does. A single-column
  /// matrix can only equal M, so it ignores states altogether.
  int column_of(State state) const {
    if (cols_ == 1) return 0;
    return state >= 1 && state <= cols_ ? state - 1 : -1;
  }
  int total() const;
  std::span<const int> values() const noexcept { return values_; }
  bool operator==(const CompositionMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> values_;
};

/// Exact orbits by exhaustive permutation search with degree pruning.
/// Throws kPatternTooLarge when order > cap. `observable` is left empty.
OrbitStructure automorphism_orbits(const Pattern& pattern, int cap = kDefaultOrderCap);

/// Orbits whose members are adjacent to every other pattern vertex in the
/// sense the mode requires (spanning, semi-, out- or in-spanning).
std::vector<int> observable_orbits(const OrbitStructure& orbits, const Pattern& pattern,
                                   NeighborhoodMode mode);

/// Orbit structure with R, m and Σm filled for `mode`.
OrbitStructure with_observable(OrbitStructure orbits, const Pattern& pattern,
                               NeighborhoodMode mode);

/// Throws kModeMismatch, kEmptyObservableSet, kDimensionMismatch or
/// kCompositionRowSumMismatch when the pattern cannot be counted as requested.
void validate_pattern(const Pattern& pattern, const OrbitStructure& orbits,
                      const CompositionMatrix& composition, NeighborhoodMode mode);

/// Every composition matrix with `states` columns whose row sums equal M.
std::vector<CompositionMatrix> enumerate_compositions(const std::vector<int>& multiplicities,
                                                      int states);

/// Stable 64-bit identity of (pattern structure, count mode, composition).
std::uint64_t fingerprint(const Pattern& pattern, const CompositionMatrix& composition);

// ---- common patterns ----------------------------------------------------

namespace patterns {
Pattern clique(int order, CountMode mode = CountMode::kInduced);
Pattern maximal_clique(int order);
Pattern path(int order, CountMode mode = CountMode::kInduced);
Pattern cycle(int order, CountMode mode = CountMode::kInduced);
Pattern star(int leaves, CountMode mode = CountMode::kInduced);
}  // namespace patterns

/// A fully specified counting task as read from a pattern file.
struct PatternSpec {
  Pattern pattern;
  NeighborhoodMode mode = NeighborhoodMode::kUndirectedFull;
  bool unannotated = true;
  CompositionMatrix composition;  // filled from M when unannotated
};

/// Parses the JSON pattern format:
/// {"name": .., "directed": false, "order": 3, "edges": [[0,1],..],
///  "count_mode": "induced"|"non_induced"|"maximal_clique",
///  "composition": "unannotated" | [[..],..], "mode": "undirected_full"}
/// `order` may be omitted when every vertex appears in an edge.
PatternSpec parse_pattern_spec(std::string_view json_text);
PatternSpec load_pattern_spec(const std::filesystem::path& path);
std::string pattern_spec_to_json(const PatternSpec& spec);

}  // namespace egocount
