#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "egocount/graph.hpp"

namespace egocount {

using LocalVertex = std::uint32_t;

/// One sampled egocentric network: the ego (always local vertex 0), its
/// measured neighborhood, every edge among those vertices and their states.
///
/// An egonet extracted from a population graph also records the population
/// ids of its members. A replayed egonet only carries what was measured;
/// when alters are anonymized the egonet is unlabeled.
class Egonet {
 public:
  Egonet() = default;

  /// Builds an egonet from local data. `labels` holds original ids (ego first)
  /// or is empty for an unlabeled record. Edges use local indices.
  static Egonet from_local(NeighborhoodMode mode, std::size_t size,
                           std::vector<std::pair<LocalVertex, LocalVertex>> edges,
                           std::vector<State> states, std::vector<OriginalId> labels,
                           std::vector<Vertex> members = {});

  NeighborhoodMode mode() const noexcept { return mode_; }
  bool directed() const noexcept { return mode_ != NeighborhoodMode::kUndirectedFull; }
  std::size_t size() const noexcept { return states_.size(); }

  /// Population ids (ego first, alters ascending); empty for replayed records.
  std::span<const Vertex> members() const noexcept { return members_; }
  bool labeled() const noexcept { return !labels_.empty(); }
  std::span<const OriginalId> labels() const noexcept { return labels_; }
  State state(LocalVertex v) const { return states_[v]; }
  std::span<const State> states() const noexcept { return states_; }

  std::span<const LocalVertex> out(LocalVertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const LocalVertex> in(LocalVertex v) const {
    if (!directed()) return out(v);
    return {in_targets_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  bool has_edge(LocalVertex u, LocalVertex v) const;

  /// Edge count (arcs when directed).
  std::size_t edge_count() const noexcept {
    return out_targets_.size() / (directed() ? 1 : 2);
  }
  /// (u,v) with u<v when undirected, every arc otherwise.
  std::vector<std::pair<LocalVertex, LocalVertex>> edges() const;

 private:
  static constexpr std::size_t kDenseLimit = 4096;

  NeighborhoodMode mode_ = NeighborhoodMode::kUndirectedFull;
  std::vector<Vertex> members_;
  std::vector<OriginalId> labels_;
  std::vector<State> states_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<LocalVertex> out_targets_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<LocalVertex> in_targets_;
  std::vector<std::uint64_t> dense_;  // row-major adjacency bits, small egonets only
};

/// Vertices in N^e(ego) for the given mode, ascending, excluding the ego.
std::vector<Vertex> measured_neighborhood(const Graph& g, Vertex ego, NeighborhoodMode mode);

/// Egonet of `ego` in `g`. Throws kModeMismatch if the mode does not fit the
/// graph's directedness and kInvalidArgument for an out-of-range ego.
Egonet extract_egonet(const Graph& g, Vertex ego, NeighborhoodMode mode);

}  // namespace egocount
