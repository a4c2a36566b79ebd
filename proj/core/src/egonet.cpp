#include "egocount/egonet.hpp"

#include <algorithm>

#include "egocount/error.hpp"

namespace egocount {

namespace {

void build_rows(std::size_t n, std::vector<std::pair<LocalVertex, LocalVertex>>& arcs,
                std::vector<std::uint32_t>& offsets, std::vector<LocalVertex>& targets) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets.assign(n + 1, 0);
  targets.clear();
  targets.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++offsets[u + 1];
    targets.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
}

}  // namespace

Egonet Egonet::from_local(NeighborhoodMode mode, std::size_t size,
                          std::vector<std::pair<LocalVertex, LocalVertex>> edges,
                          std::vector<State> states, std::vector<OriginalId> labels,
                          std::vector<Vertex> members) {
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "egonet needs at least the ego");
  if (states.empty()) states.assign(size, 1);
  if (states.size() != size) throw Error(ErrorCode::kInvalidArgument, "egonet state count mismatch");
  if (!labels.empty() && labels.size() != size) {
    throw Error(ErrorCode::kInvalidArgument, "egonet label count mismatch");
  }
  if (!members.empty() && members.size() != size) {
    throw Error(ErrorCode::kInvalidArgument, "egonet member count mismatch");
  }
  Egonet e;
  e.mode_ = mode;
  e.members_ = std::move(members);
  e.labels_ = std::move(labels);
  e.states_ = std::move(states);

  const bool directed = e.directed();
  std::vector<std::pair<LocalVertex, LocalVertex>> out_arcs;
  std::vector<std::pair<LocalVertex, LocalVertex>> in_arcs;
  out_arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= size || v >= size) throw Error(ErrorCode::kInvalidArgument, "egonet edge out of range");
    if (u == v) continue;
    out_arcs.emplace_back(u, v);
    if (directed) {
      in_arcs.emplace_back(v, u);
    } else {
      out_arcs.emplace_back(v, u);
    }
  }
  build_rows(size, out_arcs, e.out_offsets_, e.out_targets_);
  if (directed) build_rows(size, in_arcs, e.in_offsets_, e.in_targets_);

  if (size <= kDenseLimit) {
    const std::size_t words = (size + 63) / 64;
    e.dense_.assign(size * words, 0);
    for (LocalVertex u = 0; u < size; ++u) {
      for (LocalVertex v : e.out(u)) e.dense_[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return e;
}

bool Egonet::has_edge(LocalVertex u, LocalVertex v) const {
  if (!dense_.empty()) {
    const std::size_t words = (size() + 63) / 64;
    return (dense_[u * words + v / 64] >> (v % 64)) & 1U;
  }
  auto row = out(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<LocalVertex, LocalVertex>> Egonet::edges() const {
  std::vector<std::pair<LocalVertex, LocalVertex>> result;
  for (LocalVertex u = 0; u < size(); ++u) {
    for (LocalVertex v : out(u)) {
      if (directed() || u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

std::vector<Vertex> measured_neighborhood(const Graph& g, Vertex ego, NeighborhoodMode mode) {
  if (!mode_fits(mode, g.directed())) {
    throw Error(ErrorCode::kModeMismatch, std::string("mode ") + std::string(to_string(mode)) +
                                              " does not fit a " +
                                              (g.directed() ? "directed" : "undirected") + " graph");
  }
  if (ego >= g.vertex_count()) throw Error(ErrorCode::kInvalidArgument, "ego out of range");
  std::span<const Vertex> row;
  switch (mode) {
    case NeighborhoodMode::kUndirectedFull:
    case NeighborhoodMode::kDirectedUnion: row = g.neighbors(ego); break;
    case NeighborhoodMode::kDirectedOut: row = g.out_neighbors(ego); break;
    case NeighborhoodMode::kDirectedIn: row = g.in_neighbors(ego); break;
  }
  return {row.begin(), row.end()};
}

Egonet extract_egonet(const Graph& g, Vertex ego, NeighborhoodMode mode) {
  std::vector<Vertex> members;
  {
    auto alters = measured_neighborhood(g, ego, mode);
    members.reserve(alters.size() + 1);
    members.push_back(ego);
    members.insert(members.end(), alters.begin(), alters.end());
  }
  // Alters are sorted, so local ids for them are found by binary search.
  auto local_of = [&](Vertex v) -> std::optional<LocalVertex> {
    if (v == ego) return 0;
    auto it = std::lower_bound(members.begin() + 1, members.end(), v);
    if (it == members.end() || *it != v) return std::nullopt;
    return static_cast<LocalVertex>(it - members.begin());
  };

  std::vector<std::pair<LocalVertex, LocalVertex>> edges;
  std::vector<State> states;
  std::vector<OriginalId> labels;
  states.reserve(members.size());
  labels.reserve(members.size());
  for (LocalVertex i = 0; i < members.size(); ++i) {
    const Vertex v = members[i];
    states.push_back(g.state(v));
    labels.push_back(g.original_id(v));
    for (Vertex w : g.out_neighbors(v)) {
      auto j = local_of(w);
      if (!j) continue;
      if (g.directed() || i < *j) edges.emplace_back(i, *j);
    }
  }
  const std::size_t size = members.size();
  return Egonet::from_local(mode, size, std::move(edges), std::move(states), std::move(labels),
                            std::move(members));
}

}  // namespace egocount
