#include "egocount/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "egocount/error.hpp"

namespace egocount {

std::string_view to_string(NeighborhoodMode mode) {
  switch (mode) {
    case NeighborhoodMode::kUndirectedFull: return "undirected_full";
    case NeighborhoodMode::kDirectedUnion: return "directed_union";
    case NeighborhoodMode::kDirectedOut: return "directed_out";
    case NeighborhoodMode::kDirectedIn: return "directed_in";
  }
  return "unknown";
}

NeighborhoodMode parse_mode(std::string_view text) {
  if (text == "undirected_full" || text == "full" || text == "undirected") {
    return NeighborhoodMode::kUndirectedFull;
  }
  if (text == "directed_union" || text == "union") return NeighborhoodMode::kDirectedUnion;
  if (text == "directed_out" || text == "out") return NeighborhoodMode::kDirectedOut;
  if (text == "directed_in" || text == "in") return NeighborhoodMode::kDirectedIn;
  throw Error(ErrorCode::kParse, "unknown neighborhood mode '" + std::string(text) + "'");
}

bool mode_fits(NeighborhoodMode mode, bool directed) {
  return (mode == NeighborhoodMode::kUndirectedFull) != directed;
}

Graph::Csr Graph::build_csr(std::size_t n, std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  csr.targets.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++csr.offsets[u + 1];
    csr.targets.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) csr.offsets[i + 1] += csr.offsets[i];
  return csr;
}

Graph Graph::from_edges(std::size_t n, bool directed,
                        std::vector<std::pair<Vertex, Vertex>> edges,
                        std::vector<State> states,
                        std::vector<OriginalId> original_ids) {
  Graph g;
  g.directed_ = directed;
  if (states.empty()) states.assign(n, 1);
  if (original_ids.empty()) {
    original_ids.resize(n);
    for (std::size_t i = 0; i < n; ++i) original_ids[i] = static_cast<OriginalId>(i);
  }
  if (states.size() != n || original_ids.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "state/id vectors do not match vertex count");
  }
  State max_state = 1;
  for (State s : states) {
    if (s < 1) throw Error(ErrorCode::kInvalidArgument, "vertex state must be >= 1");
    max_state = std::max(max_state, s);
  }

  std::vector<std::pair<Vertex, Vertex>> out_arcs;
  out_arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    if (u == v) continue;
    out_arcs.emplace_back(u, v);
    if (!directed) out_arcs.emplace_back(v, u);
  }
  if (directed) {
    std::vector<std::pair<Vertex, Vertex>> in_arcs;
    std::vector<std::pair<Vertex, Vertex>> union_arcs;
    in_arcs.reserve(out_arcs.size());
    union_arcs.reserve(2 * out_arcs.size());
    for (const auto& [u, v] : out_arcs) {
      in_arcs.emplace_back(v, u);
      union_arcs.emplace_back(u, v);
      union_arcs.emplace_back(v, u);
    }
    g.in_ = build_csr(n, in_arcs);
    g.union_ = build_csr(n, union_arcs);
  }
  g.out_ = build_csr(n, out_arcs);
  g.states_ = std::move(states);
  g.state_count_ = max_state;
  g.original_ids_ = std::move(original_ids);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto row = out_.row(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::optional<Vertex> Graph::find_original(OriginalId id) const {
  auto it = std::find(original_ids_.begin(), original_ids_.end(), id);
  if (it == original_ids_.end()) return std::nullopt;
  return static_cast<Vertex>(it - original_ids_.begin());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : out_neighbors(u)) {
      if (directed_ || u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<State> states;
  std::vector<OriginalId> ids;
  states.reserve(vertices.size());
  ids.reserve(vertices.size());
  for (Vertex v : vertices) {
    states.push_back(g.state(v));
    ids.push_back(g.original_id(v));
    for (Vertex w : g.out_neighbors(v)) {
      if (local[w] == kAbsent) continue;
      if (g.directed() || v < w) edges.emplace_back(local[v], local[w]);
    }
  }
  return Graph::from_edges(vertices.size(), g.directed(), std::move(edges), std::move(states),
                           std::move(ids));
}

namespace {

std::vector<std::uint32_t> component_labels(const Graph& g, std::uint32_t& count) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.vertex_count(), kUnset);
  count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnset) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::uint32_t count = 0;
  component_labels(g, count);
  return count <= 1;
}

Graph largest_component(const Graph& g) {
  if (g.vertex_count() == 0) return g;
  std::uint32_t count = 0;
  auto label = component_labels(g, count);
  std::vector<std::size_t> size(count, 0);
  std::vector<OriginalId> min_id(count, 0);
  std::vector<bool> seen(count, false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto c = label[v];
    ++size[c];
    if (!seen[c] || g.original_id(v) < min_id[c]) min_id[c] = g.original_id(v);
    seen[c] = true;
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < count; ++c) {
    if (size[c] > size[best] || (size[c] == size[best] && min_id[c] < min_id[best])) best = c;
  }
  if (count == 1) return g;
  std::vector<Vertex> keep;
  keep.reserve(size[best]);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (label[v] == best) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace egocount
