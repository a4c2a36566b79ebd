#include "egocount/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "egocount/error.hpp"

namespace egocount::generators {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool directed) {
  if (p < 0.0 || p > 1.0) throw Error(ErrorCode::kInvalidArgument, "edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, directed, std::move(edges));
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) throw Error(ErrorCode::kInvalidArgument, "need 1 <= m < n");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> endpoints;  // each vertex once per incident edge
  // Seed with a clique on m+1 vertices.
  for (Vertex u = 0; u <= m; ++u) {
    for (Vertex v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Vertex> chosen;
  for (Vertex v = static_cast<Vertex>(m + 1); v < n; ++v) {
    chosen.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (chosen.size() < m) {
      Vertex t = endpoints[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (Vertex t : chosen) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, false, std::move(edges));
}

Graph chung_lu(std::size_t n, double mean_degree, double gamma, double max_degree,
               std::uint64_t seed) {
  if (n < 2 || mean_degree <= 0.0 || gamma <= 2.0) {
    throw Error(ErrorCode::kInvalidArgument, "chung_lu needs n >= 2, mean degree > 0, gamma > 2");
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(i + 1), -1.0 / (gamma - 1.0));
  const double scale = mean_degree * static_cast<double>(n) / std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x = std::min(x * scale, max_degree);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit(rng) < std::min(1.0, w[u] * w[v] / total)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, false, std::move(edges));
}

std::vector<State> random_states(std::size_t n, const std::vector<double>& probabilities,
                                 std::uint64_t seed) {
  if (probabilities.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one state");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> pick(probabilities.begin(), probabilities.end());
  std::vector<State> states(n);
  for (auto& s : states) s = pick(rng) + 1;
  return states;
}

Graph with_states(const Graph& g, std::vector<State> states) {
  if (states.size() != g.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "one state per vertex is required");
  }
  std::vector<OriginalId> ids(g.original_ids().begin(), g.original_ids().end());
  return Graph::from_edges(g.vertex_count(), g.directed(), g.edges(), std::move(states),
                           std::move(ids));
}

}  // namespace egocount::generators
