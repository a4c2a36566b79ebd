#pragma once

#include <cstdint>
#include <vector>

#include "egocount/graph.hpp"

namespace egocount::generators {

/// G(n, p); arcs drawn independently per ordered pair when directed.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool directed = false);

/// Preferential attachment: each new vertex links to `m` distinct earlier
/// vertices chosen proportionally to degree.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Chung-Lu graph with power-law expected degrees w_i ∝ (i+1)^(-1/(γ-1)),
/// scaled to the requested mean degree and capped at `max_degree`.
Graph chung_lu(std::size_t n, double mean_degree, double gamma, double max_degree,
               std::uint64_t seed);

/// Independent states in 1..probabilities.size(), drawn with the given
/// probabilities (normalized).
std::vector<State> random_states(std::size_t n, const std::vector<double>& probabilities,
                                 std::uint64_t seed);

/// Same graph with new per-vertex states.
Graph with_states(const Graph& g, std::vector<State> states);

}  // namespace egocount::generators
