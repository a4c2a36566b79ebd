#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egocount/graph.hpp"

namespace egocount {

enum class DesignKind {
  kUisWithReplacement,
  kUisWithoutReplacement,
  kWis,         // independent draws with probability proportional to a known weight
  kRandomWalk,  // simple random walk, optionally thinned
};

std::string_view to_string(DesignKind kind);
/// Accepts "uis-wr", "uis-wor", "wis", "rw" (underscores also accepted).
DesignKind parse_design_kind(std::string_view text);

struct SampleDesign {
  DesignKind kind = DesignKind::kUisWithoutReplacement;
  /// WIS only. Without-replacement WIS is rejected with kUnsupportedDesign.
  bool with_replacement = true;
  /// WIS per-vertex weights; empty means degree weights.
  std::vector<double> weights;
  /// Random walk: keep one state every `thinning` steps after `burn_in` steps
  /// (default 10 * thinning); start uniformly at random unless `start` is set.
  std::size_t thinning = 1;
  std::optional<std::size_t> burn_in;
  std::optional<Vertex> start;

  static SampleDesign uis(bool with_replacement);
  static SampleDesign wis(std::vector<double> weights = {});
  static SampleDesign random_walk(std::size_t thinning = 1,
                                  std::optional<std::size_t> burn_in = std::nullopt);

  std::size_t effective_burn_in() const { return burn_in.value_or(10 * thinning); }
  bool draws_with_replacement() const {
    return kind != DesignKind::kUisWithoutReplacement && with_replacement;
  }
};

/// One probability sample of egos.
struct EgoSample {
  DesignKind kind = DesignKind::kUisWithoutReplacement;
  std::uint64_t seed = 0;
  std::size_t population_size = 0;
  std::vector<Vertex> draws;         // n' draws in draw order
  std::vector<Vertex> unique_egos;   // S: ascending, no duplicates
  std::vector<double> inclusion;     // p_i per unique ego
  std::vector<double> per_draw;      // p'_i per unique ego
  /// p'_v = per_draw_scale * weight(v) for any vertex v of the population.
  double per_draw_scale = 0.0;

  std::size_t n() const noexcept { return unique_egos.size(); }
  std::size_t n_prime() const noexcept { return draws.size(); }
};

/// Draws samples from a fixed graph under a fixed design. Construction
/// validates the design once (weights, connectivity for random walks).
/// Each draw() is a deterministic function of its seed.
class EgoSampler {
 public:
  EgoSampler(const Graph& g, SampleDesign design);

  EgoSample draw(std::size_t n_prime, std::uint64_t seed) const;

  const SampleDesign& design() const noexcept { return design_; }
  std::size_t population_size() const noexcept { return g_->vertex_count(); }
  /// Sampling weight of v (1 under uniform designs, degree under random walks).
  double weight(Vertex v) const { return weights_.empty() ? 1.0 : weights_[v]; }
  /// Per-draw selection probability of any vertex given a realized sample.
  double per_draw_probability(const EgoSample& sample, Vertex v) const {
    return sample.per_draw_scale * weight(v);
  }

 private:
  const Graph* g_;
  SampleDesign design_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;  // WIS
  double weight_total_ = 0.0;
};

EgoSample sample_egos(const Graph& g, const SampleDesign& design, std::size_t n_prime,
                      std::uint64_t seed);

std::vector<double> degree_weights(const Graph& g);

/// Probability that a given vertex is in the sample at least once.
/// UIS-WR: 1-(1-1/N)^n'; UIS-WOR: n'/N; WIS: 1-(1-p')^n' with `per_draw`.
double node_inclusion_prob(DesignKind kind, std::size_t population_size, std::size_t n_prime,
                           std::optional<double> per_draw = std::nullopt);

/// Hansen-Hurwitz plug-in p'_j ≈ w_j (Σ_k 1/w_k) / (n' N) over all draws,
/// repetitions included. Capped at 1.
double hansen_hurwitz_per_draw(std::span<const double> draw_weights, double weight,
                               std::size_t population_size);
/// 1-(1-p'_j)^n' with the Hansen-Hurwitz p'_j.
double hansen_hurwitz_inclusion(std::span<const double> draw_weights, double weight,
                                std::size_t n_prime, std::size_t population_size);

/// Probability that a copy with Σm observable-role occupants is sampled.
/// Uniform WR: 1-(1-Σm/N)^n'; uniform WOR: 1-Π_{k<n'} (N-Σm-k)/(N-k);
/// non-uniform WR (WIS, RW): 1-(1-Σ p'_j)^n' over the occupants' per-draw
/// probabilities.
double subgraph_inclusion_prob(DesignKind kind, std::size_t population_size, std::size_t n_prime,
                               int multiplicity_sum,
                               std::span<const double> member_per_draw = {});

}  // namespace egocount
