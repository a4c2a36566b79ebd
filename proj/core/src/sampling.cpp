#include "egocount/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "egocount/error.hpp"

namespace egocount {

std::string_view to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::kUisWithReplacement: return "uis-wr";
    case DesignKind::kUisWithoutReplacement: return "uis-wor";
    case DesignKind::kWis: return "wis";
    case DesignKind::kRandomWalk: return "rw";
  }
  return "unknown";
}

DesignKind parse_design_kind(std::string_view text) {
  std::string t(text);
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "uis-wr") return DesignKind::kUisWithReplacement;
  if (t == "uis-wor") return DesignKind::kUisWithoutReplacement;
  if (t == "wis" || t == "wis-wr") return DesignKind::kWis;
  if (t == "rw") return DesignKind::kRandomWalk;
  throw Error(ErrorCode::kParse, "unknown sampling design '" + std::string(text) + "'");
}

SampleDesign SampleDesign::uis(bool with_replacement) {
  SampleDesign d;
  d.kind = with_replacement ? DesignKind::kUisWithReplacement : DesignKind::kUisWithoutReplacement;
  d.with_replacement = with_replacement;
  return d;
}

SampleDesign SampleDesign::wis(std::vector<double> weights) {
  SampleDesign d;
  d.kind = DesignKind::kWis;
  d.weights = std::move(weights);
  return d;
}

SampleDesign SampleDesign::random_walk(std::size_t thinning, std::optional<std::size_t> burn_in) {
  SampleDesign d;
  d.kind = DesignKind::kRandomWalk;
  d.thinning = thinning;
  d.burn_in = burn_in;
  return d;
}

std::vector<double> degree_weights(const Graph& g) {
  std::vector<double> w(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) w[v] = static_cast<double>(g.degree(v));
  return w;
}

EgoSampler::EgoSampler(const Graph& g, SampleDesign design) : g_(&g), design_(std::move(design)) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cannot sample from an empty graph");
  switch (design_.kind) {
    case DesignKind::kUisWithReplacement:
    case DesignKind::kUisWithoutReplacement:
      break;
    case DesignKind::kWis: {
      if (!design_.with_replacement) {
        throw Error(ErrorCode::kUnsupportedDesign,
                    "inclusion probabilities for weighted sampling without replacement are not "
                    "available");
      }
      weights_ = design_.weights.empty() ? degree_weights(g) : design_.weights;
      if (weights_.size() != n) {
        throw Error(ErrorCode::kInvalidArgument, "WIS weights must cover every vertex");
      }
      cumulative_.resize(n);
      double total = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(weights_[v] > 0.0) || !std::isfinite(weights_[v])) {
          throw Error(ErrorCode::kInvalidArgument,
                      "WIS weights must be positive (every vertex needs a positive inclusion "
                      "probability)");
        }
        total += weights_[v];
        cumulative_[v] = total;
      }
      weight_total_ = total;
      break;
    }
    case DesignKind::kRandomWalk: {
      if (design_.thinning < 1) throw Error(ErrorCode::kInvalidArgument, "thinning must be >= 1");
      if (!is_connected(g)) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "random walk sampling needs a connected graph (extract the largest component)");
      }
      if (n > 1) weights_ = degree_weights(g);
      if (design_.start && *design_.start >= n) {
        throw Error(ErrorCode::kInvalidArgument, "random walk start vertex out of range");
      }
      break;
    }
  }
}

EgoSample EgoSampler::draw(std::size_t n_prime, std::uint64_t seed) const {
  const std::size_t n = g_->vertex_count();
  if (n_prime < 1) throw Error(ErrorCode::kInvalidArgument, "sample size must be >= 1");
  EgoSample s;
  s.kind = design_.kind;
  s.seed = seed;
  s.population_size = n;
  s.draws.reserve(n_prime);
  std::mt19937_64 rng(seed);

  switch (design_.kind) {
    case DesignKind::kUisWithReplacement: {
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
      for (std::size_t i = 0; i < n_prime; ++i) s.draws.push_back(pick(rng));
      break;
    }
    case DesignKind::kUisWithoutReplacement: {
      if (n_prime > n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cannot draw " + std::to_string(n_prime) + " of " + std::to_string(n) +
                        " vertices without replacement");
      }
      // Floyd's algorithm: n' distinct values in O(n') draws.
      std::vector<char> taken(n, 0);
      for (std::size_t j = n - n_prime; j < n; ++j) {
        std::uniform_int_distribution<std::size_t> pick(0, j);
        std::size_t t = pick(rng);
        Vertex chosen = static_cast<Vertex>(taken[t] ? j : t);
        taken[chosen] = 1;
        s.draws.push_back(chosen);
      }
      break;
    }
    case DesignKind::kWis: {
      std::uniform_real_distribution<double> unit(0.0, weight_total_);
      for (std::size_t i = 0; i < n_prime; ++i) {
        double x = unit(rng);
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
        if (it == cumulative_.end()) --it;
        s.draws.push_back(static_cast<Vertex>(it - cumulative_.begin()));
      }
      break;
    }
    case DesignKind::kRandomWalk: {
      Vertex current = 0;
      if (design_.start) {
        current = *design_.start;
      } else {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        current = pick(rng);
      }
      auto step = [&] {
        auto row = g_->neighbors(current);
        if (row.empty()) return;
        std::uniform_int_distribution<std::size_t> pick(0, row.size() - 1);
        current = row[pick(rng)];
      };
      for (std::size_t i = 0; i < design_.effective_burn_in(); ++i) step();
      for (std::size_t i = 0; i < n_prime; ++i) {
        for (std::size_t t = 0; t < design_.thinning; ++t) step();
        s.draws.push_back(current);
      }
      break;
    }
  }

  s.unique_egos = s.draws;
  std::sort(s.unique_egos.begin(), s.unique_egos.end());
  s.unique_egos.erase(std::unique(s.unique_egos.begin(), s.unique_egos.end()),
                      s.unique_egos.end());

  switch (design_.kind) {
    case DesignKind::kUisWithReplacement:
    case DesignKind::kUisWithoutReplacement:
      s.per_draw_scale = 1.0 / static_cast<double>(n);
      break;
    case DesignKind::kWis:
      s.per_draw_scale = 1.0 / weight_total_;
      break;
    case DesignKind::kRandomWalk: {
      if (n == 1) {
        s.per_draw_scale = 1.0;
        break;
      }
      double inverse_sum = 0.0;
      for (Vertex v : s.draws) inverse_sum += 1.0 / weights_[v];
      s.per_draw_scale = inverse_sum / (static_cast<double>(n_prime) * static_cast<double>(n));
      break;
    }
  }

  s.inclusion.reserve(s.unique_egos.size());
  s.per_draw.reserve(s.unique_egos.size());
  for (Vertex v : s.unique_egos) {
    const double p_draw = std::min(1.0, per_draw_probability(s, v));
    s.per_draw.push_back(p_draw);
    switch (design_.kind) {
      case DesignKind::kUisWithReplacement:
      case DesignKind::kUisWithoutReplacement:
        s.inclusion.push_back(node_inclusion_prob(design_.kind, n, n_prime));
        break;
      case DesignKind::kWis:
      case DesignKind::kRandomWalk:
        s.inclusion.push_back(node_inclusion_prob(DesignKind::kWis, n, n_prime, p_draw));
        break;
    }
  }
  return s;
}

EgoSample sample_egos(const Graph& g, const SampleDesign& design, std::size_t n_prime,
                      std::uint64_t seed) {
  return EgoSampler(g, design).draw(n_prime, seed);
}

namespace {

// 1-(1-q)^n' without cancellation for small q.
double at_least_once(double q, std::size_t n_prime) {
  if (q >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n_prime) * std::log1p(-q));
}

}  // namespace

double node_inclusion_prob(DesignKind kind, std::size_t population_size, std::size_t n_prime,
                           std::optional<double> per_draw) {
  if (population_size == 0) throw Error(ErrorCode::kInvalidArgument, "population size must be >= 1");
  const double N = static_cast<double>(population_size);
  switch (kind) {
    case DesignKind::kUisWithReplacement:
      return at_least_once(1.0 / N, n_prime);
    case DesignKind::kUisWithoutReplacement:
      if (n_prime > population_size) {
        throw Error(ErrorCode::kInvalidArgument, "n' exceeds N without replacement");
      }
      return static_cast<double>(n_prime) / N;
    case DesignKind::kWis:
    case DesignKind::kRandomWalk:
      if (!per_draw) {
        throw Error(ErrorCode::kInvalidArgument, "weighted designs need a per-draw probability");
      }
      if (!(*per_draw > 0.0) || *per_draw > 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "per-draw probability must lie in (0, 1]");
      }
      return at_least_once(*per_draw, n_prime);
  }
  return 0.0;
}

double hansen_hurwitz_per_draw(std::span<const double> draw_weights, double weight,
                               std::size_t population_size) {
  if (!(weight > 0.0)) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
  if (draw_weights.empty() || population_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one draw and N >= 1");
  }
  double inverse_sum = 0.0;
  for (double w : draw_weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
    inverse_sum += 1.0 / w;
  }
  const double p = weight * inverse_sum /
                   (static_cast<double>(draw_weights.size()) * static_cast<double>(population_size));
  return std::min(1.0, p);
}

double hansen_hurwitz_inclusion(std::span<const double> draw_weights, double weight,
                                std::size_t n_prime, std::size_t population_size) {
  return at_least_once(hansen_hurwitz_per_draw(draw_weights, weight, population_size), n_prime);
}

double subgraph_inclusion_prob(DesignKind kind, std::size_t population_size, std::size_t n_prime,
                               int multiplicity_sum, std::span<const double> member_per_draw) {
  if (multiplicity_sum < 1) {
    throw Error(ErrorCode::kInvalidArgument, "multiplicity sum must be >= 1");
  }
  const auto m = static_cast<std::size_t>(multiplicity_sum);
  if (m > population_size) throw Error(ErrorCode::kInvalidArgument, "Σm exceeds N");
  const double N = static_cast<double>(population_size);
  switch (kind) {
    case DesignKind::kUisWithReplacement:
      return at_least_once(static_cast<double>(m) / N, n_prime);
    case DesignKind::kUisWithoutReplacement: {
      if (n_prime > population_size) {
        throw Error(ErrorCode::kInvalidArgument, "n' exceeds N without replacement");
      }
      // Probability that none of the m occupants is among n' distinct draws.
      double none = 1.0;
      for (std::size_t k = 0; k < n_prime; ++k) {
        if (population_size < m + k + 1) {
          none = 0.0;
          break;
        }
        none *= (N - static_cast<double>(m) - static_cast<double>(k)) / (N - static_cast<double>(k));
      }
      return 1.0 - none;
    }
    case DesignKind::kWis:
    case DesignKind::kRandomWalk: {
      if (member_per_draw.size() != m) {
        throw Error(ErrorCode::kInvalidArgument,
                    "need one per-draw probability per observable-role occupant");
      }
      double total = 0.0;
      for (double p : member_per_draw) {
        if (!(p > 0.0)) throw Error(ErrorCode::kInvalidArgument, "per-draw probabilities must be > 0");
        total += p;
      }
      if (total > 1.0 + 1e-12) {
        throw Error(ErrorCode::kInvalidArgument,
                    "occupant per-draw probabilities sum above 1; copy inclusion undefined");
      }
      return at_least_once(std::min(total, 1.0), n_prime);
    }
  }
  return 0.0;
}

}  // namespace egocount
