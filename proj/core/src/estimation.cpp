#include "egocount/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_set>

#include "egocount/error.hpp"

namespace egocount {

std::string_view to_string(EstimatorKind kind) {
  return kind == EstimatorKind::kRoleOccupancy ? "role_occupancy" : "unique_counting";
}

std::string_view to_string(VarianceMethod method) {
  switch (method) {
    case VarianceMethod::kNone: return "none";
    case VarianceMethod::kHorvitzThompson: return "horvitz_thompson";
    case VarianceMethod::kBrewerHanif: return "brewer_hanif";
  }
  return "none";
}

EstimatorKind parse_estimator(std::string_view text) {
  if (text == "ro" || text == "role_occupancy") return EstimatorKind::kRoleOccupancy;
  if (text == "uc" || text == "unique_counting") return EstimatorKind::kUniqueCounting;
  throw Error(ErrorCode::kParse, "unknown estimator '" + std::string(text) + "' (ro or uc)");
}

VarianceMethod parse_variance_method(std::string_view text) {
  if (text == "none") return VarianceMethod::kNone;
  if (text == "ht" || text == "horvitz_thompson") return VarianceMethod::kHorvitzThompson;
  if (text == "bh" || text == "brewer_hanif") return VarianceMethod::kBrewerHanif;
  throw Error(ErrorCode::kParse, "unknown variance method '" + std::string(text) + "'");
}

namespace {

void check_inclusion(std::span<const double> inclusion) {
  for (double p : inclusion) {
    if (!(p > 0.0) || p > 1.0 + 1e-12) {
      throw Error(ErrorCode::kInvalidArgument, "inclusion probabilities must lie in (0, 1]");
    }
  }
}

void check_multiplicity(int multiplicity_sum) {
  if (multiplicity_sum <= 0) {
    throw Error(ErrorCode::kEmptyObservableSet,
                "pattern has no observable role (Σm = 0); it cannot be estimated from egonets");
  }
}

}  // namespace

EstimateReport estimate_role_occupancy_totals(std::span<const double> totals,
                                              std::span<const double> inclusion,
                                              int multiplicity_sum) {
  check_multiplicity(multiplicity_sum);
  if (totals.size() != inclusion.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one inclusion probability per ego is required");
  }
  check_inclusion(inclusion);
  double degree_sum = 0.0;
  for (std::size_t i = 0; i < totals.size(); ++i) degree_sum += totals[i] / inclusion[i];
  EstimateReport report;
  report.estimator = EstimatorKind::kRoleOccupancy;
  report.estimate = degree_sum / multiplicity_sum;
  report.multiplicity_sum = multiplicity_sum;
  report.n = totals.size();
  return report;
}

EstimateReport estimate_role_occupancy(std::span<const RoleDegreeVector> role_degrees,
                                       std::span<const double> inclusion, int multiplicity_sum) {
  std::vector<double> totals;
  totals.reserve(role_degrees.size());
  for (const auto& d : role_degrees) {
    std::uint64_t sum = 0;
    for (auto x : d) sum += x;
    totals.push_back(static_cast<double>(sum));
  }
  return estimate_role_occupancy_totals(totals, inclusion, multiplicity_sum);
}

JointInclusion JointInclusion::independent() { return {}; }

JointInclusion JointInclusion::uniform_without_replacement(std::size_t population_size,
                                                           std::size_t n_prime) {
  if (population_size < 2 || n_prime > population_size) {
    throw Error(ErrorCode::kInvalidArgument, "need N >= 2 and n' <= N");
  }
  JointInclusion j;
  j.kind_ = Kind::kUniformWithoutReplacement;
  j.population_size_ = population_size;
  j.n_prime_ = n_prime;
  return j;
}

JointInclusion JointInclusion::with_replacement(std::vector<double> per_draw, std::size_t n_prime) {
  JointInclusion j;
  j.kind_ = Kind::kWithReplacement;
  j.n_prime_ = n_prime;
  j.values_ = std::move(per_draw);
  return j;
}

JointInclusion JointInclusion::matrix(std::size_t n, std::vector<double> values) {
  if (values.size() != n * n) {
    throw Error(ErrorCode::kDimensionMismatch, "joint inclusion matrix must be n x n");
  }
  JointInclusion j;
  j.kind_ = Kind::kMatrix;
  j.n_ = n;
  j.values_ = std::move(values);
  return j;
}

bool JointInclusion::constant_given_equal_inclusion() const noexcept {
  switch (kind_) {
    case Kind::kIndependent:
    case Kind::kUniformWithoutReplacement:
      return true;
    case Kind::kWithReplacement:
      return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) ==
             values_.end();
    case Kind::kMatrix:
      return false;
  }
  return false;
}

double JointInclusion::operator()(std::size_t j, std::size_t k, double p_j, double p_k) const {
  switch (kind_) {
    case Kind::kIndependent:
      return p_j * p_k;
    case Kind::kUniformWithoutReplacement: {
      const double n = static_cast<double>(n_prime_);
      const double N = static_cast<double>(population_size_);
      return n * (n - 1.0) / (N * (N - 1.0));
    }
    case Kind::kWithReplacement: {
      const double neither = std::max(0.0, 1.0 - values_.at(j) - values_.at(k));
      return p_j + p_k - 1.0 + std::pow(neither, static_cast<double>(n_prime_));
    }
    case Kind::kMatrix:
      return values_.at(j * n_ + k);
  }
  return 0.0;
}

VarianceResult variance_ht(std::span<const double> totals, std::span<const double> inclusion,
                           const JointInclusion& joint, int multiplicity_sum) {
  check_multiplicity(multiplicity_sum);
  if (totals.size() != inclusion.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one inclusion probability per ego is required");
  }
  check_inclusion(inclusion);
  const double m = multiplicity_sum;
  const std::size_t n = totals.size();

  double first = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double p = inclusion[j];
    const double y = totals[j] / m;
    first += (1.0 / (p * p) - 1.0 / p) * y * y;
  }

  double second = 0.0;
  if (joint.kind() != JointInclusion::Kind::kIndependent && n > 1) {
    const bool equal_p =
        std::adjacent_find(inclusion.begin(), inclusion.end(), std::not_equal_to<>()) ==
        inclusion.end();
    if (equal_p && joint.constant_given_equal_inclusion()) {
      // Σ_{j<k} t_j t_k = ((Σt)² - Σt²) / 2, so the double sum collapses to O(n).
      const double p = inclusion[0];
      const double coefficient = 1.0 / (p * p) - 1.0 / joint(0, 1, p, p);
      double sum = 0.0;
      double squares = 0.0;
      for (double t : totals) {
        sum += t;
        squares += t * t;
      }
      second = coefficient * (sum * sum - squares) / (m * m);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        double row = 0.0;
        for (std::size_t k = j + 1; k < n; ++k) {
          const double pjk = joint(j, k, inclusion[j], inclusion[k]);
          if (!(pjk > 0.0)) {
            throw Error(ErrorCode::kInvalidArgument, "joint inclusion probabilities must be > 0");
          }
          row += (1.0 / (inclusion[j] * inclusion[k]) - 1.0 / pjk) * totals[k];
        }
        second += 2.0 * row * totals[j] / (m * m);
      }
    }
  }

  VarianceResult result;
  result.value = first + second;
  if (result.value < 0.0) {
    result.value = 0.0;
    result.truncated = true;
  }
  return result;
}

double variance_brewer_hanif(std::span<const double> totals, std::span<const double> weights,
                             std::size_t population_size, int multiplicity_sum, double estimate) {
  check_multiplicity(multiplicity_sum);
  const std::size_t n = totals.size();
  if (weights.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "one weight per ego is required");
  }
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "Brewer-Hanif variance needs at least two egos");
  }
  if (population_size < n) throw Error(ErrorCode::kInvalidArgument, "n exceeds N");
  double inverse_sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
    inverse_sum += 1.0 / w;
  }
  const double N = static_cast<double>(population_size);
  const double nn = static_cast<double>(n);
  const double m = multiplicity_sum;
  // Each ego's normalized total N·n·(t_j/w_j) / (Σm·Σ_k 1/w_k) is a
  // full-population estimate of C, so the deviations are centered on Ĉ. The
  // factor N keeps that true for weights known only up to scale.
  double squares = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double z = N * nn * (totals[j] / weights[j]) / (m * inverse_sum);
    squares += (z - estimate) * (z - estimate);
  }
  return (N - nn) / (nn * (nn - 1.0) * N) * squares;
}

EstimateReport estimate_unique_counting(std::span<const double> copy_inclusion,
                                        int multiplicity_sum) {
  check_multiplicity(multiplicity_sum);
  check_inclusion(copy_inclusion);
  double total = 0.0;
  for (double pi : copy_inclusion) total += 1.0 / pi;
  EstimateReport report;
  report.estimator = EstimatorKind::kUniqueCounting;
  report.estimate = total;
  report.multiplicity_sum = multiplicity_sum;
  report.copies_observed = copy_inclusion.size();
  return report;
}

std::vector<ObservedCopy> deduplicate_copies(std::vector<ObservedCopy> copies) {
  std::unordered_set<CopyKey, CopyKeyHash> seen;
  std::vector<ObservedCopy> unique;
  unique.reserve(copies.size());
  for (auto& copy : copies) {
    if (seen.insert(copy.key).second) unique.push_back(std::move(copy));
  }
  return unique;
}

}  // namespace egocount
