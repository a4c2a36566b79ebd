#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egocount/counting.hpp"

namespace egocount {

enum class EstimatorKind { kRoleOccupancy, kUniqueCounting };
enum class VarianceMethod { kNone, kHorvitzThompson, kBrewerHanif };

std::string_view to_string(EstimatorKind kind);
std::string_view to_string(VarianceMethod method);
/// "ro" / "uc" (or the full names).
EstimatorKind parse_estimator(std::string_view text);
/// "ht" / "bh" / "none".
VarianceMethod parse_variance_method(std::string_view text);

struct EstimateReport {
  EstimatorKind estimator = EstimatorKind::kRoleOccupancy;
  double estimate = 0.0;
  std::optional<double> variance;
  VarianceMethod variance_method = VarianceMethod::kNone;
  bool variance_truncated = false;  // a negative H-T value was replaced by 0
  int multiplicity_sum = 0;
  std::size_t n = 0;                // unique egos
  std::size_t n_prime = 0;          // draws
  std::size_t copies_observed = 0;  // unique counting only

  // Echo of the run; filled in by callers that know it.
  std::string design;
  std::string pattern;
  std::uint64_t pattern_fingerprint = 0;
  std::size_t population_size = 0;
  std::uint64_t seed = 0;
  std::optional<double> elapsed_seconds;  // only when timing was requested
};

/// D̂ = Σ_i Σ_j d_ij / p_i and Ĉ = D̂ / Σm, summed in ego order.
EstimateReport estimate_role_occupancy(std::span<const RoleDegreeVector> role_degrees,
                                       std::span<const double> inclusion, int multiplicity_sum);
/// Same estimator from per-ego totals Σ_j d_ij.
EstimateReport estimate_role_occupancy_totals(std::span<const double> totals,
                                              std::span<const double> inclusion,
                                              int multiplicity_sum);

/// Joint inclusion probability p_jk for a pair of distinct sampled egos.
class JointInclusion {
 public:
  enum class Kind { kIndependent, kUniformWithoutReplacement, kWithReplacement, kMatrix };

  /// Independent (Poisson-type) inclusion: p_jk = p_j p_k.
  static JointInclusion independent();
  /// Simple random sampling without replacement: n'(n'-1) / (N(N-1)).
  static JointInclusion uniform_without_replacement(std::size_t population_size,
                                                    std::size_t n_prime);
  /// n' independent draws with per-draw probabilities p'_j:
  /// p_jk = p_j + p_k - 1 + (1 - p'_j - p'_k)^n'.
  static JointInclusion with_replacement(std::vector<double> per_draw, std::size_t n_prime);
  /// Explicit symmetric n x n matrix, row-major.
  static JointInclusion matrix(std::size_t n, std::vector<double> values);

  Kind kind() const noexcept { return kind_; }
  double operator()(std::size_t j, std::size_t k, double p_j, double p_k) const;
  /// True when every off-diagonal p_jk is the same number given equal p.
  bool constant_given_equal_inclusion() const noexcept;

 private:
  Kind kind_ = Kind::kIndependent;
  std::size_t population_size_ = 0;
  std::size_t n_prime_ = 0;
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct VarianceResult {
  double value = 0.0;
  bool truncated = false;
};

/// Horvitz-Thompson variance of Ĉ from per-ego totals t_j = Σ_i d_ji:
/// Σ_j (1/p_j² - 1/p_j)(t_j/Σm)² + 2 Σ_{j<k} (1/(p_j p_k) - 1/p_jk) t_j t_k / Σm².
/// Negative values are truncated to 0 and flagged.
VarianceResult variance_ht(std::span<const double> totals, std::span<const double> inclusion,
                           const JointInclusion& joint, int multiplicity_sum);

/// Brewer-Hanif style variance for weights w_j ∝ p_j (see the implementation
/// note on scaling). Requires n >= 2.
double variance_brewer_hanif(std::span<const double> totals, std::span<const double> weights,
                             std::size_t population_size, int multiplicity_sum,
                             double estimate);

/// Ĉ = Σ 1/π_i over unique observed copies.
EstimateReport estimate_unique_counting(std::span<const double> copy_inclusion, int multiplicity_sum);

/// Deduplicates copies seen from several egos (first occurrence wins, order
/// of first appearance kept).
std::vector<ObservedCopy> deduplicate_copies(std::vector<ObservedCopy> copies);

}  // namespace egocount
