#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "egocount/counting.hpp"
#include "egocount/egonet.hpp"
#include "egocount/estimation.hpp"
#include "egocount/sampling.hpp"

namespace egocount {

/// Everything the estimators need from one sample: the egonets of the unique
/// egos in ascending ego order plus the design quantities.
struct SampledEgonets {
  std::vector<Egonet> egonets;
  std::vector<double> inclusion;  // p_i
  std::vector<double> per_draw;   // p'_i (with-replacement designs)
  DesignKind kind = DesignKind::kUisWithoutReplacement;
  std::size_t population_size = 0;
  std::size_t n_prime = 0;
  /// Per-draw probability of an arbitrary member by original id; needed by
  /// unique counting under non-uniform designs.
  std::function<double(OriginalId)> member_per_draw;
};

struct EstimateOptions {
  EstimatorKind estimator = EstimatorKind::kRoleOccupancy;
  /// Unset picks Horvitz-Thompson when joint inclusion is known and
  /// Brewer-Hanif otherwise (random walks); unique counting reports none.
  std::optional<VarianceMethod> variance;
  std::size_t workers = 1;
};

/// Extracts the egonets of a realized sample from the population graph.
SampledEgonets collect_egonets(const Graph& g, const EgoSampler& sampler, const EgoSample& sample,
                               NeighborhoodMode mode, std::size_t workers);

/// Counts on every egonet (concurrently) and combines in ego order.
EstimateReport estimate(const SampledEgonets& sample, const CountingPlan& plan,
                        const EstimateOptions& options);

/// Copy inclusion probability π for a copy with the given observable
/// members under the sample's design.
double copy_inclusion(const SampledEgonets& sample, int multiplicity_sum,
                      const std::vector<OriginalId>& observable_members);

}  // namespace egocount
