#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egocount/counting.hpp"
#include "egocount/estimation.hpp"
#include "egocount/sampling.hpp"

namespace egocount {

/// sqrt(mean((x - truth)^2)) / truth. Throws kUndefinedMetric for truth = 0.
double nrmse(std::span<const double> estimates, double truth);
/// sqrt(mean((x - truth)^2)).
double rmse(std::span<const double> estimates, double truth);
/// Σ|x̂_i - x_i| / Σ|x_i|.
double nmae(std::span<const double> estimates, std::span<const double> truth);
double median(std::vector<double> values);

/// Per-vertex precomputation for repeated sampling of one graph: the total
/// role degree of every vertex for every pattern and, optionally, the copies
/// each vertex observes and the members of its egonet. A replication then
/// costs O(sample) instead of re-counting egonets.
class EgoCensus {
 public:
  struct Options {
    bool unique_copies = false;
    bool coverage = false;
    std::size_t workers = 1;
    /// Sampling weights (p'_v ∝ weight) for copy inclusion under weighted
    /// designs; empty means unit weights.
    std::vector<double> weights;
  };

  EgoCensus(const Graph& g, NeighborhoodMode mode, std::vector<const CountingPlan*> plans,
            const Options& options);

  std::size_t pattern_count() const noexcept { return plans_.size(); }
  const Graph& graph() const noexcept { return *g_; }
  /// Σ_j d_vj for pattern `p`.
  double total(std::size_t p, Vertex v) const { return totals_[p][v]; }
  /// Number of distinct copies observable from at least one vertex.
  std::size_t copy_count(std::size_t p) const { return copies_[p].weight_sum.size(); }

  double role_occupancy(std::size_t p, const EgoSample& sample) const;
  double unique_counting(std::size_t p, const EgoSample& sample, const EgoSampler& sampler) const;
  /// Horvitz-Thompson variance of the role-occupancy estimate.
  VarianceResult role_occupancy_variance(std::size_t p, const EgoSample& sample) const;
  double brewer_hanif_variance(std::size_t p, const EgoSample& sample, double estimate) const;

  struct Coverage {
    double nodes = 0.0;  // fraction of vertices inside some sampled egonet
    double edges = 0.0;  // fraction of edges inside some sampled egonet
  };
  Coverage coverage(const EgoSample& sample) const;

 private:
  struct CopyIndex {
    std::vector<std::size_t> offsets;  // CSR: copies observed by each vertex
    std::vector<std::uint32_t> ids;
    std::vector<double> weight_sum;    // Σ sampling weight of observable members
  };

  const Graph* g_;
  NeighborhoodMode mode_;
  std::vector<const CountingPlan*> plans_;
  std::vector<std::vector<double>> totals_;
  std::vector<CopyIndex> copies_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::vector<std::uint32_t>> edge_ids_;
  std::vector<double> weights_;  // sampling weights used for copy inclusion
};

struct SimulationPattern {
  std::string id;
  std::string group;  // patterns sharing a group form one NMAE vector
  CountingPlan plan;
};

struct SimulationSpec {
  Graph graph;
  std::string graph_label;
  NeighborhoodMode mode = NeighborhoodMode::kUndirectedFull;
  std::vector<SimulationPattern> patterns;
  SampleDesign design;
  std::vector<std::size_t> grid;
  std::size_t replications = 1000;
  std::vector<EstimatorKind> estimators{EstimatorKind::kRoleOccupancy};
  bool nrmse = true;
  bool nmae = true;
  std::uint64_t seed = 1;
  double oracle_budget = 2e10;
  bool keep_estimates = false;
};

/// Parses the JSON simulation spec; relative paths resolve against `base`.
SimulationSpec parse_simulation_spec(std::string_view json_text,
                                     const std::filesystem::path& base = {});
SimulationSpec load_simulation_spec(const std::filesystem::path& path);

/// Powers of two times `start` up to `stop`, with `stop` appended if missed.
std::vector<std::size_t> doubling_grid(std::size_t start, std::size_t stop);

struct SimulationRow {
  std::string pattern;    // pattern id, or group name for NMAE rows
  std::string estimator;  // "ro" / "uc"
  std::size_t grid = 0;
  std::string metric;     // nrmse | rmse | bias | nmae
  double value = 0.0;
  double noise = 0.0;     // Monte-Carlo standard error of `value`
  double truth = 0.0;
  double mean_estimate = 0.0;
  std::string flag;       // e.g. "zero_truth"
  double nodes_pct = 0.0;
  double edges_pct = 0.0;
};

struct SimulationCell {
  std::size_t pattern = 0;
  std::size_t grid = 0;
  EstimatorKind estimator = EstimatorKind::kRoleOccupancy;
  std::vector<double> estimates;  // in replication order
};

struct SimulationReport {
  std::vector<std::uint64_t> truth;  // per pattern
  std::vector<SimulationRow> rows;
  std::vector<SimulationCell> cells;  // only with keep_estimates
};

SimulationReport run_simulation(const SimulationSpec& spec, std::size_t workers);

std::string simulation_to_csv(const SimulationReport& report);
std::string simulation_to_json(const SimulationSpec& spec, const SimulationReport& report);

}  // namespace egocount
