#include "egocount/pipeline.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "egocount/error.hpp"
#include "egocount/parallel.hpp"

namespace egocount {

SampledEgonets collect_egonets(const Graph& g, const EgoSampler& sampler, const EgoSample& sample,
                               NeighborhoodMode mode, std::size_t workers) {
  SampledEgonets out;
  out.kind = sample.kind;
  out.population_size = sample.population_size;
  out.n_prime = sample.n_prime();
  out.inclusion = sample.inclusion;
  out.per_draw = sample.per_draw;
  out.egonets.resize(sample.unique_egos.size());
  parallel_for(sample.unique_egos.size(), workers, [&](std::size_t i) {
    out.egonets[i] = extract_egonet(g, sample.unique_egos[i], mode);
  });
  if (sample.kind == DesignKind::kWis || sample.kind == DesignKind::kRandomWalk) {
    auto index = std::make_shared<std::unordered_map<OriginalId, Vertex>>();
    index->reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) index->emplace(g.original_id(v), v);
    const double scale = sample.per_draw_scale;
    out.member_per_draw = [index, scale, &sampler](OriginalId id) {
      auto it = index->find(id);
      if (it == index->end()) throw Error(ErrorCode::kInvalidArgument, "unknown copy member");
      return std::min(1.0, scale * sampler.weight(it->second));
    };
  }
  return out;
}

double copy_inclusion(const SampledEgonets& sample, int multiplicity_sum,
                      const std::vector<OriginalId>& observable_members) {
  switch (sample.kind) {
    case DesignKind::kUisWithReplacement:
    case DesignKind::kUisWithoutReplacement:
      return subgraph_inclusion_prob(sample.kind, sample.population_size, sample.n_prime,
                                     multiplicity_sum);
    case DesignKind::kWis:
    case DesignKind::kRandomWalk: {
      if (!sample.member_per_draw) {
        throw Error(ErrorCode::kUnsupportedDesign,
                    "unique counting under a weighted design needs per-draw probabilities of "
                    "every copy member");
      }
      std::vector<double> p;
      p.reserve(observable_members.size());
      for (OriginalId id : observable_members) p.push_back(sample.member_per_draw(id));
      return subgraph_inclusion_prob(sample.kind, sample.population_size, sample.n_prime,
                                     static_cast<int>(p.size()), p);
    }
  }
  return 0.0;
}

namespace {

VarianceMethod default_variance(const SampledEgonets& sample, EstimatorKind estimator) {
  if (estimator == EstimatorKind::kUniqueCounting) return VarianceMethod::kNone;
  return sample.kind == DesignKind::kRandomWalk ? VarianceMethod::kBrewerHanif
                                                : VarianceMethod::kHorvitzThompson;
}

JointInclusion joint_for(const SampledEgonets& sample) {
  switch (sample.kind) {
    case DesignKind::kUisWithoutReplacement:
      return JointInclusion::uniform_without_replacement(sample.population_size, sample.n_prime);
    case DesignKind::kUisWithReplacement:
    case DesignKind::kWis:
      if (sample.per_draw.size() != sample.egonets.size()) {
        throw Error(ErrorCode::kUnsupportedDesign, "per-draw probabilities missing for p_jk");
      }
      return JointInclusion::with_replacement(sample.per_draw, sample.n_prime);
    case DesignKind::kRandomWalk:
      break;
  }
  throw Error(ErrorCode::kUnsupportedDesign,
              "joint inclusion probabilities are unknown for random-walk samples; use Brewer-Hanif");
}

}  // namespace

EstimateReport estimate(const SampledEgonets& sample, const CountingPlan& plan,
                        const EstimateOptions& options) {
  const std::size_t n = sample.egonets.size();
  if (sample.inclusion.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "one inclusion probability per egonet is required");
  }
  const int m = plan.multiplicity_sum();
  const VarianceMethod method = options.variance.value_or(default_variance(sample, options.estimator));
  EstimateReport report;

  if (options.estimator == EstimatorKind::kRoleOccupancy) {
    std::vector<double> totals(n);
    parallel_for(n, options.workers, [&](std::size_t i) {
      totals[i] = static_cast<double>(total_role_degree(sample.egonets[i], plan));
    });
    report = estimate_role_occupancy_totals(totals, sample.inclusion, m);
    switch (method) {
      case VarianceMethod::kNone:
        break;
      case VarianceMethod::kHorvitzThompson: {
        auto v = variance_ht(totals, sample.inclusion, joint_for(sample), m);
        report.variance = v.value;
        report.variance_truncated = v.truncated;
        break;
      }
      case VarianceMethod::kBrewerHanif:
        report.variance = variance_brewer_hanif(totals, sample.inclusion, sample.population_size,
                                                m, report.estimate);
        break;
    }
  } else {
    for (const auto& e : sample.egonets) {
      if (!e.labeled()) {
        throw Error(ErrorCode::kUnlabeledSample,
                    "unique counting needs alters that are identifiable across egonets");
      }
    }
    if (method != VarianceMethod::kNone) {
      throw Error(ErrorCode::kUnsupportedDesign,
                  "no variance estimator is available for unique counting");
    }
    std::vector<std::vector<ObservedCopy>> per_ego(n);
    parallel_for(n, options.workers,
                 [&](std::size_t i) { per_ego[i] = unique_copies(sample.egonets[i], plan); });
    std::unordered_set<CopyKey, CopyKeyHash> seen;
    std::vector<double> pi;
    for (auto& copies : per_ego) {
      for (auto& copy : copies) {
        if (!seen.insert(copy.key).second) continue;
        pi.push_back(copy_inclusion(sample, m, copy.observable_members));
      }
    }
    report = estimate_unique_counting(pi, m);
    report.n = n;
  }
  report.variance_method = report.variance ? method : VarianceMethod::kNone;
  report.n_prime = sample.n_prime;
  report.design = std::string(to_string(sample.kind));
  report.pattern = plan.pattern().name;
  report.pattern_fingerprint = plan.fingerprint();
  report.population_size = sample.population_size;
  return report;
}

}  // namespace egocount
