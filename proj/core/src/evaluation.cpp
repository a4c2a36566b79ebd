#include "egocount/evaluation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "egocount/error.hpp"
#include "egocount/generators.hpp"
#include "egocount/parallel.hpp"

namespace egocount {

using nlohmann::json;
using nlohmann::ordered_json;

// ---- metrics ----------------------------------------------------------------

double rmse(std::span<const double> estimates, double truth) {
  if (estimates.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one estimate");
  double sum = 0.0;
  for (double x : estimates) sum += (x - truth) * (x - truth);
  return std::sqrt(sum / static_cast<double>(estimates.size()));
}

double nrmse(std::span<const double> estimates, double truth) {
  if (truth == 0.0) {
    throw Error(ErrorCode::kUndefinedMetric, "NRMSE is undefined for a true count of 0");
  }
  return rmse(estimates, truth) / truth;
}

double nmae(std::span<const double> estimates, std::span<const double> truth) {
  if (estimates.size() != truth.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "estimate and truth vectors differ in length");
  }
  double error = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    error += std::abs(estimates[i] - truth[i]);
    scale += std::abs(truth[i]);
  }
  if (scale == 0.0) throw Error(ErrorCode::kUndefinedMetric, "NMAE is undefined for an all-zero truth");
  return error / scale;
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

double mean_of(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sd_of(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

double at_least_once(double q, std::size_t n_prime) {
  if (q >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n_prime) * std::log1p(-q));
}

}  // namespace

// ---- census cache -----------------------------------------------------------

EgoCensus::EgoCensus(const Graph& g, NeighborhoodMode mode, std::vector<const CountingPlan*> plans,
                     const Options& options)
    : g_(&g), mode_(mode), plans_(std::move(plans)) {
  const std::size_t n = g.vertex_count();
  const std::size_t patterns = plans_.size();
  for (const auto* plan : plans_) {
    if (plan->mode() != mode) {
      throw Error(ErrorCode::kModeMismatch, "every plan must use the census neighborhood mode");
    }
  }
  totals_.assign(patterns, std::vector<double>(n, 0.0));
  if (options.unique_copies) {
    copies_.resize(patterns);
    for (auto& c : copies_) c.offsets.assign(1, 0);
  }
  if (options.coverage) {
    members_.resize(n);
    edge_ids_.resize(n);
  }
  weights_ = options.weights;
  if (!weights_.empty() && weights_.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "census weights must cover every vertex");
  }

  std::vector<std::pair<Vertex, Vertex>> edge_list;
  if (options.coverage) edge_list = g.edges();
  auto edge_id = [&](Vertex a, Vertex b) {
    if (!g.directed() && b < a) std::swap(a, b);
    auto it = std::lower_bound(edge_list.begin(), edge_list.end(), std::make_pair(a, b));
    return static_cast<std::uint32_t>(it - edge_list.begin());
  };

  std::unordered_map<OriginalId, Vertex> by_id;
  if (options.unique_copies) {
    by_id.reserve(n);
    for (Vertex v = 0; v < n; ++v) by_id.emplace(g.original_id(v), v);
  }
  std::vector<std::unordered_map<CopyKey, std::uint32_t, CopyKeyHash>> known(
      options.unique_copies ? patterns : 0);

  // Vertices are processed in blocks: egonets are counted concurrently, then
  // copy ids are assigned sequentially so they do not depend on scheduling.
  constexpr std::size_t kBlock = 256;
  for (std::size_t start = 0; start < n; start += kBlock) {
    const std::size_t stop = std::min(n, start + kBlock);
    std::vector<std::vector<std::vector<ObservedCopy>>> observed(stop - start);
    parallel_for(stop - start, options.workers, [&](std::size_t i) {
      const auto v = static_cast<Vertex>(start + i);
      const Egonet e = extract_egonet(g, v, mode);
      for (std::size_t p = 0; p < patterns; ++p) {
        totals_[p][v] = static_cast<double>(total_role_degree(e, *plans_[p]));
      }
      if (options.unique_copies) {
        observed[i].resize(patterns);
        for (std::size_t p = 0; p < patterns; ++p) observed[i][p] = unique_copies(e, *plans_[p]);
      }
      if (options.coverage) {
        auto m = e.members();
        members_[v].assign(m.begin(), m.end());
        for (auto [a, b] : e.edges()) edge_ids_[v].push_back(edge_id(m[a], m[b]));
      }
    });
    if (!options.unique_copies) continue;
    for (std::size_t i = 0; i < stop - start; ++i) {
      for (std::size_t p = 0; p < patterns; ++p) {
        auto& index = copies_[p];
        for (auto& copy : observed[i][p]) {
          auto [it, inserted] =
              known[p].try_emplace(std::move(copy.key), static_cast<std::uint32_t>(index.weight_sum.size()));
          if (inserted) {
            double w = 0.0;
            for (OriginalId id : copy.observable_members) {
              w += weights_.empty() ? 1.0 : weights_[by_id.at(id)];
            }
            index.weight_sum.push_back(w);
          }
          index.ids.push_back(it->second);
        }
        index.offsets.push_back(index.ids.size());
      }
    }
  }
}

double EgoCensus::role_occupancy(std::size_t p, const EgoSample& sample) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < sample.unique_egos.size(); ++i) {
    sum += totals_[p][sample.unique_egos[i]] / sample.inclusion[i];
  }
  return sum / plans_[p]->multiplicity_sum();
}

double EgoCensus::unique_counting(std::size_t p, const EgoSample& sample,
                                  const EgoSampler& /*sampler*/) const {
  if (copies_.empty()) throw Error(ErrorCode::kInvalidArgument, "census built without copy index");
  const auto& index = copies_[p];
  std::vector<std::uint32_t> seen;
  for (Vertex v : sample.unique_egos) {
    seen.insert(seen.end(), index.ids.begin() + static_cast<std::ptrdiff_t>(index.offsets[v]),
                index.ids.begin() + static_cast<std::ptrdiff_t>(index.offsets[v + 1]));
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  const int m = plans_[p]->multiplicity_sum();
  if (sample.kind == DesignKind::kUisWithReplacement ||
      sample.kind == DesignKind::kUisWithoutReplacement) {
    const double pi =
        subgraph_inclusion_prob(sample.kind, sample.population_size, sample.n_prime(), m);
    return static_cast<double>(seen.size()) / pi;
  }
  double total = 0.0;
  for (std::uint32_t id : seen) {
    total += 1.0 / at_least_once(std::min(1.0, sample.per_draw_scale * index.weight_sum[id]),
                                 sample.n_prime());
  }
  return total;
}

VarianceResult EgoCensus::role_occupancy_variance(std::size_t p, const EgoSample& sample) const {
  std::vector<double> totals;
  totals.reserve(sample.unique_egos.size());
  for (Vertex v : sample.unique_egos) totals.push_back(totals_[p][v]);
  JointInclusion joint = JointInclusion::independent();
  switch (sample.kind) {
    case DesignKind::kUisWithoutReplacement:
      joint = JointInclusion::uniform_without_replacement(sample.population_size, sample.n_prime());
      break;
    case DesignKind::kUisWithReplacement:
    case DesignKind::kWis:
      joint = JointInclusion::with_replacement(sample.per_draw, sample.n_prime());
      break;
    case DesignKind::kRandomWalk:
      throw Error(ErrorCode::kUnsupportedDesign, "no joint inclusion for random-walk samples");
  }
  return variance_ht(totals, sample.inclusion, joint, plans_[p]->multiplicity_sum());
}

double EgoCensus::brewer_hanif_variance(std::size_t p, const EgoSample& sample,
                                        double estimate) const {
  std::vector<double> totals;
  totals.reserve(sample.unique_egos.size());
  for (Vertex v : sample.unique_egos) totals.push_back(totals_[p][v]);
  return variance_brewer_hanif(totals, sample.inclusion, sample.population_size,
                               plans_[p]->multiplicity_sum(), estimate);
}

EgoCensus::Coverage EgoCensus::coverage(const EgoSample& sample) const {
  if (members_.empty()) throw Error(ErrorCode::kInvalidArgument, "census built without coverage");
  std::vector<char> node(g_->vertex_count(), 0);
  std::vector<char> edge(g_->edge_count(), 0);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (Vertex v : sample.unique_egos) {
    for (Vertex u : members_[v]) nodes += node[u] ? 0 : (node[u] = 1);
    for (auto id : edge_ids_[v]) edges += edge[id] ? 0 : (edge[id] = 1);
  }
  Coverage c;
  c.nodes = static_cast<double>(nodes) / static_cast<double>(g_->vertex_count());
  c.edges = g_->edge_count() ? static_cast<double>(edges) / static_cast<double>(g_->edge_count())
                             : 0.0;
  return c;
}

// ---- spec -------------------------------------------------------------------

std::vector<std::size_t> doubling_grid(std::size_t start, std::size_t stop) {
  if (start < 1 || stop < start) throw Error(ErrorCode::kInvalidArgument, "bad doubling grid");
  std::vector<std::size_t> grid;
  for (std::size_t x = start; x <= stop; x *= 2) grid.push_back(x);
  if (grid.back() != stop) grid.push_back(stop);
  return grid;
}

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

Graph build_graph(const json& j, const std::filesystem::path& base, std::string& label) {
  Graph g;
  const bool directed = j.value("directed", false);
  if (j.contains("path")) {
    const auto path = resolve(base, j.at("path").get<std::string>());
    std::optional<std::filesystem::path> attrs;
    if (j.contains("attrs")) attrs = resolve(base, j.at("attrs").get<std::string>());
    g = load_graph_file(path, attrs, directed);
    label = path.filename().string();
  } else {
    const auto kind = j.at("generator").get<std::string>();
    const auto n = j.at("n").get<std::size_t>();
    const auto seed = j.value("seed", std::uint64_t{1});
    if (kind == "erdos_renyi") {
      g = generators::erdos_renyi(n, j.at("p").get<double>(), seed, directed);
    } else if (kind == "barabasi_albert") {
      g = generators::barabasi_albert(n, j.at("m").get<std::size_t>(), seed);
    } else if (kind == "chung_lu") {
      g = generators::chung_lu(n, j.at("mean_degree").get<double>(), j.value("gamma", 2.5),
                               j.value("max_degree", static_cast<double>(n - 1)), seed);
    } else {
      throw Error(ErrorCode::kParse, "unknown graph generator '" + kind + "'");
    }
    label = kind + "-" + std::to_string(n) + "-" + std::to_string(seed);
  }
  if (j.contains("states")) {
    const auto& s = j.at("states");
    auto states = generators::random_states(g.vertex_count(),
                                            s.at("probabilities").get<std::vector<double>>(),
                                            s.value("seed", std::uint64_t{1}));
    g = generators::with_states(g, std::move(states));
  }
  if (j.value("largest_component", false)) g = largest_component(g);
  return g;
}

SampleDesign build_design(const json& j) {
  SampleDesign d;
  d.kind = parse_design_kind(j.at("kind").get<std::string>());
  d.with_replacement = d.kind != DesignKind::kUisWithoutReplacement;
  if (j.contains("with_replacement")) d.with_replacement = j.at("with_replacement").get<bool>();
  if (j.contains("thinning")) d.thinning = j.at("thinning").get<std::size_t>();
  if (j.contains("burn_in")) d.burn_in = j.at("burn_in").get<std::size_t>();
  if (j.contains("weights")) {
    if (j.at("weights").is_string()) {
      if (j.at("weights").get<std::string>() != "degree") {
        throw Error(ErrorCode::kParse, "weights must be \"degree\" or a list");
      }
    } else {
      d.weights = j.at("weights").get<std::vector<double>>();
    }
  }
  return d;
}

void add_patterns(const json& entry, const std::filesystem::path& base, const Graph& g,
                  NeighborhoodMode mode, std::vector<SimulationPattern>& out) {
  if (entry.contains("family")) {
    const auto family = entry.at("family").get<std::string>();
    if (family != "maximal_cliques") {
      throw Error(ErrorCode::kParse, "unknown pattern family '" + family + "'");
    }
    const int lo = entry.value("min_order", 2);
    const int hi = entry.at("max_order").get<int>();
    const bool by_composition = entry.value("compositions", false);
    const std::string group = entry.value("group", std::string("maximal_cliques"));
    for (int h = lo; h <= hi; ++h) {
      Pattern pattern = patterns::maximal_clique(h);
      const auto orbits = automorphism_orbits(pattern, std::max(h, kDefaultOrderCap));
      if (!by_composition) {
        out.push_back({pattern.name, group,
                       CountingPlan(pattern, orbits, CompositionMatrix::unannotated(orbits.multiplicities), mode)});
        continue;
      }
      for (auto& u : enumerate_compositions(orbits.multiplicities, g.state_count())) {
        std::string id = pattern.name + "[";
        for (int c = 0; c < u.cols(); ++c) id += (c ? "," : "") + std::to_string(u.at(0, c));
        id += "]";
        out.push_back({id, group, CountingPlan(pattern, orbits, u, mode)});
      }
    }
    return;
  }
  PatternSpec spec;
  if (entry.contains("file")) {
    spec = load_pattern_spec(resolve(base, entry.at("file").get<std::string>()));
  } else {
    spec = parse_pattern_spec(entry.contains("pattern") ? entry.at("pattern").dump() : entry.dump());
  }
  spec.mode = mode;
  if (spec.unannotated) {
    const auto orbits = automorphism_orbits(spec.pattern, std::max(spec.pattern.order, kDefaultOrderCap));
    spec.composition = CompositionMatrix::unannotated(orbits.multiplicities);
  }
  const std::string id = entry.value("id", spec.pattern.name);
  out.push_back({id, entry.value("group", id), CountingPlan(spec)});
}

}  // namespace

SimulationSpec parse_simulation_spec(std::string_view text, const std::filesystem::path& base) {
  try {
    const json j = json::parse(text);
    SimulationSpec spec;
    spec.graph = build_graph(j.at("graph"), base, spec.graph_label);
    spec.mode = j.contains("mode") ? parse_mode(j.at("mode").get<std::string>())
                                   : (spec.graph.directed() ? NeighborhoodMode::kDirectedUnion
                                                            : NeighborhoodMode::kUndirectedFull);
    for (const auto& entry : j.at("patterns")) {
      add_patterns(entry, base, spec.graph, spec.mode, spec.patterns);
    }
    if (spec.patterns.empty()) throw Error(ErrorCode::kInvalidArgument, "no patterns given");
    spec.design = build_design(j.at("design"));
    const auto& grid = j.at("grid");
    if (grid.is_array()) {
      spec.grid = grid.get<std::vector<std::size_t>>();
    } else {
      const auto& d = grid.at("doubling");
      const auto stop = d.contains("stop") ? d.at("stop").get<std::size_t>() : spec.graph.vertex_count();
      spec.grid = doubling_grid(d.at("start").get<std::size_t>(), stop);
    }
    spec.replications = j.value("replications", std::size_t{1000});
    if (j.contains("estimators")) {
      spec.estimators.clear();
      for (const auto& e : j.at("estimators")) spec.estimators.push_back(parse_estimator(e.get<std::string>()));
    }
    if (j.contains("metrics")) {
      const auto metrics = j.at("metrics").get<std::vector<std::string>>();
      spec.nrmse = std::find(metrics.begin(), metrics.end(), "nrmse") != metrics.end();
      spec.nmae = std::find(metrics.begin(), metrics.end(), "nmae") != metrics.end();
    }
    spec.seed = j.value("seed", std::uint64_t{1});
    spec.oracle_budget = j.value("oracle_budget", 2e10);

    if (spec.replications < 1) throw Error(ErrorCode::kInvalidArgument, "replications must be >= 1");
    for (auto x : spec.grid) {
      if (x < 1) throw Error(ErrorCode::kInvalidArgument, "grid values must be >= 1");
      if (spec.design.kind == DesignKind::kUisWithoutReplacement && x > spec.graph.vertex_count()) {
        throw Error(ErrorCode::kInvalidArgument, "grid value exceeds N for a without-replacement design");
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("simulation spec: ") + e.what());
  }
}

SimulationSpec load_simulation_spec(const std::filesystem::path& path) {
  return parse_simulation_spec(read_text_file(path), path.parent_path());
}

// ---- harness ----------------------------------------------------------------

SimulationReport run_simulation(const SimulationSpec& spec, std::size_t workers) {
  const Graph& g = spec.graph;
  const std::size_t patterns = spec.patterns.size();
  const std::size_t k = spec.replications;
  SimulationReport report;

  report.truth.resize(patterns);
  OracleOptions oracle;
  oracle.budget = spec.oracle_budget;
  parallel_for(patterns, workers, [&](std::size_t p) {
    const auto& plan = spec.patterns[p].plan;
    report.truth[p] = exact_count(g, plan.pattern(), plan.orbits(), plan.composition(), oracle);
  });

  const EgoSampler sampler(g, spec.design);
  const bool want_uc = std::find(spec.estimators.begin(), spec.estimators.end(),
                                 EstimatorKind::kUniqueCounting) != spec.estimators.end();
  EgoCensus::Options options;
  options.unique_copies = want_uc;
  options.coverage = true;
  options.workers = workers;
  if (spec.design.kind == DesignKind::kWis || spec.design.kind == DesignKind::kRandomWalk) {
    options.weights.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) options.weights[v] = sampler.weight(v);
  }
  std::vector<const CountingPlan*> plans;
  for (const auto& p : spec.patterns) plans.push_back(&p.plan);
  const EgoCensus census(g, spec.mode, plans, options);

  // Group membership for NMAE, in order of first appearance.
  std::vector<std::string> groups;
  std::vector<std::vector<std::size_t>> group_members;
  for (std::size_t p = 0; p < patterns; ++p) {
    auto it = std::find(groups.begin(), groups.end(), spec.patterns[p].group);
    if (it == groups.end()) {
      groups.push_back(spec.patterns[p].group);
      group_members.emplace_back();
      it = groups.end() - 1;
    }
    group_members[static_cast<std::size_t>(it - groups.begin())].push_back(p);
  }

  for (std::size_t gi = 0; gi < spec.grid.size(); ++gi) {
    const std::size_t n_prime = spec.grid[gi];
    const std::size_t estimators = spec.estimators.size();
    // estimates[e][p][r]
    std::vector<std::vector<std::vector<double>>> estimates(
        estimators, std::vector<std::vector<double>>(patterns, std::vector<double>(k)));
    std::vector<EgoCensus::Coverage> cover(k);
    parallel_for(k, workers, [&](std::size_t r) {
      const EgoSample sample = sampler.draw(n_prime, derive_seed(spec.seed, gi, r));
      cover[r] = census.coverage(sample);
      for (std::size_t e = 0; e < estimators; ++e) {
        for (std::size_t p = 0; p < patterns; ++p) {
          estimates[e][p][r] = spec.estimators[e] == EstimatorKind::kRoleOccupancy
                                   ? census.role_occupancy(p, sample)
                                   : census.unique_counting(p, sample, sampler);
        }
      }
    });

    double nodes = 0.0;
    double edges = 0.0;
    for (const auto& c : cover) {
      nodes += c.nodes;
      edges += c.edges;
    }
    nodes = 100.0 * nodes / static_cast<double>(k);
    edges = 100.0 * edges / static_cast<double>(k);

    for (std::size_t e = 0; e < estimators; ++e) {
      const std::string est = spec.estimators[e] == EstimatorKind::kRoleOccupancy ? "ro" : "uc";
      for (std::size_t p = 0; p < patterns; ++p) {
        const auto& xs = estimates[e][p];
        const double truth = static_cast<double>(report.truth[p]);
        const double mean = mean_of(xs);
        SimulationRow base{spec.patterns[p].id, est, n_prime, "", 0.0, 0.0, truth, mean, "", nodes, edges};
        if (spec.nrmse) {
          SimulationRow row = base;
          std::vector<double> sq(k);
          for (std::size_t r = 0; r < k; ++r) sq[r] = (xs[r] - truth) * (xs[r] - truth);
          const double mse = mean_of(sq);
          const double mse_se = sd_of(sq) / std::sqrt(static_cast<double>(k));
          const double root = std::sqrt(mse);
          if (truth > 0.0) {
            row.metric = "nrmse";
            row.value = root / truth;
            row.noise = root > 0.0 ? mse_se / (2.0 * root * truth) : 0.0;
          } else {
            row.metric = "rmse";
            row.value = root;
            row.noise = root > 0.0 ? mse_se / (2.0 * root) : 0.0;
            row.flag = "zero_truth";
          }
          report.rows.push_back(row);
        }
        SimulationRow bias = base;
        bias.metric = "bias";
        const double se = sd_of(xs) / std::sqrt(static_cast<double>(k));
        if (truth > 0.0) {
          bias.value = (mean - truth) / truth;
          bias.noise = se / truth;
        } else {
          bias.value = mean - truth;
          bias.noise = se;
          bias.flag = "zero_truth";
        }
        report.rows.push_back(bias);
        if (spec.keep_estimates) report.cells.push_back({p, gi, spec.estimators[e], xs});
      }
      if (!spec.nmae) continue;
      for (std::size_t gr = 0; gr < groups.size(); ++gr) {
        const auto& members = group_members[gr];
        double truth_sum = 0.0;
        for (auto p : members) truth_sum += static_cast<double>(report.truth[p]);
        SimulationRow row{groups[gr], est, n_prime, "nmae", 0.0, 0.0, truth_sum, 0.0, "", nodes, edges};
        if (truth_sum == 0.0) {
          row.flag = "zero_truth";
          report.rows.push_back(row);
          continue;
        }
        std::vector<double> per_rep(k);
        double estimate_sum = 0.0;
        for (std::size_t r = 0; r < k; ++r) {
          double err = 0.0;
          for (auto p : members) {
            err += std::abs(estimates[e][p][r] - static_cast<double>(report.truth[p]));
            estimate_sum += estimates[e][p][r];
          }
          per_rep[r] = err / truth_sum;
        }
        row.value = median(per_rep);
        // Standard error of a sample median under approximate normality.
        row.noise = 1.2533 * sd_of(per_rep) / std::sqrt(static_cast<double>(k));
        row.mean_estimate = estimate_sum / static_cast<double>(k);
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

namespace {

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

std::string simulation_to_csv(const SimulationReport& report) {
  std::ostringstream out;
  out << "pattern,estimator,grid,metric,value,noise,truth,mean_estimate,flag,nodes_pct,edges_pct\n";
  for (const auto& r : report.rows) {
    out << r.pattern << ',' << r.estimator << ',' << r.grid << ',' << r.metric << ','
        << format_double(r.value) << ',' << format_double(r.noise) << ','
        << format_double(r.truth) << ',' << format_double(r.mean_estimate) << ',' << r.flag << ','
        << format_double(r.nodes_pct) << ',' << format_double(r.edges_pct) << '\n';
  }
  return out.str();
}

std::string simulation_to_json(const SimulationSpec& spec, const SimulationReport& report) {
  ordered_json j;
  j["schema"] = "egocount.simulation/1";
  j["graph"] = {{"label", spec.graph_label},
                {"vertices", spec.graph.vertex_count()},
                {"edges", spec.graph.edge_count()},
                {"directed", spec.graph.directed()}};
  j["mode"] = std::string(to_string(spec.mode));
  j["design"] = std::string(to_string(spec.design.kind));
  j["replications"] = spec.replications;
  j["seed"] = spec.seed;
  j["grid"] = spec.grid;
  ordered_json truth = ordered_json::array();
  for (std::size_t p = 0; p < spec.patterns.size(); ++p) {
    truth.push_back({{"pattern", spec.patterns[p].id},
                     {"group", spec.patterns[p].group},
                     {"count", report.truth[p]}});
  }
  j["truth"] = truth;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json row = {{"pattern", r.pattern},   {"estimator", r.estimator},
                        {"grid", r.grid},         {"metric", r.metric},
                        {"value", r.value},       {"noise", r.noise},
                        {"truth", r.truth},       {"mean_estimate", r.mean_estimate},
                        {"nodes_pct", r.nodes_pct}, {"edges_pct", r.edges_pct}};
    if (!r.flag.empty()) row["flag"] = r.flag;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace egocount
