#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "egocount/counting.hpp"
#include "egocount/error.hpp"
#include "egocount/evaluation.hpp"
#include "egocount/graph.hpp"
#include "egocount/parallel.hpp"
#include "egocount/pattern.hpp"
#include "egocount/pipeline.hpp"
#include "egocount/replay.hpp"
#include "egocount/report.hpp"
#include "egocount/sampling.hpp"

namespace egocount::cli {

namespace {

struct Config {
  std::string graph;
  std::string attrs;
  bool directed = false;
  bool largest = false;
  std::string pattern;
  std::string mode;
  std::string design = "uis-wor";
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::string estimator = "ro";
  std::string variance = "auto";
  std::size_t pop_size = 0;
  std::string replay;
  std::string out;
  std::string format = "json";
  std::size_t workers = 0;
  std::string weights;
  std::size_t thin = 1;
  std::optional<std::size_t> burn_in;
  std::string dump_replay;
  bool anonymize = false;
  bool timing = false;
  bool design_given = false;
  std::string spec;
  std::optional<std::size_t> replications;
  std::optional<std::uint64_t> sim_seed;
};

// Flags from a JSON config file are appended unless given on the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto at = std::find(args.begin(), args.end(), "--config");
  if (at == args.end()) return args;
  if (at + 1 == args.end()) throw Error(ErrorCode::kInvalidArgument, "--config needs a path");
  const std::string path = *(at + 1);
  args.erase(at, at + 2);
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, "config file: " + std::string(e.what()));
  }
  if (!config.is_object()) throw Error(ErrorCode::kParse, "config file must hold a JSON object");
  for (const auto& [key, value] : config.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(flag);
      args.push_back(value.dump());
    }
  }
  return args;
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot write " + c.out);
  file << text;
  if (!file) throw Error(ErrorCode::kIo, "write failed for " + c.out);
}

PatternSpec load_spec(const Config& c) {
  if (c.pattern.empty()) throw Error(ErrorCode::kInvalidArgument, "--pattern is required");
  PatternSpec spec = load_pattern_spec(c.pattern);
  if (!c.mode.empty()) spec.mode = parse_mode(c.mode);
  return spec;
}

Graph load_population(const Config& c, bool directed) {
  if (c.graph.empty()) throw Error(ErrorCode::kInvalidArgument, "--graph is required");
  std::optional<std::filesystem::path> attrs;
  if (!c.attrs.empty()) attrs = c.attrs;
  Graph g = load_graph_file(c.graph, attrs, directed);
  if (c.largest) g = largest_component(g);
  return g;
}

std::string join(const std::vector<int>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

int cmd_orbits(const Config& c, std::ostream& out) {
  PatternSpec spec = load_spec(c);
  const auto orbits = with_observable(
      automorphism_orbits(spec.pattern, std::max(spec.pattern.order, kDefaultOrderCap)),
      spec.pattern, spec.mode);
  if (spec.unannotated) spec.composition = CompositionMatrix::unannotated(orbits.multiplicities);
  validate_pattern(spec.pattern, orbits, spec.composition, spec.mode);

  std::ostringstream text;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["pattern"] = spec.pattern.name;
    j["mode"] = std::string(to_string(spec.mode));
    j["orbits"] = orbits.orbits;
    j["multiplicities"] = orbits.multiplicities;
    j["observable"] = orbits.observable;
    j["multiplicity_sum"] = orbits.multiplicity_sum;
    j["automorphisms"] = orbits.automorphism_count();
    j["measurable"] = true;
    text << j.dump(2) << '\n';
  } else {
    const int a = orbits.orbit_count();
    text << a << (a == 1 ? " orbit" : " orbits") << ", M=" << join(orbits.multiplicities)
         << ", observable=" << join(orbits.observable) << ", Σm=" << orbits.multiplicity_sum
         << '\n';
    for (int i = 0; i < a; ++i) text << "orbit " << i << ": " << join(orbits.orbits[i]) << '\n';
    text << "mode: " << to_string(spec.mode) << ", |Aut|=" << orbits.automorphism_count()
         << ", measurable from egonets\n";
  }
  emit(c, text.str(), out);
  return 0;
}

int cmd_exact(const Config& c, bool directed_given, std::ostream& out) {
  PatternSpec spec = load_spec(c);
  const Graph g = load_population(c, directed_given ? c.directed : spec.pattern.directed);
  const auto orbits =
      automorphism_orbits(spec.pattern, std::max(spec.pattern.order, kDefaultOrderCap));
  if (spec.unannotated) spec.composition = CompositionMatrix::unannotated(orbits.multiplicities);
  if (spec.composition.rows() != orbits.orbit_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "composition rows must match the orbit count");
  }
  for (int r = 0; r < spec.composition.rows(); ++r) {
    if (spec.composition.row_sum(r) != orbits.multiplicities[r]) {
      throw Error(ErrorCode::kCompositionRowSumMismatch, "composition row sums must equal M");
    }
  }
  const auto count = exact_count(g, spec.pattern, orbits, spec.composition);
  std::ostringstream text;
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["pattern"] = spec.pattern.name;
    j["count"] = count;
    text << j.dump(2) << '\n';
  } else {
    text << count << '\n';
  }
  emit(c, text.str(), out);
  return 0;
}

SampleDesign make_design(const Config& c, const Graph* g) {
  SampleDesign d;
  d.kind = parse_design_kind(c.design);
  d.with_replacement = d.kind != DesignKind::kUisWithoutReplacement;
  d.thinning = c.thin;
  d.burn_in = c.burn_in;
  if (d.kind == DesignKind::kWis && !c.weights.empty() && c.weights != "degree") {
    if (g == nullptr) throw Error(ErrorCode::kInvalidArgument, "weights need the graph");
    std::istringstream in(read_text_file(c.weights));
    d.weights.assign(g->vertex_count(), 0.0);
    std::unordered_map<OriginalId, Vertex> index;
    for (Vertex v = 0; v < g->vertex_count(); ++v) index.emplace(g->original_id(v), v);
    OriginalId id = 0;
    double w = 0.0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      if (!(fields >> id >> w)) {
        throw Error(ErrorCode::kParse, "weights line " + std::to_string(line_no) + ": expected id weight");
      }
      auto it = index.find(id);
      if (it != index.end()) d.weights[it->second] = w;
    }
  }
  return d;
}

int cmd_estimate(const Config& c, bool directed_given, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  PatternSpec spec = load_spec(c);
  const std::size_t workers = resolve_workers(c.workers ? std::optional(c.workers) : std::nullopt);
  EstimateOptions options;
  options.estimator = parse_estimator(c.estimator);
  if (c.variance != "auto") options.variance = parse_variance_method(c.variance);
  options.workers = workers;

  EstimateReport report;
  if (!c.replay.empty()) {
    const ReplaySample replay = read_replay_file(c.replay);
    if (options.estimator == EstimatorKind::kUniqueCounting) {
      for (const auto& e : replay.egonets) {
        if (!e.labeled()) {
          throw Error(ErrorCode::kUnlabeledSample,
                      "unique counting needs labeled alters; the replay file is anonymized");
        }
      }
    }
    if (c.mode.empty()) spec.mode = replay.mode;
    const CountingPlan plan(spec);
    std::optional<std::size_t> pop;
    if (c.pop_size) pop = c.pop_size;
    std::optional<DesignKind> design;
    if (c.design_given) design = parse_design_kind(c.design);
    const SampledEgonets sample = to_sampled_egonets(replay, pop, design);
    report = estimate(sample, plan, options);
    report.seed = replay.seed.value_or(0);
  } else {
    const Graph g = load_population(c, directed_given ? c.directed : spec.pattern.directed);
    if (c.mode.empty() && g.directed() && spec.mode == NeighborhoodMode::kUndirectedFull) {
      spec.mode = NeighborhoodMode::kDirectedUnion;
    }
    const CountingPlan plan(spec);
    if (c.n == 0) throw Error(ErrorCode::kInvalidArgument, "--n (number of draws) is required");
    const EgoSampler sampler(g, make_design(c, &g));
    const EgoSample sample = sampler.draw(c.n, c.seed);
    const SampledEgonets egonets = collect_egonets(g, sampler, sample, spec.mode, workers);
    report = estimate(egonets, plan, options);
    report.seed = c.seed;
    if (!c.dump_replay.empty()) {
      std::ofstream file(c.dump_replay, std::ios::binary);
      if (!file) throw Error(ErrorCode::kIo, "cannot write " + c.dump_replay);
      ReplayWriteOptions replay_options;
      replay_options.anonymize = c.anonymize;
      write_replay(file, g, sampler, sample, spec.mode, replay_options);
    }
  }
  if (c.timing) {
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  emit(c, c.format == "csv" ? report_to_csv(report) : report_to_json(report), out);
  return 0;
}

int cmd_simulate(const Config& c, std::ostream& out) {
  if (c.spec.empty()) throw Error(ErrorCode::kInvalidArgument, "a simulation spec file is required");
  SimulationSpec spec = load_simulation_spec(c.spec);
  if (c.replications) spec.replications = *c.replications;
  if (c.sim_seed) spec.seed = *c.sim_seed;
  if (spec.replications < 1) throw Error(ErrorCode::kInvalidArgument, "replications must be >= 1");
  const std::size_t workers = resolve_workers(c.workers ? std::optional(c.workers) : std::nullopt);
  const SimulationReport report = run_simulation(spec, workers);
  emit(c, c.format == "json" ? simulation_to_json(spec, report) : simulation_to_csv(report), out);
  return 0;
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = std::string(code);
  j["message"] = message;
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Subgraph count estimation from egocentric network samples", "egocount"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    c.format = fallback;
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  };

  auto* orbits = app.add_subcommand("orbits", "Show automorphism orbits and observable roles");
  orbits->add_option("--pattern", c.pattern, "Pattern file (JSON)")->required();
  orbits->add_option("--mode", c.mode, "Neighborhood mode");
  orbits->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  orbits->add_option("--out", c.out, "Output file");

  bool directed_given = false;
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", c.graph, "Edge list (optionally .gz)");
    sub->add_option("--attrs", c.attrs, "Vertex attribute table: id state");
    sub->add_flag("--directed", c.directed, "Treat the edge list as directed");
    sub->add_flag("--largest-component", c.largest, "Keep only the largest weak component");
  };

  auto* exact = app.add_subcommand("exact", "Exact count on the whole graph");
  add_graph(exact);
  exact->add_option("--pattern", c.pattern, "Pattern file (JSON)")->required();
  exact->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  exact->add_option("--out", c.out, "Output file");

  auto* est = app.add_subcommand("estimate", "Estimate a count from a sample of egonets");
  add_graph(est);
  est->add_option("--pattern", c.pattern, "Pattern file (JSON)")->required();
  est->add_option("--mode", c.mode, "Neighborhood mode");
  est->add_option("--design", c.design, "uis-wr | uis-wor | wis | rw");
  est->add_option("--n", c.n, "Number of draws n'");
  est->add_option("--seed", c.seed, "Random seed");
  est->add_option("--estimator", c.estimator, "ro | uc")->check(CLI::IsMember({"ro", "uc"}));
  est->add_option("--variance", c.variance, "ht | bh | none | auto")
      ->check(CLI::IsMember({"ht", "bh", "none", "auto"}));
  est->add_option("--pop-size", c.pop_size, "Population size N for replayed egonets");
  est->add_option("--replay", c.replay, "Estimate from a replay file instead of sampling");
  est->add_option("--workers", c.workers, "Worker threads");
  est->add_option("--weights", c.weights, "WIS weights: 'degree' or a file of 'id weight' lines");
  est->add_option("--thin", c.thin, "Random walk thinning")->check(CLI::PositiveNumber);
  est->add_option("--burn-in", c.burn_in, "Random walk burn-in steps");
  est->add_option("--dump-replay", c.dump_replay, "Also write the sampled egonets as a replay file");
  est->add_flag("--anonymize", c.anonymize, "Drop alter ids from the dumped replay");
  est->add_flag("--timing", c.timing, "Add wall-clock time to the report");
  add_format(est, "json");

  auto* sim = app.add_subcommand("simulate", "Repeated-sampling simulation from a spec file");
  sim->add_option("spec,--spec", c.spec, "Simulation spec (JSON)");
  sim->add_option("--workers", c.workers, "Worker threads");
  sim->add_option("--replications", c.replications, "Override the replication count");
  sim->add_option("--seed", c.sim_seed, "Override the seed");
  add_format(sim, "csv");
  c.format = "text";  // orbits/exact default; estimate and simulate reset below

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "Usage", e.what());
    return 2;
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::kIo ? 1 : 2;
  }

  try {
    if (*orbits) return cmd_orbits(c, out);
    directed_given = (exact->parsed() && exact->count("--directed") > 0) ||
                     (est->parsed() && est->count("--directed") > 0);
    if (*exact) return cmd_exact(c, directed_given, out);
    if (*est) {
      if (est->count("--format") == 0) c.format = "json";
      c.design_given = est->count("--design") > 0;
      return cmd_estimate(c, directed_given, out);
    }
    if (*sim) {
      if (sim->count("--format") == 0) c.format = "csv";
      return cmd_simulate(c, out);
    }
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::kIo ? 1 : 2;
  } catch (const std::bad_alloc&) {
    write_error(err, "OutOfMemory", "allocation failed");
    return 2;
  }
  return 2;
}

}  // namespace egocount::cli
