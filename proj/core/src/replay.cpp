#include "egocount/replay.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "egocount/error.hpp"

namespace egocount {

using nlohmann::json;

namespace {

[[noreturn]] void bad_record(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "replay line " + std::to_string(line) + ": " + what);
}

}  // namespace

ReplaySample read_replay(std::istream& in) {
  ReplaySample replay;
  std::string text;
  std::size_t line_no = 0;
  bool mode_seen = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(text);
    } catch (const json::exception& e) {
      bad_record(line_no, e.what());
    }
    if (!record.is_object()) bad_record(line_no, "expected a JSON object");
    try {
      if (record.contains("egocount_replay")) {
        if (record.value("egocount_replay", 0) != 1) bad_record(line_no, "unsupported replay version");
        if (record.contains("mode")) {
          replay.mode = parse_mode(record.at("mode").get<std::string>());
          mode_seen = true;
        }
        if (record.contains("design")) {
          replay.design = parse_design_kind(record.at("design").get<std::string>());
        }
        if (record.contains("population_size")) {
          replay.population_size = record.at("population_size").get<std::size_t>();
        }
        if (record.contains("n_prime")) replay.n_prime = record.at("n_prime").get<std::size_t>();
        if (record.contains("seed")) replay.seed = record.at("seed").get<std::uint64_t>();
        continue;
      }

      const OriginalId ego = record.at("ego").get<OriginalId>();
      std::vector<OriginalId> labels;
      std::size_t size = 0;
      if (record.contains("alters") && !record.at("alters").is_null()) {
        auto alters = record.at("alters").get<std::vector<OriginalId>>();
        labels.reserve(alters.size() + 1);
        labels.push_back(ego);
        labels.insert(labels.end(), alters.begin(), alters.end());
        size = labels.size();
      } else if (record.contains("alter_count")) {
        size = record.at("alter_count").get<std::size_t>() + 1;
      } else {
        bad_record(line_no, "record needs \"alters\" or \"alter_count\"");
      }
      auto edges = record.value("edges", std::vector<std::pair<LocalVertex, LocalVertex>>{});
      for (auto [a, b] : edges) {
        if (a >= size || b >= size) bad_record(line_no, "edge endpoint outside the egonet");
      }
      std::vector<State> states = record.value("states", std::vector<State>{});
      if (states.empty()) states.assign(size, 1);
      if (states.size() != size) bad_record(line_no, "one state per egonet member is required");

      NeighborhoodMode mode = replay.mode;
      if (record.contains("mode")) {
        mode = parse_mode(record.at("mode").get<std::string>());
        if (mode_seen && mode != replay.mode) bad_record(line_no, "records mix neighborhood modes");
        replay.mode = mode;
        mode_seen = true;
      }
      replay.egos.push_back(ego);
      replay.egonets.push_back(
          Egonet::from_local(mode, size, std::move(edges), std::move(states), std::move(labels)));
      replay.inclusion.push_back(record.contains("inclusion")
                                     ? std::optional<double>(record.at("inclusion").get<double>())
                                     : std::nullopt);
      replay.weights.push_back(record.contains("weight")
                                   ? std::optional<double>(record.at("weight").get<double>())
                                   : std::nullopt);
      const auto draws = record.value("draws", std::size_t{1});
      if (draws < 1) bad_record(line_no, "draws must be >= 1");
      replay.draws.push_back(draws);
    } catch (const json::exception& e) {
      bad_record(line_no, e.what());
    }
  }
  return replay;
}

ReplaySample read_replay_file(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  return read_replay(in);
}

void write_replay(std::ostream& out, const Graph& g, const EgoSampler& sampler,
                  const EgoSample& sample, NeighborhoodMode mode,
                  const ReplayWriteOptions& options) {
  json header = {{"egocount_replay", 1},
                 {"mode", std::string(to_string(mode))},
                 {"design", std::string(to_string(sample.kind))},
                 {"n_prime", sample.n_prime()},
                 {"seed", sample.seed}};
  if (options.include_population) header["population_size"] = sample.population_size;
  out << header.dump() << '\n';

  std::map<Vertex, std::size_t> draw_counts;
  for (Vertex v : sample.draws) ++draw_counts[v];
  for (Vertex ego : sample.unique_egos) {
    const Egonet e = extract_egonet(g, ego, mode);
    json record;
    record["ego"] = g.original_id(ego);
    if (options.anonymize) {
      record["alter_count"] = e.size() - 1;
    } else {
      auto labels = e.labels();
      record["alters"] = std::vector<OriginalId>(labels.begin() + 1, labels.end());
    }
    record["edges"] = e.edges();
    record["states"] = std::vector<State>(e.states().begin(), e.states().end());
    if (sample.kind == DesignKind::kWis || sample.kind == DesignKind::kRandomWalk) {
      record["weight"] = sampler.weight(ego);
    }
    record["draws"] = draw_counts[ego];
    out << record.dump() << '\n';
  }
}

SampledEgonets to_sampled_egonets(const ReplaySample& replay,
                                  std::optional<std::size_t> population_size,
                                  std::optional<DesignKind> design) {
  SampledEgonets out;
  out.kind = design ? *design
                    : replay.design.value_or(DesignKind::kUisWithoutReplacement);
  if (population_size) {
    out.population_size = *population_size;
  } else if (replay.population_size) {
    out.population_size = *replay.population_size;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "population size N is required for replayed egonets (use --pop-size)");
  }
  std::size_t total_draws = 0;
  for (auto d : replay.draws) total_draws += d;
  out.n_prime = replay.n_prime.value_or(total_draws);
  if (out.population_size < replay.egonets.size()) {
    throw Error(ErrorCode::kInvalidArgument, "population size is smaller than the sample");
  }
  out.egonets = replay.egonets;

  const std::size_t n = replay.egonets.size();
  const double N = static_cast<double>(out.population_size);
  std::vector<double> draw_weights;
  const bool weighted = out.kind == DesignKind::kWis || out.kind == DesignKind::kRandomWalk;
  if (weighted) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!replay.weights[i]) {
        if (replay.inclusion[i]) continue;
        throw Error(ErrorCode::kInvalidArgument,
                    "weighted designs need a \"weight\" or \"inclusion\" on every record");
      }
      draw_weights.insert(draw_weights.end(), replay.draws[i], *replay.weights[i]);
    }
  }
  out.inclusion.resize(n);
  out.per_draw.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weighted && replay.weights[i] && !draw_weights.empty()) {
      out.per_draw[i] = hansen_hurwitz_per_draw(draw_weights, *replay.weights[i], out.population_size);
    } else {
      out.per_draw[i] = 1.0 / N;
    }
    if (replay.inclusion[i]) {
      out.inclusion[i] = *replay.inclusion[i];
    } else if (weighted) {
      out.inclusion[i] = node_inclusion_prob(DesignKind::kWis, out.population_size, out.n_prime,
                                             out.per_draw[i]);
    } else {
      out.inclusion[i] = node_inclusion_prob(out.kind, out.population_size, out.n_prime);
    }
  }
  return out;
}

}  // namespace egocount
