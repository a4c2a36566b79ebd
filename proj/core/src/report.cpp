#include "egocount/report.hpp"

#include <json.hpp>

#include <sstream>
#include <unordered_map>

#include "egocount/error.hpp"

namespace egocount {

using nlohmann::ordered_json;

namespace {

std::string hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << value;
  return out.str();
}

}  // namespace

std::string report_to_json(const EstimateReport& r) {
  ordered_json j;
  j["schema"] = "egocount.estimate/" + std::to_string(kReportSchemaVersion);
  j["estimator"] = std::string(to_string(r.estimator));
  j["estimate"] = r.estimate;
  j["variance"] = r.variance ? ordered_json(*r.variance) : ordered_json(nullptr);
  j["variance_method"] = std::string(to_string(r.variance_method));
  j["variance_truncated"] = r.variance_truncated;
  j["pattern"] = r.pattern;
  j["pattern_fingerprint"] = hex(r.pattern_fingerprint);
  j["multiplicity_sum"] = r.multiplicity_sum;
  j["design"] = r.design;
  j["population_size"] = r.population_size;
  j["n"] = r.n;
  j["n_prime"] = r.n_prime;
  if (r.estimator == EstimatorKind::kUniqueCounting) j["copies_observed"] = r.copies_observed;
  j["seed"] = r.seed;
  if (r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const EstimateReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "schema,estimator,estimate,variance,variance_method,variance_truncated,pattern,"
         "pattern_fingerprint,multiplicity_sum,design,population_size,n,n_prime,"
         "copies_observed,seed";
  if (r.elapsed_seconds) out << ",elapsed_seconds";
  out << '\n';
  out << "egocount.estimate/" << kReportSchemaVersion << ',' << to_string(r.estimator) << ','
      << r.estimate << ',';
  if (r.variance) out << *r.variance;
  out << ',' << to_string(r.variance_method) << ',' << (r.variance_truncated ? "true" : "false")
      << ',' << r.pattern << ',' << hex(r.pattern_fingerprint) << ',' << r.multiplicity_sum << ','
      << r.design << ',' << r.population_size << ',' << r.n << ',' << r.n_prime << ','
      << r.copies_observed << ',' << r.seed;
  if (r.elapsed_seconds) out << ',' << *r.elapsed_seconds;
  out << '\n';
  return out.str();
}

std::string sample_to_json(const Graph& g, const EgoSample& s) {
  auto ids = [&](const std::vector<Vertex>& vs) {
    std::vector<OriginalId> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(g.original_id(v));
    return out;
  };
  ordered_json j;
  j["schema"] = "egocount.sample/" + std::to_string(kReportSchemaVersion);
  j["design"] = std::string(to_string(s.kind));
  j["seed"] = s.seed;
  j["population_size"] = s.population_size;
  j["per_draw_scale"] = s.per_draw_scale;
  j["draws"] = ids(s.draws);
  j["unique_egos"] = ids(s.unique_egos);
  j["inclusion"] = s.inclusion;
  j["per_draw"] = s.per_draw;
  return j.dump() + "\n";
}

EgoSample sample_from_json(const Graph& g, std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    std::unordered_map<OriginalId, Vertex> index;
    for (Vertex v = 0; v < g.vertex_count(); ++v) index.emplace(g.original_id(v), v);
    auto vertices = [&](const nlohmann::json& list) {
      std::vector<Vertex> out;
      for (OriginalId id : list.get<std::vector<OriginalId>>()) {
        auto it = index.find(id);
        if (it == index.end()) {
          throw Error(ErrorCode::kInvalidArgument, "sample names vertex " + std::to_string(id) +
                                                       " which is not in the graph");
        }
        out.push_back(it->second);
      }
      return out;
    };
    EgoSample s;
    s.kind = parse_design_kind(j.at("design").get<std::string>());
    s.seed = j.at("seed").get<std::uint64_t>();
    s.population_size = j.at("population_size").get<std::size_t>();
    s.per_draw_scale = j.at("per_draw_scale").get<double>();
    s.draws = vertices(j.at("draws"));
    s.unique_egos = vertices(j.at("unique_egos"));
    s.inclusion = j.at("inclusion").get<std::vector<double>>();
    s.per_draw = j.at("per_draw").get<std::vector<double>>();
    if (s.inclusion.size() != s.unique_egos.size() || s.per_draw.size() != s.unique_egos.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "sample vectors disagree in length");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("sample file: ") + e.what());
  }
}

}  // namespace egocount
