#include <json.hpp>

#include "egocount/error.hpp"
#include "egocount/pattern.hpp"

namespace egocount {

using nlohmann::json;

namespace {

PatternSpec spec_from_json(const json& doc) {
  PatternSpec spec;
  Pattern& p = spec.pattern;
  p.name = doc.value("name", std::string("pattern"));
  p.directed = doc.value("directed", false);
  int max_id = -1;
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::kParse, "pattern needs an 'edges' array");
  }
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array() || edge.size() != 2) {
      throw Error(ErrorCode::kParse, "pattern edges must be [u, v] pairs");
    }
    int u = edge[0].get<int>();
    int v = edge[1].get<int>();
    p.edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  p.order = doc.contains("order") ? doc["order"].get<int>() : max_id + 1;
  p.count_mode = parse_count_mode(doc.value("count_mode", std::string("induced")));
  p.check();

  spec.mode = parse_mode(doc.value("mode", std::string(p.directed ? "directed_union"
                                                                     : "undirected_full")));
  auto orbits = automorphism_orbits(p);
  const json composition = doc.contains("composition") ? doc["composition"] : json("unannotated");
  if (composition.is_string()) {
    if (composition.get<std::string>() != "unannotated") {
      throw Error(ErrorCode::kParse, "composition must be \"unannotated\" or a matrix");
    }
    spec.unannotated = true;
    spec.composition = CompositionMatrix::unannotated(orbits.multiplicities);
  } else if (composition.is_array()) {
    spec.unannotated = false;
    spec.composition = CompositionMatrix::from_rows(composition.get<std::vector<std::vector<int>>>());
  } else {
    throw Error(ErrorCode::kParse, "composition must be \"unannotated\" or a matrix");
  }
  return spec;
}

}  // namespace

PatternSpec parse_pattern_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("pattern file: ") + e.what());
  }
  try {
    return spec_from_json(doc);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("pattern file: ") + e.what());
  }
}

PatternSpec load_pattern_spec(const std::filesystem::path& path) {
  return parse_pattern_spec(read_text_file(path));
}

std::string pattern_spec_to_json(const PatternSpec& spec) {
  json doc;
  doc["name"] = spec.pattern.name;
  doc["directed"] = spec.pattern.directed;
  doc["order"] = spec.pattern.order;
  json edges = json::array();
  for (auto [u, v] : spec.pattern.edges) edges.push_back({u, v});
  doc["edges"] = edges;
  doc["count_mode"] = std::string(to_string(spec.pattern.count_mode));
  doc["mode"] = std::string(to_string(spec.mode));
  if (spec.unannotated) {
    doc["composition"] = "unannotated";
  } else {
    json rows = json::array();
    for (int i = 0; i < spec.composition.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < spec.composition.cols(); ++j) row.push_back(spec.composition.at(i, j));
      rows.push_back(row);
    }
    doc["composition"] = rows;
  }
  return doc.dump(2);
}

}  // namespace egocount
