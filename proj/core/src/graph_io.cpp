#include <zlib.h>

#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "egocount/error.hpp"
#include "egocount/graph.hpp"

namespace egocount {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses exactly two whitespace-separated integers.
bool parse_pair(std::string_view line, std::int64_t& a, std::int64_t& b) {
  auto skip_ws = [&](const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p;
  };
  const char* p = line.data();
  const char* end = p + line.size();
  p = skip_ws(p, end);
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == end || (*r1.ptr != ' ' && *r1.ptr != '\t')) return false;
  p = skip_ws(r1.ptr, end);
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{}) return false;
  return skip_ws(r2.ptr, end) == end;
}

bool is_blank_or_comment(std::string_view line) {
  return line.empty() || line.front() == '#';
}

std::string parse_error(const char* what, std::size_t line_no, std::string_view line) {
  std::ostringstream msg;
  msg << what << " at line " << line_no << ": '" << line << "'";
  return msg.str();
}

}  // namespace

Graph load_graph(std::istream& edge_list, std::istream* attribute_table, bool directed) {
  std::unordered_map<OriginalId, Vertex> compact;
  std::vector<OriginalId> ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto intern = [&](OriginalId id) {
    auto [it, inserted] = compact.try_emplace(id, static_cast<Vertex>(ids.size()));
    if (inserted) ids.push_back(id);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(edge_list, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (is_blank_or_comment(line)) continue;
    std::int64_t u = 0, v = 0;
    if (!parse_pair(line, u, v)) {
      throw Error(ErrorCode::kParse, parse_error("malformed edge", line_no, line));
    }
    if (u == v) continue;  // loops never introduce vertices
    Vertex cu = intern(u);
    Vertex cv = intern(v);
    edges.emplace_back(cu, cv);
  }

  std::vector<State> states(ids.size(), 1);
  if (attribute_table != nullptr) {
    line_no = 0;
    while (std::getline(*attribute_table, raw)) {
      ++line_no;
      auto line = trim(raw);
      if (is_blank_or_comment(line)) continue;
      std::int64_t v = 0, s = 0;
      if (!parse_pair(line, v, s)) {
        throw Error(ErrorCode::kParse, parse_error("malformed attribute", line_no, line));
      }
      auto it = compact.find(v);
      if (it == compact.end()) {
        throw Error(ErrorCode::kParse, parse_error("attribute for unknown vertex", line_no, line));
      }
      if (s < 1 || s > std::numeric_limits<State>::max()) {
        throw Error(ErrorCode::kParse, parse_error("state must be >= 1", line_no, line));
      }
      states[it->second] = static_cast<State>(s);
    }
  }
  const std::size_t n = ids.size();
  return Graph::from_edges(n, directed, std::move(edges), std::move(states), std::move(ids));
}

std::string read_text_file(const std::filesystem::path& path) {
  if (path.extension() == ".gz") {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) throw Error(ErrorCode::kIo, "cannot open " + path.string());
    std::string content;
    char buffer[1 << 16];
    int got = 0;
    while ((got = gzread(file, buffer, sizeof buffer)) > 0) content.append(buffer, got);
    int err = 0;
    const char* msg = gzerror(file, &err);
    gzclose(file);
    if (got < 0 || (err != Z_OK && err != Z_STREAM_END)) {
      throw Error(ErrorCode::kIo, "gzip read failed for " + path.string() + ": " + msg);
    }
    return content;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph_file(const std::filesystem::path& edge_list,
                      const std::optional<std::filesystem::path>& attribute_table,
                      bool directed) {
  std::istringstream edges(read_text_file(edge_list));
  if (!attribute_table) return load_graph(edges, nullptr, directed);
  std::istringstream attrs(read_text_file(*attribute_table));
  return load_graph(edges, &attrs, directed);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  // The loader numbers vertices by first appearance, so edges are emitted in an
  // order that introduces vertices 0,1,2,... in sequence whenever possible.
  const auto edges = g.edges();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  std::vector<bool> seen(n, false);
  std::vector<bool> written(edges.size(), false);
  auto emit = [&](std::size_t e) {
    const auto [u, v] = edges[e];
    out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
    written[e] = true;
    seen[u] = true;
    seen[v] = true;
  };
  for (Vertex k = 0; k < n; ++k) {
    if (seen[k]) continue;
    std::size_t pick = edges.size();
    for (std::size_t e : incident[k]) {
      Vertex other = edges[e].first == k ? edges[e].second : edges[e].first;
      if (seen[other]) {
        pick = e;
        break;
      }
    }
    if (pick == edges.size()) {
      // k first appeared together with a new partner; prefer k as the source.
      for (std::size_t e : incident[k]) {
        if (edges[e].first != k) continue;
        if (pick == edges.size() || edges[e].second < edges[pick].second) pick = e;
      }
      if (pick == edges.size() && !incident[k].empty()) pick = incident[k].front();
    }
    if (pick != edges.size()) emit(pick);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!written[e]) emit(e);
  }
}

void write_attributes(const Graph& g, std::ostream& out) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << g.original_id(v) << ' ' << g.state(v) << '\n';
  }
}

}  // namespace egocount
