#include "egocount/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "egocount/error.hpp"

namespace egocount {

std::string_view to_string(CountMode mode) {
  switch (mode) {
    case CountMode::kInduced: return "induced";
    case CountMode::kNonInduced: return "non_induced";
    case CountMode::kMaximalClique: return "maximal_clique";
  }
  return "unknown";
}

CountMode parse_count_mode(std::string_view text) {
  if (text == "induced") return CountMode::kInduced;
  if (text == "non_induced" || text == "noninduced") return CountMode::kNonInduced;
  if (text == "maximal_clique") return CountMode::kMaximalClique;
  throw Error(ErrorCode::kParse, "unknown count mode '" + std::string(text) + "'");
}

void Pattern::check() const {
  if (order < 2) throw Error(ErrorCode::kInvalidPattern, "pattern order must be at least 2");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::kInvalidPattern, "pattern edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidPattern, "pattern loops are not supported");
    if (!directed && u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw Error(ErrorCode::kInvalidPattern, "duplicate pattern edge");
    }
  }
  if (count_mode == CountMode::kMaximalClique && (directed || !is_complete())) {
    throw Error(ErrorCode::kInvalidPattern,
                "maximal_clique counting needs an undirected complete pattern");
  }
}

bool Pattern::has_edge(int u, int v) const {
  for (auto [a, b] : edges) {
    if (a == u && b == v) return true;
    if (!directed && a == v && b == u) return true;
  }
  return false;
}

bool Pattern::is_complete() const {
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (directed ? !(has_edge(u, v) && has_edge(v, u)) : !has_edge(u, v)) return false;
    }
  }
  return true;
}

CompositionMatrix::CompositionMatrix(int rows, int cols, std::vector<int> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows < 0 || cols < 0 || values_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "composition matrix shape does not match its data");
  }
  for (int v : values_) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "composition entries must be >= 0");
  }
}

CompositionMatrix CompositionMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<int> values;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "composition matrix rows differ in length");
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return CompositionMatrix(static_cast<int>(rows.size()), cols, std::move(values));
}

CompositionMatrix CompositionMatrix::unannotated(const std::vector<int>& multiplicities) {
  return CompositionMatrix(static_cast<int>(multiplicities.size()), 1, multiplicities);
}

int CompositionMatrix::row_sum(int row) const {
  int sum = 0;
  for (int c = 0; c < cols_; ++c) sum += at(row, c);
  return sum;
}

int CompositionMatrix::total() const { return std::accumulate(values_.begin(), values_.end(), 0); }

namespace {

struct AutomorphismSearch {
  const Pattern& pattern;
  int h;
  std::vector<std::vector<char>> adj;  // adj[u][v] = arc u->v
  std::vector<int> out_deg, in_deg;
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<std::vector<int>> found;

  explicit AutomorphismSearch(const Pattern& p)
      : pattern(p), h(p.order), adj(h, std::vector<char>(h, 0)), out_deg(h, 0), in_deg(h, 0),
        image(h, -1), used(h, false) {
    for (auto [u, v] : p.edges) {
      adj[u][v] = 1;
      if (!p.directed) adj[v][u] = 1;
    }
    for (int u = 0; u < h; ++u) {
      for (int v = 0; v < h; ++v) {
        out_deg[u] += adj[u][v];
        in_deg[v] += adj[u][v];
      }
    }
  }

  void extend(int u) {
    if (u == h) {
      found.push_back(image);
      return;
    }
    for (int c = 0; c < h; ++c) {
      if (used[c] || out_deg[c] != out_deg[u] || in_deg[c] != in_deg[u]) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) {
        ok = adj[u][w] == adj[c][image[w]] && adj[w][u] == adj[image[w]][c];
      }
      if (!ok) continue;
      image[u] = c;
      used[c] = true;
      extend(u + 1);
      used[c] = false;
    }
    image[u] = -1;
  }
};

}  // namespace

OrbitStructure automorphism_orbits(const Pattern& pattern, int cap) {
  pattern.check();
  if (pattern.order > cap) {
    throw Error(ErrorCode::kPatternTooLarge, "pattern order " + std::to_string(pattern.order) +
                                                 " exceeds the cap of " + std::to_string(cap));
  }
  AutomorphismSearch search(pattern);
  search.extend(0);

  const int h = pattern.order;
  std::vector<int> parent(h);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& sigma : search.found) {
    for (int v = 0; v < h; ++v) {
      int a = find(v), b = find(sigma[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  OrbitStructure result;
  result.orbit_of.assign(h, -1);
  for (int v = 0; v < h; ++v) {
    int root = find(v);
    if (result.orbit_of[root] < 0) {
      result.orbit_of[root] = static_cast<int>(result.orbits.size());
      result.orbits.emplace_back();
    }
    result.orbit_of[v] = result.orbit_of[root];
    result.orbits[result.orbit_of[v]].push_back(v);
  }
  for (const auto& members : result.orbits) {
    result.multiplicities.push_back(static_cast<int>(members.size()));
  }
  result.automorphisms = std::move(search.found);
  return result;
}

std::vector<int> observable_orbits(const OrbitStructure& orbits, const Pattern& pattern,
                                   NeighborhoodMode mode) {
  if (!mode_fits(mode, pattern.directed)) {
    throw Error(ErrorCode::kModeMismatch, "neighborhood mode does not match pattern directedness");
  }
  auto spans = [&](int v) {
    for (int w = 0; w < pattern.order; ++w) {
      if (w == v) continue;
      bool ok = false;
      switch (mode) {
        case NeighborhoodMode::kUndirectedFull:
        case NeighborhoodMode::kDirectedUnion: ok = pattern.adjacent(v, w); break;
        case NeighborhoodMode::kDirectedOut: ok = pattern.has_edge(v, w); break;
        case NeighborhoodMode::kDirectedIn: ok = pattern.has_edge(w, v); break;
      }
      if (!ok) return false;
    }
    return true;
  };
  std::vector<int> observable;
  for (int i = 0; i < orbits.orbit_count(); ++i) {
    const auto& members = orbits.orbits[i];
    if (std::all_of(members.begin(), members.end(), spans)) observable.push_back(i);
  }
  return observable;
}

OrbitStructure with_observable(OrbitStructure orbits, const Pattern& pattern,
                               NeighborhoodMode mode) {
  orbits.observable = observable_orbits(orbits, pattern, mode);
  orbits.observable_multiplicities.clear();
  orbits.multiplicity_sum = 0;
  for (int r : orbits.observable) {
    orbits.observable_multiplicities.push_back(orbits.multiplicities[r]);
    orbits.multiplicity_sum += orbits.multiplicities[r];
  }
  return orbits;
}

void validate_pattern(const Pattern& pattern, const OrbitStructure& orbits,
                      const CompositionMatrix& composition, NeighborhoodMode mode) {
  pattern.check();
  auto observable = observable_orbits(orbits, pattern, mode);
  if (observable.empty()) {
    throw Error(ErrorCode::kEmptyObservableSet,
                "pattern has no observable orbit under " + std::string(to_string(mode)));
  }
  if (composition.rows() != orbits.orbit_count() || composition.cols() < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "composition matrix must be " + std::to_string(orbits.orbit_count()) +
                    " x p with p >= 1, got " + std::to_string(composition.rows()) + " x " +
                    std::to_string(composition.cols()));
  }
  for (int i = 0; i < composition.rows(); ++i) {
    if (composition.row_sum(i) != orbits.multiplicities[i]) {
      throw Error(ErrorCode::kCompositionRowSumMismatch,
                  "composition row " + std::to_string(i) + " sums to " +
                      std::to_string(composition.row_sum(i)) + ", orbit multiplicity is " +
                      std::to_string(orbits.multiplicities[i]));
    }
  }
  if (composition.total() != pattern.order) {
    throw Error(ErrorCode::kCompositionRowSumMismatch, "composition total differs from order");
  }
}

std::vector<CompositionMatrix> enumerate_compositions(const std::vector<int>& multiplicities,
                                                      int states) {
  if (states < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one state");
  // All weak compositions of each multiplicity into `states` parts.
  auto row_options = [states](int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> row(states, 0);
    auto rec = [&](auto&& self, int col, int left) -> void {
      if (col == states - 1) {
        row[col] = left;
        out.push_back(row);
        return;
      }
      for (int k = left; k >= 0; --k) {
        row[col] = k;
        self(self, col + 1, left - k);
      }
    };
    rec(rec, 0, total);
    return out;
  };
  std::vector<std::vector<std::vector<int>>> options;
  for (int m : multiplicities) options.push_back(row_options(m));

  std::vector<CompositionMatrix> result;
  std::vector<std::vector<int>> chosen(multiplicities.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == options.size()) {
      result.push_back(CompositionMatrix::from_rows(chosen));
      return;
    }
    for (const auto& row : options[i]) {
      chosen[i] = row;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return result;
}

std::uint64_t fingerprint(const Pattern& pattern, const CompositionMatrix& composition) {
  // FNV-1a over a canonical serialization.
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&hash](std::int64_t value) {
    for (int i = 0; i < 8; ++i) {
      hash ^= static_cast<std::uint64_t>((value >> (8 * i)) & 0xff);
      hash *= 1099511628211ULL;
    }
  };
  mix(pattern.directed ? 1 : 0);
  mix(pattern.order);
  mix(static_cast<int>(pattern.count_mode));
  auto edges = pattern.edges;
  if (!pattern.directed) {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) {
    mix(u);
    mix(v);
  }
  mix(composition.rows());
  mix(composition.cols());
  for (int v : composition.values()) mix(v);
  return hash;
}

namespace patterns {

Pattern clique(int order, CountMode mode) {
  Pattern p;
  p.name = "clique" + std::to_string(order);
  p.order = order;
  p.count_mode = mode;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) p.edges.emplace_back(u, v);
  }
  return p;
}

Pattern maximal_clique(int order) {
  Pattern p = clique(order, CountMode::kMaximalClique);
  p.name = "maximal_clique" + std::to_string(order);
  return p;
}

Pattern path(int order, CountMode mode) {
  Pattern p;
  p.name = "path" + std::to_string(order);
  p.order = order;
  p.count_mode = mode;
  for (int u = 0; u + 1 < order; ++u) p.edges.emplace_back(u, u + 1);
  return p;
}

Pattern cycle(int order, CountMode mode) {
  Pattern p = path(order, mode);
  p.name = "cycle" + std::to_string(order);
  p.edges.emplace_back(0, order - 1);
  return p;
}

Pattern star(int leaves, CountMode mode) {
  Pattern p;
  p.name = "star" + std::to_string(leaves + 1);
  p.order = leaves + 1;
  p.count_mode = mode;
  for (int v = 1; v <= leaves; ++v) p.edges.emplace_back(0, v);
  return p;
}

}  // namespace patterns

}  // namespace egocount
