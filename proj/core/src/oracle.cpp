#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "egocount/counting.hpp"
#include "egocount/error.hpp"

namespace egocount {

namespace {

bool composition_matches(const Graph& g, std::span<const Vertex> image,
                         const OrbitStructure& orbits, const CompositionMatrix& composition) {
  std::vector<int> counts(static_cast<std::size_t>(composition.rows()) * composition.cols(), 0);
  for (std::size_t v = 0; v < image.size(); ++v) {
    const int col = composition.column_of(g.state(image[v]));
    if (col < 0) return false;
    ++counts[static_cast<std::size_t>(orbits.orbit_of[v]) * composition.cols() + col];
  }
  return std::equal(counts.begin(), counts.end(), composition.values().begin());
}

class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& g, const Pattern& pattern, const OrbitStructure& orbits,
                   const CompositionMatrix& composition)
      : g_(g), pattern_(pattern), orbits_(orbits), composition_(composition),
        used_(g.vertex_count(), 0) {
    // Breadth-first order from pattern vertex 0; parent seeds candidates.
    const int h = pattern.order;
    std::vector<int> pos(h, -1);
    std::queue<int> queue;
    for (int start = 0; start < h; ++start) {
      if (pos[start] >= 0) continue;
      pos[start] = static_cast<int>(order_.size());
      order_.push_back(start);
      parent_.push_back(-1);
      queue.push(start);
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int w = 0; w < h; ++w) {
          if (pos[w] >= 0 || !pattern.adjacent(u, w)) continue;
          pos[w] = static_cast<int>(order_.size());
          order_.push_back(w);
          parent_.push_back(pos[u]);
          queue.push(w);
        }
      }
    }
    image_.assign(h, 0);
    by_vertex_.assign(h, 0);
  }

  std::uint64_t count() {
    embeddings_ = 0;
    extend(0);
    return embeddings_;
  }

 private:
  bool consistent(std::size_t k, Vertex c) const {
    const int u = order_[k];
    const bool strict = pattern_.count_mode != CountMode::kNonInduced;
    for (std::size_t p = 0; p < k; ++p) {
      const int w = order_[p];
      const Vertex x = image_[p];
      const bool need_wu = pattern_.has_edge(w, u);
      const bool need_uw = pattern_.has_edge(u, w);
      const bool has_wu = g_.has_edge(x, c);
      const bool has_uw = g_.has_edge(c, x);
      if (need_wu && !has_wu) return false;
      if (need_uw && !has_uw) return false;
      if (strict && !need_wu && has_wu) return false;
      if (strict && !need_uw && has_uw) return false;
    }
    return true;
  }

  void try_candidate(std::size_t k, Vertex c) {
    if (used_[c] || !consistent(k, c)) return;
    image_[k] = c;
    used_[c] = 1;
    extend(k + 1);
    used_[c] = 0;
  }

  void extend(std::size_t k) {
    if (k == order_.size()) {
      for (std::size_t p = 0; p < k; ++p) by_vertex_[order_[p]] = image_[p];
      if (composition_matches(g_, by_vertex_, orbits_, composition_)) ++embeddings_;
      return;
    }
    if (parent_[k] < 0) {
      for (Vertex c = 0; c < g_.vertex_count(); ++c) try_candidate(k, c);
    } else {
      for (Vertex c : g_.neighbors(image_[parent_[k]])) try_candidate(k, c);
    }
  }

  const Graph& g_;
  const Pattern& pattern_;
  const OrbitStructure& orbits_;
  const CompositionMatrix& composition_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<Vertex> image_;
  std::vector<Vertex> by_vertex_;
  std::vector<char> used_;
  std::uint64_t embeddings_ = 0;
};

class MaximalCliqueCounter {
 public:
  MaximalCliqueCounter(const Graph& g, int order, const OrbitStructure& orbits,
                       const CompositionMatrix& composition)
      : g_(g), order_(order), orbits_(orbits), composition_(composition) {}

  std::uint64_t count() {
    found_ = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      clique_.assign(1, v);
      auto row = g_.neighbors(v);
      std::vector<Vertex> later(std::upper_bound(row.begin(), row.end(), v), row.end());
      extend(later);
    }
    return found_;
  }

 private:
  void extend(const std::vector<Vertex>& candidates) {
    if (static_cast<int>(clique_.size()) == order_) {
      if (is_maximal() && composition_matches(g_, clique_, orbits_, composition_)) ++found_;
      return;
    }
    for (Vertex c : candidates) {
      std::vector<Vertex> next;
      auto row = g_.neighbors(c);
      std::set_intersection(std::upper_bound(candidates.begin(), candidates.end(), c),
                            candidates.end(), row.begin(), row.end(), std::back_inserter(next));
      clique_.push_back(c);
      extend(next);
      clique_.pop_back();
    }
  }

  bool is_maximal() const {
    auto first = g_.neighbors(clique_.front());
    std::vector<Vertex> common(first.begin(), first.end());
    std::vector<Vertex> scratch;
    for (std::size_t i = 1; i < clique_.size() && !common.empty(); ++i) {
      auto row = g_.neighbors(clique_[i]);
      scratch.clear();
      std::set_intersection(common.begin(), common.end(), row.begin(), row.end(),
                            std::back_inserter(scratch));
      common.swap(scratch);
    }
    return common.empty();
  }

  const Graph& g_;
  int order_;
  const OrbitStructure& orbits_;
  const CompositionMatrix& composition_;
  std::vector<Vertex> clique_;
  std::uint64_t found_ = 0;
};

}  // namespace

double oracle_cost(const Graph& g, const Pattern& pattern) {
  double cost = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    cost += pattern.count_mode == CountMode::kMaximalClique ? d * d * pattern.order
                                                            : std::pow(d, pattern.order - 1);
  }
  return cost;
}

std::uint64_t exact_count(const Graph& g, const Pattern& pattern, const OrbitStructure& orbits,
                          const CompositionMatrix& composition, const OracleOptions& options) {
  pattern.check();
  if (pattern.directed != g.directed()) {
    throw Error(ErrorCode::kModeMismatch, "pattern and graph differ in directedness");
  }
  if (composition.rows() != orbits.orbit_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "composition rows must match orbit count");
  }
  const double cost = oracle_cost(g, pattern);
  if (cost > options.budget) {
    std::ostringstream msg;
    msg << "exact count refused: estimated cost " << cost << " exceeds budget " << options.budget;
    throw Error(ErrorCode::kBudgetExceeded, msg.str());
  }
  if (pattern.count_mode == CountMode::kMaximalClique) {
    return MaximalCliqueCounter(g, pattern.order, orbits, composition).count();
  }
  const std::uint64_t embeddings = EmbeddingCounter(g, pattern, orbits, composition).count();
  const std::uint64_t symmetries = orbits.automorphism_count();
  if (symmetries == 0 || embeddings % symmetries != 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding count not divisible by |Aut(H)|");
  }
  return embeddings / symmetries;
}

}  // namespace egocount
