#include "egocount/counting.hpp"

#include <algorithm>
#include <limits>

#include "egocount/error.hpp"

namespace egocount {

std::size_t CopyKeyHash::operator()(const CopyKey& key) const noexcept {
  std::uint64_t h = key.pattern ^ 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (OriginalId v : key.vertices) mix(static_cast<std::uint64_t>(v));
  for (const auto& [a, b] : key.edges) {
    mix(static_cast<std::uint64_t>(a));
    mix(static_cast<std::uint64_t>(b));
  }
  return static_cast<std::size_t>(h);
}

CountingPlan::CountingPlan(Pattern pattern, const OrbitStructure& orbits,
                           CompositionMatrix composition, NeighborhoodMode mode)
    : pattern_(std::move(pattern)),
      orbits_(with_observable(orbits, pattern_, mode)),
      composition_(std::move(composition)),
      mode_(mode) {
  validate_pattern(pattern_, orbits_, composition_, mode_);
  fingerprint_ = egocount::fingerprint(pattern_, composition_);
  compile();
}

CountingPlan::CountingPlan(Pattern pattern, CompositionMatrix composition, NeighborhoodMode mode)
    : CountingPlan(pattern, automorphism_orbits(pattern), std::move(composition), mode) {}

CountingPlan::CountingPlan(const PatternSpec& spec)
    : CountingPlan(spec.pattern, spec.composition, spec.mode) {}

void CountingPlan::compile() {
  const int h = pattern_.order;
  const bool strict = pattern_.count_mode != CountMode::kNonInduced;
  roles_.clear();
  for (int orbit : orbits_.observable) {
    RolePlan role;
    role.orbit = orbit;
    const int root = orbits_.orbits[orbit].front();

    // Connectivity-first vertex order starting at the root.
    std::vector<int> order{root};
    std::vector<bool> placed(h, false);
    placed[root] = true;
    while (static_cast<int>(order.size()) < h) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < h; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int w : order) links += pattern_.adjacent(v, w) ? 1 : 0;
        if (links > best_links) {
          best = v;
          best_links = links;
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
    std::vector<int> position(h, -1);
    for (int k = 0; k < h; ++k) position[order[k]] = k;

    for (int k = 0; k < h; ++k) {
      Step step;
      step.vertex = order[k];
      step.orbit = orbits_.orbit_of[order[k]];
      if (k > 0) {
        const int u = order[k];
        step.anchor = 0;
        for (int p = 1; p < k; ++p) {
          if (pattern_.adjacent(order[p], u)) {
            step.anchor = p;
            break;
          }
        }
        step.anchor_out = pattern_.has_edge(order[step.anchor], u);
        for (int p = 0; p < k; ++p) {
          const int w = order[p];
          Check check{p, -1, -1};
          if (pattern_.directed) {
            check.forward = pattern_.has_edge(w, u) ? 1 : (strict ? 0 : -1);
            check.backward = pattern_.has_edge(u, w) ? 1 : (strict ? 0 : -1);
          } else {
            check.forward = pattern_.has_edge(w, u) ? 1 : (strict ? 0 : -1);
          }
          if (check.forward >= 0 || check.backward >= 0) step.checks.push_back(check);
        }
      }
      role.steps.push_back(std::move(step));
    }

    // Symmetry breaking over the stabilizer of the root: repeatedly pin the
    // smallest moved vertex below the rest of its orbit.
    std::vector<const std::vector<int>*> group;
    for (const auto& sigma : orbits_.automorphisms) {
      if (sigma[root] == root) group.push_back(&sigma);
    }
    while (true) {
      int moved = -1;
      for (int v = 0; v < h && moved < 0; ++v) {
        for (const auto* sigma : group) {
          if ((*sigma)[v] != v) {
            moved = v;
            break;
          }
        }
      }
      if (moved < 0) break;
      std::vector<bool> in_orbit(h, false);
      for (const auto* sigma : group) in_orbit[(*sigma)[moved]] = true;
      for (int w = 0; w < h; ++w) {
        if (w == moved || !in_orbit[w]) continue;
        // image(moved) < image(w)
        const int pa = position[moved];
        const int pb = position[w];
        if (pb > pa) {
          role.steps[pb].above.push_back(pa);
        } else {
          role.steps[pa].below.push_back(pb);
        }
      }
      std::erase_if(group, [moved](const std::vector<int>* s) { return (*s)[moved] != moved; });
    }
    roles_.push_back(std::move(role));
  }
}

void CountingPlan::require_mode(const Egonet& egonet) const {
  if (egonet.mode() != mode_) {
    throw Error(ErrorCode::kModeMismatch,
                "egonet collected under " + std::string(to_string(egonet.mode())) +
                    " but the pattern is declared for " + std::string(to_string(mode_)));
  }
}

namespace {

// Backtracking search for one observable role.
template <typename Visit>
class RoleSearch {
 public:
  RoleSearch(const CountingPlan::RolePlan& role, const Egonet& egonet,
             const CompositionMatrix& composition, Visit& visit)
      : role_(role),
        egonet_(egonet),
        composition_(composition),
        visit_(visit),
        image_(role.steps.size(), 0),
        by_vertex_(role.steps.size(), 0),
        used_(egonet.size(), 0),
        remaining_(composition.values().begin(), composition.values().end()) {}

  void run() {
    const auto& root = role_.steps.front();
    if (!take(root.orbit, egonet_.state(0))) return;
    image_[0] = 0;
    used_[0] = 1;
    extend(1);
  }

 private:
  bool take(int orbit, State state) {
    const int col = composition_.column_of(state);
    if (col < 0) return false;
    int& slot = remaining_[static_cast<std::size_t>(orbit) * composition_.cols() + col];
    if (slot == 0) return false;
    --slot;
    return true;
  }
  void give_back(int orbit, State state) {
    ++remaining_[static_cast<std::size_t>(orbit) * composition_.cols() + composition_.column_of(state)];
  }

  void extend(std::size_t k) {
    if (k == role_.steps.size()) {
      for (std::size_t p = 0; p < k; ++p) by_vertex_[role_.steps[p].vertex] = image_[p];
      visit_(std::span<const LocalVertex>(by_vertex_));
      return;
    }
    const auto& step = role_.steps[k];
    LocalVertex lo = 0;
    LocalVertex hi = std::numeric_limits<LocalVertex>::max();
    for (int p : step.above) lo = std::max<LocalVertex>(lo, image_[p] + 1);
    for (int p : step.below) hi = std::min<LocalVertex>(hi, image_[p]);
    const LocalVertex anchor = image_[step.anchor];
    auto row = step.anchor_out ? egonet_.out(anchor) : egonet_.in(anchor);
    for (auto it = std::lower_bound(row.begin(), row.end(), lo); it != row.end(); ++it) {
      const LocalVertex c = *it;
      if (c >= hi) break;
      if (used_[c]) continue;
      bool ok = true;
      for (const auto& check : step.checks) {
        const LocalVertex w = image_[check.position];
        if (check.forward >= 0 && egonet_.has_edge(w, c) != (check.forward == 1)) {
          ok = false;
          break;
        }
        if (check.backward >= 0 && egonet_.has_edge(c, w) != (check.backward == 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const State s = egonet_.state(c);
      if (!take(step.orbit, s)) continue;
      image_[k] = c;
      used_[c] = 1;
      extend(k + 1);
      used_[c] = 0;
      give_back(step.orbit, s);
    }
  }

  const CountingPlan::RolePlan& role_;
  const Egonet& egonet_;
  const CompositionMatrix& composition_;
  Visit& visit_;
  std::vector<LocalVertex> image_;
  std::vector<LocalVertex> by_vertex_;
  std::vector<char> used_;
  std::vector<int> remaining_;
};

bool clique_matches(const Egonet& egonet, std::span<const LocalVertex> clique,
                    const CompositionMatrix& composition) {
  std::vector<int> counts(composition.cols(), 0);
  for (LocalVertex v : clique) {
    const int col = composition.column_of(egonet.state(v));
    if (col < 0) return false;
    ++counts[col];
  }
  for (int c = 0; c < composition.cols(); ++c) {
    if (counts[c] != composition.at(0, c)) return false;
  }
  return true;
}

// Calls visit(role, image) for every copy; shared by all public entry points.
template <typename Visit>
void enumerate(const CountingPlan& plan, const Egonet& egonet, Visit&& visit) {
  if (plan.pattern().count_mode == CountMode::kMaximalClique) {
    const auto h = static_cast<std::size_t>(plan.pattern().order);
    for (const auto& clique : enumerate_maximal_cliques(egonet)) {
      if (clique.size() != h || !clique_matches(egonet, clique, plan.composition())) continue;
      visit(0, std::span<const LocalVertex>(clique));
    }
    return;
  }
  const auto& roles = plan.role_plans();
  for (std::size_t j = 0; j < roles.size(); ++j) {
    auto forward = [&visit, j](std::span<const LocalVertex> image) {
      visit(static_cast<int>(j), image);
    };
    RoleSearch<decltype(forward)> search(roles[j], egonet, plan.composition(), forward);
    search.run();
  }
}

void intersect(std::span<const LocalVertex> a, std::span<const LocalVertex> b,
               std::vector<LocalVertex>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

void bron_kerbosch(const Egonet& e, std::vector<LocalVertex>& r, std::vector<LocalVertex> p,
                   std::vector<LocalVertex> x, std::vector<std::vector<LocalVertex>>& out) {
  if (p.empty()) {
    if (x.empty()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  // Tomita pivot: maximize |P ∩ N(u)|.
  LocalVertex pivot = p.front();
  std::size_t best = 0;
  bool first = true;
  std::vector<LocalVertex> scratch;
  for (const auto* set : {&p, &x}) {
    for (LocalVertex u : *set) {
      intersect(p, e.out(u), scratch);
      if (first || scratch.size() > best) {
        best = scratch.size();
        pivot = u;
        first = false;
      }
    }
  }
  std::vector<LocalVertex> branch;
  {
    auto pivot_row = e.out(pivot);
    std::set_difference(p.begin(), p.end(), pivot_row.begin(), pivot_row.end(),
                        std::back_inserter(branch));
  }
  std::vector<LocalVertex> next_p, next_x;
  for (LocalVertex v : branch) {
    intersect(p, e.out(v), next_p);
    intersect(x, e.out(v), next_x);
    r.push_back(v);
    bron_kerbosch(e, r, next_p, next_x, out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

void CountingPlan::for_each_copy(
    const Egonet& egonet,
    const std::function<void(int, std::span<const LocalVertex>)>& visit) const {
  require_mode(egonet);
  enumerate(*this, egonet, visit);
}

RoleDegreeVector role_degrees(const Egonet& egonet, const CountingPlan& plan) {
  plan.require_mode(egonet);
  RoleDegreeVector degrees(plan.role_count(), 0);
  enumerate(plan, egonet, [&degrees](int role, std::span<const LocalVertex>) { ++degrees[role]; });
  return degrees;
}

std::uint64_t total_role_degree(const Egonet& egonet, const CountingPlan& plan) {
  auto degrees = role_degrees(egonet, plan);
  std::uint64_t total = 0;
  for (auto d : degrees) total += d;
  return total;
}

std::vector<ObservedCopy> unique_copies(const Egonet& egonet, const CountingPlan& plan) {
  if (!egonet.labeled()) {
    throw Error(ErrorCode::kUnlabeledSample, "unique counting needs labeled alters");
  }
  const auto& pattern = plan.pattern();
  const auto& orbits = plan.orbits();
  std::vector<bool> observable_vertex(pattern.order, false);
  for (int r : orbits.observable) {
    for (int v : orbits.orbits[r]) observable_vertex[v] = true;
  }
  const auto labels = egonet.labels();
  std::vector<ObservedCopy> copies;
  plan.for_each_copy(egonet, [&](int, std::span<const LocalVertex> image) {
    ObservedCopy copy;
    copy.key.pattern = plan.fingerprint();
    copy.key.vertices.reserve(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) {
      copy.key.vertices.push_back(labels[image[v]]);
      if (observable_vertex[v] || pattern.count_mode == CountMode::kMaximalClique) {
        copy.observable_members.push_back(labels[image[v]]);
      }
    }
    std::sort(copy.key.vertices.begin(), copy.key.vertices.end());
    std::sort(copy.observable_members.begin(), copy.observable_members.end());
    if (pattern.count_mode == CountMode::kNonInduced) {
      for (auto [u, v] : pattern.edges) {
        OriginalId a = labels[image[u]];
        OriginalId b = labels[image[v]];
        if (!pattern.directed && a > b) std::swap(a, b);
        copy.key.edges.emplace_back(a, b);
      }
      std::sort(copy.key.edges.begin(), copy.key.edges.end());
    }
    copies.push_back(std::move(copy));
  });
  return copies;
}

std::vector<std::vector<LocalVertex>> enumerate_maximal_cliques(const Egonet& egonet) {
  if (egonet.directed()) {
    throw Error(ErrorCode::kModeMismatch, "maximal cliques need an undirected egonet");
  }
  std::vector<std::vector<LocalVertex>> cliques;
  std::vector<LocalVertex> r{0};
  auto alters = egonet.out(0);
  bron_kerbosch(egonet, r, {alters.begin(), alters.end()}, {}, cliques);
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

}  // namespace egocount
