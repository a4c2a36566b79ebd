#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egocount {

using Vertex = std::uint32_t;
using OriginalId = std::int64_t;
using State = std::int32_t;

/// Which neighbors of an ego are measured when its egonet is collected.
enum class NeighborhoodMode {
  kUndirectedFull,  // Neigh(v) of an undirected graph
  kDirectedUnion,   // Neigh+(v) ∪ Neigh-(v)
  kDirectedOut,     // Neigh+(v)
  kDirectedIn,      // Neigh-(v)
};

std::string_view to_string(NeighborhoodMode mode);
/// Accepts "undirected_full"/"full", "directed_union"/"union", "directed_out"/"out",
/// "directed_in"/"in". Throws Error(kParse) otherwise.
NeighborhoodMode parse_mode(std::string_view text);
bool mode_fits(NeighborhoodMode mode, bool directed);

/// Immutable simple (di)graph with one integer state per vertex.
///
/// Vertices are compact ids 0..N-1. Each vertex remembers the id it carried in
/// the input file so that copies can be keyed by stable identities. Adjacency is
/// stored in CSR form with sorted neighbor lists; for undirected graphs the
/// in- and union-adjacency views alias the out-adjacency.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from compact-id edges. Self-loops and duplicate edges are
  /// dropped. `states` defaults to all 1s, `original_ids` to 0..n-1.
  static Graph from_edges(std::size_t n, bool directed,
                          std::vector<std::pair<Vertex, Vertex>> edges,
                          std::vector<State> states = {},
                          std::vector<OriginalId> original_ids = {});

  bool directed() const noexcept { return directed_; }
  std::size_t vertex_count() const noexcept { return states_.size(); }
  /// Undirected edges for undirected graphs, arcs for directed graphs.
  std::size_t edge_count() const noexcept { return out_.targets.size() / (directed_ ? 1 : 2); }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.row(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return directed_ ? in_.row(v) : out_.row(v);
  }
  /// Neighbors in the underlying undirected graph.
  std::span<const Vertex> neighbors(Vertex v) const {
    return directed_ ? union_.row(v) : out_.row(v);
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// True iff the arc u->v (or the undirected edge {u,v}) exists.
  bool has_edge(Vertex u, Vertex v) const;

  State state(Vertex v) const { return states_[v]; }
  std::span<const State> states() const noexcept { return states_; }
  /// Largest state present (p); 1 for an empty or unannotated graph.
  State state_count() const noexcept { return state_count_; }

  OriginalId original_id(Vertex v) const { return original_ids_[v]; }
  std::span<const OriginalId> original_ids() const noexcept { return original_ids_; }
  /// Linear-time reverse lookup of an input id.
  std::optional<Vertex> find_original(OriginalId id) const;

  /// Edges in compact ids: (u,v) with u<v for undirected graphs, arcs otherwise.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  struct Csr {
    std::vector<std::size_t> offsets{0};
    std::vector<Vertex> targets;

    std::span<const Vertex> row(Vertex v) const {
      return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
    bool operator==(const Csr&) const = default;
  };

  static Csr build_csr(std::size_t n, std::vector<std::pair<Vertex, Vertex>>& arcs);

  bool directed_ = false;
  Csr out_;
  Csr in_;
  Csr union_;
  std::vector<State> states_;
  State state_count_ = 1;
  std::vector<OriginalId> original_ids_;
};

/// Subgraph induced by `vertices` (kept in the given order), preserving states
/// and original ids.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Largest (weakly, if directed) connected component. Ties go to the component
/// holding the smallest original id; vertices keep their relative order.
Graph largest_component(const Graph& g);

bool is_connected(const Graph& g);

// ---- text formats -------------------------------------------------------

/// Parses an edge list ("u v" per line, '#' comments) and an optional
/// attribute table ("v state" per line). Ids are compacted in order of first
/// appearance; loops and duplicates are dropped.
Graph load_graph(std::istream& edge_list, std::istream* attribute_table, bool directed);

/// File variant; paths ending in ".gz" are decompressed transparently.
Graph load_graph_file(const std::filesystem::path& edge_list,
                      const std::optional<std::filesystem::path>& attribute_table,
                      bool directed);

/// Reads a whole (possibly gzip-compressed) file into memory.
std::string read_text_file(const std::filesystem::path& path);

/// Writes the graph so that load_graph() reads back the same graph over
/// original ids. Compact ids are kept where first-appearance order allows;
/// isolated vertices are lost, as an edge list cannot express them.
void write_edge_list(const Graph& g, std::ostream& out);
void write_attributes(const Graph& g, std::ostream& out);

}  // namespace egocount
