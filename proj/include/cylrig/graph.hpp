#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cylrig {

using VertexId = int;
using EdgeId = int;

/// Undirected edge with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool has(VertexId w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted list of edge ids of some host graph.
using EdgeSet = std::vector<EdgeId>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edge ids are assigned 0..|E|-1 in construction order and fix the row
/// order of every matrix built from the graph. Instances are immutable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  /// Throws PreconditionError on loops, parallel edges or unknown endpoints.
  Graph(int num_vertices, std::span<const std::pair<VertexId, VertexId>> edges);
  Graph(int num_vertices, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }
  /// Neighbours in ascending id order.
  std::span<const VertexId> neighbours(VertexId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  /// Incident edge ids in ascending order.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(VertexId v) const { return static_cast<int>(neighbours(v).size()); }
  int min_degree() const;

  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices_; }
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// Edge list as (u, v) pairs in id order.
  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

  /// Graph on the same vertex set with only the given edges, renumbered in
  /// ascending order of their ids here.
  Graph edge_subgraph(std::span<const EdgeId> edges) const;

  /// Graph with the listed vertices deleted; the survivors keep their
  /// relative order and are renumbered densely.
  Graph remove_vertices(std::span<const VertexId> removed) const;

  /// All edge ids.
  EdgeSet all_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  void add_edge(VertexId a, VertexId b);

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
  // (neighbour, edge id) sorted by neighbour.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> lookup_;
};

// graph6 text format, one graph per line.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);
/// Parses every non-empty line; ParseError messages carry the line number.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Connectivity.
bool is_connected(const Graph& g);
int num_components(const Graph& g);
/// Component index per vertex, components numbered by smallest vertex.
std::vector<int> component_labels(const Graph& g);
/// Global edge connectivity; 0 when disconnected or |V| <= 1.
int edge_connectivity(const Graph& g);
bool is_vertex_k_connected(const Graph& g, int k);

/// Maximal acyclic edge subset, grown by BFS from the smallest vertex of each
/// component.
EdgeSet spanning_forest(const Graph& g);
bool is_forest(const Graph& g, std::span<const EdgeId> edges);
/// Acyclic with |V|-1 edges (connected spanning tree of the vertex set).
bool is_spanning_tree(const Graph& g, std::span<const EdgeId> edges);

// Named graphs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Keys: K1..K8 (also "K_n"), K6_minus_e, K5_glue_K3_K5, K7_minus_K3,
/// FIG2_OCTA_RING.
Graph named_graph(std::string_view name);
std::vector<std::string> catalog_names();

}  // namespace cylrig
