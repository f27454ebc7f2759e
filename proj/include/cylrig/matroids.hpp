#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

/// Parameters of the (k,l)-count matroid: a graph is (k,l)-sparse when every
/// subgraph with at least one edge has at most k|V'| - l edges.
struct CountParams {
  int k = 2;
  int l = 3;

  /// Throws PreconditionError unless k >= 1 and 0 <= l <= 2k-1.
  void validate() const;
  /// k*n - l, the edge count of a tight graph on n vertices.
  int tight_count(int n) const { return k * n - l; }
  std::string str() const { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }
  friend bool operator==(const CountParams&, const CountParams&) = default;
};

/// Incremental (k,l) pebble game on a fixed vertex set.
///
/// Each vertex starts with k pebbles. An edge is accepted when l+1 pebbles can
/// be gathered on its endpoints; the searches visit out-neighbours in
/// ascending vertex order, so results depend only on the insertion sequence.
class PebbleGame {
 public:
  PebbleGame(int num_vertices, CountParams params);

  /// Accepts the edge if the current accepted set plus the edge is sparse.
  bool add_edge(VertexId a, VertexId b);
  /// Whether add_edge would succeed. May reorient accepted edges.
  bool can_add(VertexId a, VertexId b);
  /// Removes a previously accepted edge; its pebble returns to the tail.
  void remove_edge(VertexId a, VertexId b);

  int num_accepted() const { return accepted_; }
  int free_pebbles(VertexId v) const { return pebbles_[static_cast<std::size_t>(v)]; }

 private:
  bool gather(VertexId target, VertexId keep);
  bool collect(VertexId a, VertexId b);

  CountParams params_;
  std::vector<int> pebbles_;
  std::vector<std::vector<VertexId>> out_;
  int accepted_ = 0;
};

bool pebble_sparse(const Graph& g, CountParams params);
bool pebble_tight(const Graph& g, CountParams params);
/// Greedy basis in ascending edge-id order; its size is the count-matroid rank.
EdgeSet count_matroid_basis(const Graph& g, CountParams params);
/// Basis grown in the given edge order.
EdgeSet count_matroid_basis(const Graph& g, CountParams params, std::span<const EdgeId> order);

/// Exchange queries against one fixed independent set of an oracle.
class ExchangeQuery {
 public:
  virtual ~ExchangeQuery() = default;
  /// base + in is independent.
  virtual bool can_add(EdgeId in) = 0;
  /// base - out + in is independent (out in base, in not in base).
  virtual bool can_swap(EdgeId out, EdgeId in) = 0;
};

/// Independence predicate on subsets of the edge set of a host graph.
/// Oracles keep a reference to the host graph, which must outlive them.
class MatroidOracle {
 public:
  explicit MatroidOracle(const Graph& g) : graph_(&g) {}
  virtual ~MatroidOracle() = default;

  const Graph& graph() const { return *graph_; }
  virtual std::string name() const = 0;
  virtual bool is_independent(std::span<const EdgeId> edges) const = 0;
  /// Default answers each query with a fresh is_independent call.
  virtual std::unique_ptr<ExchangeQuery> exchange(std::span<const EdgeId> base) const;

 private:
  const Graph* graph_;
};

/// Forests of the host graph.
class GraphicOracle final : public MatroidOracle {
 public:
  using MatroidOracle::MatroidOracle;
  std::string name() const override { return "graphic"; }
  bool is_independent(std::span<const EdgeId> edges) const override;
  std::unique_ptr<ExchangeQuery> exchange(std::span<const EdgeId> base) const override;
};

/// (k,l)-sparse edge sets, decided by the pebble game.
class CountOracle final : public MatroidOracle {
 public:
  CountOracle(const Graph& g, CountParams params);
  std::string name() const override { return "count" + params_.str(); }
  bool is_independent(std::span<const EdgeId> edges) const override;
  std::unique_ptr<ExchangeQuery> exchange(std::span<const EdgeId> base) const override;
  CountParams params() const { return params_; }

 private:
  CountParams params_;
};

/// Oracle backed by an arbitrary predicate (used for numeric row matroids and
/// for tests that feed deliberately broken predicates).
class PredicateOracle final : public MatroidOracle {
 public:
  using Predicate = std::function<bool(std::span<const EdgeId>)>;
  PredicateOracle(const Graph& g, std::string name, Predicate predicate)
      : MatroidOracle(g), name_(std::move(name)), predicate_(std::move(predicate)) {}
  std::string name() const override { return name_; }
  bool is_independent(std::span<const EdgeId> edges) const override { return predicate_(edges); }

 private:
  std::string name_;
  Predicate predicate_;
};

/// Maximum family of pairwise-disjoint sets I_1..I_m with I_j independent in
/// oracle j, computed by shortest augmenting paths in the exchange graph (one
/// layer per oracle, breadth-first by ascending edge id).
///
/// Seeds, when given, must be disjoint and independent; missing seeds are
/// empty. Elements that cannot be inserted directly are routed through the
/// exchange graph. Throws MatroidAxiomError if an augmentation produces a
/// dependent set.
std::vector<EdgeSet> matroid_union_basis(std::span<const MatroidOracle* const> oracles, const Graph& g,
                                         std::span<const EdgeSet> seeds = {});

/// Edge partition certificate: h_edges, then trees (spanning trees of the host
/// when it is a full decomposition). rest holds edges outside every part and
/// is empty for a decomposition of E.
struct Decomposition {
  EdgeSet h_edges;
  std::vector<EdgeSet> trees;
  EdgeSet rest;

  int covered() const;
};

/// The union of a (k,l)-count matroid with num_forests graphic matroids,
/// maximised over E. parts.rest lists edges left out.
Decomposition max_count_plus_forests(const Graph& g, CountParams h_params, int num_forests);

/// k edge-disjoint spanning trees covering E, or nullopt.
std::optional<std::vector<EdgeSet>> nash_williams(const Graph& g, int k);

/// Partition of E into a spanning (k,l)-tight H and num_trees spanning trees,
/// or nullopt. num_trees is 1 or 2.
std::optional<Decomposition> decompose_h_plus_trees(const Graph& g, CountParams h_params, int num_trees);

/// Given H (k,l)-sparse and T a spanning tree, edge-disjoint, with e in T and
/// H+e dependent: an edge f of H such that H-f+e is sparse and T-e+f is a
/// spanning tree. Smallest such f.
std::optional<EdgeId> colour_switch(const Graph& g, CountParams h_params, const EdgeSet& h_edges,
                                    const EdgeSet& tree, EdgeId e);

/// Moves H edges into forest part 0 while they join two of its components.
/// Keeps H independent; makes part 0 a spanning tree when g is connected.
void extend_forest_to_tree(const Graph& g, Decomposition& d);

}  // namespace cylrig
