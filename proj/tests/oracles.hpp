#pragma once

// Brute-force reference implementations. Everything here is written against
// the definitions only and shares no code with the library beyond the Graph
// container and Rational type.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cylrig/graph.hpp"
#include "cylrig/rational.hpp"

namespace oracle {

using cylrig::EdgeId;
using cylrig::EdgeSet;
using cylrig::Graph;
using cylrig::Rational;
using cylrig::VertexId;

std::string data_path(const std::string& file);

/// All graphs on n vertices from the atlas files (n <= 7).
std::vector<Graph> atlas(int n);
/// Graphs reconstructed from the networkx edge-list file, all orders.
std::vector<Graph> atlas_edge_lists();

/// Every subset of vertices with an induced edge satisfies e <= k v - l.
bool sparse(const Graph& g, int k, int l);
bool tight(const Graph& g, int k, int l);
/// Sparsity of an edge subset, checked over all vertex subsets.
bool sparse_edges(const Graph& g, const EdgeSet& edges, int k, int l);

bool is_forest(const Graph& g, const EdgeSet& edges);
bool is_spanning_tree(const Graph& g, const EdgeSet& edges);
/// Minimum number of edges across a vertex bipartition (2^n cuts).
int edge_connectivity(const Graph& g);
int components(const Graph& g, const EdgeSet& edges);

/// Backtracking search for a partition of E into a (k,l)-tight spanning H
/// and `trees` spanning trees.
bool has_h_plus_trees(const Graph& g, int k, int l, int trees);
/// Backtracking search for `trees` edge-disjoint spanning trees covering E.
bool has_tree_packing(const Graph& g, int trees);

/// Rank by plain Gauss-Jordan over the rationals.
int rank(std::vector<std::vector<Rational>> rows);

/// Uniform random simple graph with n vertices and m edges.
Graph random_graph(int n, int m, std::mt19937_64& rng);
/// Random connected graph: random spanning tree plus extra edges.
Graph random_connected(int n, int m, std::mt19937_64& rng);
/// Random forest inside g, built by a random edge order and random drops.
EdgeSet random_forest(const Graph& g, std::mt19937_64& rng, bool spanning);

}  // namespace oracle
