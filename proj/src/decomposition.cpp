#include <algorithm>

#include "cylrig/error.hpp"
#include "cylrig/matroids.hpp"
#include "union_find.hpp"

namespace cylrig {

int Decomposition::covered() const {
  int total = static_cast<int>(h_edges.size());
  for (const auto& t : trees) total += static_cast<int>(t.size());
  return total;
}

namespace {

EdgeSet leftover(const Graph& g, const std::vector<EdgeSet>& parts) {
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  for (const auto& p : parts)
    for (EdgeId e : p) used[static_cast<std::size_t>(e)] = 1;
  EdgeSet rest;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!used[static_cast<std::size_t>(e)]) rest.push_back(e);
  return rest;
}

}  // namespace

Decomposition max_count_plus_forests(const Graph& g, CountParams h_params, int num_forests) {
  if (num_forests < 0) throw PreconditionError("negative number of forests");
  CountOracle count(g, h_params);
  std::vector<GraphicOracle> forests(static_cast<std::size_t>(num_forests), GraphicOracle(g));
  std::vector<const MatroidOracle*> oracles{&count};
  for (const auto& f : forests) oracles.push_back(&f);
  auto parts = matroid_union_basis(oracles, g);
  Decomposition d;
  d.rest = leftover(g, parts);
  d.h_edges = std::move(parts[0]);
  d.trees.assign(parts.begin() + 1, parts.end());
  return d;
}

std::optional<std::vector<EdgeSet>> nash_williams(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("nash_williams needs k >= 1");
  const int n = g.num_vertices();
  if (g.num_edges() != k * std::max(n - 1, 0)) return std::nullopt;
  std::vector<GraphicOracle> forests(static_cast<std::size_t>(k), GraphicOracle(g));
  std::vector<const MatroidOracle*> oracles;
  for (const auto& f : forests) oracles.push_back(&f);
  auto parts = matroid_union_basis(oracles, g);
  for (const auto& p : parts)
    if (!is_spanning_tree(g, p)) return std::nullopt;
  return parts;
}

std::optional<Decomposition> decompose_h_plus_trees(const Graph& g, CountParams h_params, int num_trees) {
  if (num_trees != 1 && num_trees != 2) throw PreconditionError("decompose_h_plus_trees supports one or two trees");
  h_params.validate();
  const int n = g.num_vertices();
  if (n < 2) {
    if (g.num_edges() != 0) return std::nullopt;
    Decomposition d;
    d.trees.assign(static_cast<std::size_t>(num_trees), EdgeSet{});
    return d;
  }
  const int h_target = h_params.tight_count(n);
  if (h_target < 0 || g.num_edges() != h_target + num_trees * (n - 1)) return std::nullopt;
  Decomposition d = max_count_plus_forests(g, h_params, num_trees);
  if (!d.rest.empty()) return std::nullopt;
  if (static_cast<int>(d.h_edges.size()) != h_target) return std::nullopt;
  for (const auto& t : d.trees)
    if (!is_spanning_tree(g, t)) return std::nullopt;
  return d;
}

std::optional<EdgeId> colour_switch(const Graph& g, CountParams h_params, const EdgeSet& h_edges,
                                    const EdgeSet& tree, EdgeId e) {
  if (!std::binary_search(tree.begin(), tree.end(), e)) throw PreconditionError("colour_switch: edge is not in the tree");
  for (EdgeId f : h_edges) {
    EdgeSet t2;
    for (EdgeId x : tree)
      if (x != e) t2.push_back(x);
    t2.push_back(f);
    if (!is_spanning_tree(g, t2)) continue;
    PebbleGame game(g.num_vertices(), h_params);
    bool ok = game.add_edge(g.edge(e).u, g.edge(e).v);
    for (EdgeId x : h_edges) {
      if (!ok) break;
      if (x != f) ok = game.add_edge(g.edge(x).u, g.edge(x).v);
    }
    if (ok) return f;
  }
  return std::nullopt;
}

void extend_forest_to_tree(const Graph& g, Decomposition& d) {
  if (d.trees.empty()) throw PreconditionError("extend_forest_to_tree: no forest part");
  auto& forest = d.trees[0];
  detail::UnionFind uf(g.num_vertices());
  for (EdgeId e : forest)
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) throw PreconditionError("extend_forest_to_tree: part 0 has a cycle");
  EdgeSet kept;
  for (EdgeId e : d.h_edges) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) {
      forest.push_back(e);
    } else {
      kept.push_back(e);
    }
  }
  std::sort(forest.begin(), forest.end());
  d.h_edges = std::move(kept);
  // Rest edges may also join forest components.
  EdgeSet rest;
  for (EdgeId e : d.rest) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) {
      forest.push_back(e);
    } else {
      rest.push_back(e);
    }
  }
  std::sort(forest.begin(), forest.end());
  d.rest = std::move(rest);
}

}  // namespace cylrig
