#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifndef CYLRIG_TEST_DATA
#define CYLRIG_TEST_DATA "tests/data"
#endif

namespace oracle {

std::string data_path(const std::string& file) { return std::string(CYLRIG_TEST_DATA) + "/" + file; }

std::vector<Graph> atlas(int n) {
  std::ifstream in(data_path("atlas" + std::to_string(n) + ".g6"));
  if (!in) throw std::runtime_error("missing atlas file for n=" + std::to_string(n));
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(cylrig::parse_graph6(line));
  return out;
}

std::vector<Graph> atlas_edge_lists() {
  std::ifstream in(data_path("atlas_edges.txt"));
  if (!in) throw std::runtime_error("missing atlas_edges.txt");
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    int n = 0;
    ss >> n;
    std::vector<std::pair<int, int>> edges;
    std::string tok;
    while (ss >> tok) {
      auto dash = tok.find('-');
      edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    out.emplace_back(n, edges);
  }
  return out;
}

namespace {

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

std::uint32_t edge_mask(const Graph& g, EdgeId e) {
  const auto& ed = g.edge(e);
  return (1u << ed.u) | (1u << ed.v);
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)];
    return x;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

bool sparse_edges(const Graph& g, const EdgeSet& edges, int k, int l) {
  const int n = g.num_vertices();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int inside = 0;
    for (EdgeId e : edges) {
      std::uint32_t m = edge_mask(g, e);
      if ((m & s) == m) ++inside;
    }
    if (inside > 0 && inside > k * popcount(s) - l) return false;
  }
  return true;
}

bool sparse(const Graph& g, int k, int l) { return sparse_edges(g, g.all_edges(), k, l); }

bool tight(const Graph& g, int k, int l) {
  return g.num_edges() == k * g.num_vertices() - l && sparse(g, k, l);
}

bool is_forest(const Graph& g, const EdgeSet& edges) {
  Dsu d(g.num_vertices());
  for (EdgeId e : edges)
    if (!d.join(g.edge(e).u, g.edge(e).v)) return false;
  return true;
}

int components(const Graph& g, const EdgeSet& edges) {
  Dsu d(g.num_vertices());
  int c = g.num_vertices();
  for (EdgeId e : edges)
    if (d.join(g.edge(e).u, g.edge(e).v)) --c;
  return c;
}

bool is_spanning_tree(const Graph& g, const EdgeSet& edges) {
  return static_cast<int>(edges.size()) == g.num_vertices() - 1 && is_forest(g, edges);
}

int edge_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) return 0;
  int best = g.num_edges();
  // Vertex n-1 always on the outside; S ranges over non-empty proper subsets.
  for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
    int cut = 0;
    for (const auto& e : g.edges()) cut += (((s >> e.u) & 1u) != ((s >> e.v) & 1u));
    best = std::min(best, cut);
  }
  return best;
}

namespace {

struct PartitionSearch {
  const Graph& g;
  int k, l, trees;
  int h_cap;
  int h_size = 0;
  // Number of H edges inside each vertex subset.
  std::vector<int> inside;
  std::vector<std::vector<int>> label;  // component label per tree per vertex
  std::vector<int> tree_size;
  // Per vertex: unassigned incident edges, H degree, degree in each tree.
  std::vector<int> left, h_deg;
  std::vector<std::vector<int>> t_deg;

  PartitionSearch(const Graph& graph, int k_, int l_, int trees_)
      : g(graph), k(k_), l(l_), trees(trees_), h_cap(k_ * graph.num_vertices() - l_) {
    const int n = g.num_vertices();
    inside.assign(std::size_t{1} << n, 0);
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    label.assign(static_cast<std::size_t>(trees), ids);
    tree_size.assign(static_cast<std::size_t>(trees), 0);
    left.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) left[static_cast<std::size_t>(v)] = g.degree(v);
    h_deg.assign(static_cast<std::size_t>(n), 0);
    t_deg.assign(static_cast<std::size_t>(trees), std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  bool h_can_take(EdgeId e) const {
    const std::uint32_t m = edge_mask(g, e);
    for (std::uint32_t s = 0; s < inside.size(); ++s)
      if ((s & m) == m && inside[s] + 1 > k * popcount(s) - l) return false;
    return true;
  }

  void h_bump(EdgeId e, int by) {
    const std::uint32_t m = edge_mask(g, e);
    for (std::uint32_t s = 0; s < inside.size(); ++s)
      if ((s & m) == m) inside[s] += by;
  }

  // Every vertex still needs a tree edge in each tree and, when H is a
  // (2,3)- or (2,2)-tight spanning graph on >= 3 vertices, H degree >= k.
  bool feasible(VertexId v) const {
    const auto i = static_cast<std::size_t>(v);
    int need = h_cap > 0 && g.num_vertices() >= 3 ? std::max(0, k - h_deg[i]) : 0;
    for (int t = 0; t < trees; ++t) need += t_deg[static_cast<std::size_t>(t)][i] == 0;
    return left[i] >= need;
  }

  bool run(EdgeId e) {
    if (e == g.num_edges()) return true;
    const auto& ed = g.edge(e);
    const auto u = static_cast<std::size_t>(ed.u), v = static_cast<std::size_t>(ed.v);
    --left[u];
    --left[v];
    auto step = [&]() { return feasible(ed.u) && feasible(ed.v) && run(e + 1); };
    if (h_size < h_cap && h_can_take(e)) {
      h_bump(e, 1);
      ++h_size;
      ++h_deg[u];
      ++h_deg[v];
      if (step()) return true;
      --h_deg[u];
      --h_deg[v];
      --h_size;
      h_bump(e, -1);
    }
    for (int t = 0; t < trees; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      // Trees are interchangeable: only open tree t once tree t-1 is used.
      if (t > 0 && tree_size[ti - 1] == 0) break;
      auto& lab = label[ti];
      const int a = lab[u];
      const int b = lab[v];
      if (a == b) continue;
      std::vector<int> saved = lab;
      for (int& x : lab)
        if (x == a) x = b;
      ++tree_size[ti];
      ++t_deg[ti][u];
      ++t_deg[ti][v];
      if (step()) return true;
      --t_deg[ti][u];
      --t_deg[ti][v];
      --tree_size[ti];
      lab = std::move(saved);
    }
    ++left[u];
    ++left[v];
    return false;
  }
};

}  // namespace

bool has_h_plus_trees(const Graph& g, int k, int l, int trees) {
  const int n = g.num_vertices();
  const int h_cap = k * n - l;
  if (g.num_edges() != h_cap + trees * (n - 1)) return false;
  // A union of a (k,l)-sparse graph and t forests is (k+t, l+t)-sparse;
  // ruling this out first keeps the search short on dense negatives.
  if (!sparse(g, k + trees, l + trees)) return false;
  PartitionSearch s(g, k, l, trees);
  return s.run(0);
}

bool has_tree_packing(const Graph& g, int trees) {
  const int n = g.num_vertices();
  if (g.num_edges() != trees * (n - 1)) return false;
  PartitionSearch s(g, 0, 0, trees);
  return s.run(0);
}

int rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Graph random_graph(int n, int m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(std::min<int>(m, static_cast<int>(all.size()))));
  return Graph(n, all);
}

Graph random_connected(int n, int m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::pair<int, int>> rest;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) rest.emplace_back(a, b);
  std::shuffle(rest.begin(), rest.end(), rng);
  for (const auto& e : rest) {
    if (static_cast<int>(edges.size()) >= m) break;
    edges.push_back(e);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, edges);
}

EdgeSet random_forest(const Graph& g, std::mt19937_64& rng, bool spanning) {
  EdgeSet order = g.all_edges();
  std::shuffle(order.begin(), order.end(), rng);
  Dsu d(g.num_vertices());
  EdgeSet out;
  std::bernoulli_distribution keep(0.6);
  for (EdgeId e : order) {
    if (!spanning && !keep(rng)) continue;
    if (d.join(g.edge(e).u, g.edge(e).v)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
