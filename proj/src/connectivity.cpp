#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "cylrig/error.hpp"
#include "cylrig/graph.hpp"
#include "union_find.hpp"

namespace cylrig {

namespace {

using detail::UnionFind;

// Unit-capacity max flow on a directed arc list, BFS augmenting paths.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(static_cast<std::size_t>(n), -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    const int n = static_cast<int>(head_.size());
    std::vector<int> via(static_cast<std::size_t>(n));
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[static_cast<std::size_t>(s)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
        int x = queue.front();
        queue.pop();
        for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
            via[static_cast<std::size_t>(arc.to)] = a;
            queue.push(arc.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(t)] == -1) break;
      for (int x = t; x != s;) {
        int a = via[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

int local_edge_connectivity(const Graph& g, VertexId s, VertexId t) {
  FlowNetwork net(g.num_vertices());
  for (const auto& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net.max_flow(s, t, std::numeric_limits<int>::max());
}

// Internally vertex-disjoint s-t paths, capped at limit.
int local_vertex_connectivity(const Graph& g, VertexId s, VertexId t, int limit) {
  const int n = g.num_vertices();
  FlowNetwork net(2 * n);
  const int big = n + 1;
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const auto& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, big);
    net.add_arc(2 * e.v + 1, 2 * e.u, big);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (label[static_cast<std::size_t>(root)] >= 0) continue;
    std::queue<VertexId> queue;
    queue.push(root);
    label[static_cast<std::size_t>(root)] = next;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (VertexId y : g.neighbours(x)) {
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = next;
          queue.push(y);
        }
      }
    }
    ++next;
  }
  return label;
}

int num_components(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return num_components(g) <= 1; }

int edge_connectivity(const Graph& g) {
  if (g.num_vertices() <= 1 || !is_connected(g)) return 0;
  int best = g.min_degree();
  for (VertexId t = 1; t < g.num_vertices() && best > 0; ++t) best = std::min(best, local_edge_connectivity(g, 0, t));
  return best;
}

bool is_vertex_k_connected(const Graph& g, int k) {
  if (k <= 0) throw PreconditionError("is_vertex_k_connected: k must be positive");
  const int n = g.num_vertices();
  if (n <= k) return false;
  if (g.min_degree() < k) return false;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      if (local_vertex_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

EdgeSet spanning_forest(const Graph& g) {
  EdgeSet out;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(x)) {
        VertexId y = g.edge(e).other(x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          out.push_back(e);
          queue.push(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_forest(const Graph& g, std::span<const EdgeId> edges) {
  UnionFind uf(g.num_vertices());
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) throw PreconditionError("is_forest: edge id out of range");
    if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

bool is_spanning_tree(const Graph& g, std::span<const EdgeId> edges) {
  const int n = g.num_vertices();
  return static_cast<int>(edges.size()) == std::max(n - 1, 0) && is_forest(g, edges);
}

}  // namespace cylrig
