#include "cylrig/graph.hpp"

#include <algorithm>

#include "cylrig/error.hpp"

namespace cylrig {

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
  incidence_.resize(static_cast<std::size_t>(num_vertices));
  lookup_.resize(static_cast<std::size_t>(num_vertices));
}

Graph::Graph(int num_vertices, std::span<const std::pair<VertexId, VertexId>> edges) : Graph(num_vertices) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Graph::Graph(int num_vertices, std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : Graph(num_vertices, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

void Graph::add_edge(VertexId a, VertexId b) {
  if (!has_vertex(a) || !has_vertex(b)) {
    throw PreconditionError("edge " + std::to_string(a) + "-" + std::to_string(b) + " uses an undeclared vertex");
  }
  if (a == b) throw PreconditionError("loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) {
    throw PreconditionError("parallel edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  const EdgeId id = num_edges();
  edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  auto insert_sorted = [](auto& vec, auto value) { vec.insert(std::upper_bound(vec.begin(), vec.end(), value), value); };
  insert_sorted(adjacency_[static_cast<std::size_t>(a)], b);
  insert_sorted(adjacency_[static_cast<std::size_t>(b)], a);
  incidence_[static_cast<std::size_t>(a)].push_back(id);
  incidence_[static_cast<std::size_t>(b)].push_back(id);
  insert_sorted(lookup_[static_cast<std::size_t>(a)], std::pair{b, id});
  insert_sorted(lookup_[static_cast<std::size_t>(b)], std::pair{a, id});
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices_; ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return std::nullopt;
  const auto& row = lookup_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(row.begin(), row.end(), std::pair{b, EdgeId{-1}});
  if (it != row.end() && it->first == b) return it->second;
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

Graph Graph::edge_subgraph(std::span<const EdgeId> edges) const {
  EdgeSet ids(edges.begin(), edges.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(ids.size());
  for (EdgeId e : ids) pairs.emplace_back(edge(e).u, edge(e).v);
  return Graph(num_vertices_, pairs);
}

Graph Graph::remove_vertices(std::span<const VertexId> removed) const {
  std::vector<int> index(static_cast<std::size_t>(num_vertices_), 0);
  for (VertexId v : removed) {
    if (!has_vertex(v)) throw PreconditionError("remove_vertices: unknown vertex " + std::to_string(v));
    index[static_cast<std::size_t>(v)] = -1;
  }
  int next = 0;
  for (auto& slot : index) slot = slot < 0 ? -1 : next++;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : edges_) {
    int a = index[static_cast<std::size_t>(e.u)], b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
  }
  return Graph(next, pairs);
}

EdgeSet Graph::all_edges() const {
  EdgeSet out(edges_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<EdgeId>(i);
  return out;
}

}  // namespace cylrig
