#include <algorithm>

#include "cylrig/error.hpp"
#include "cylrig/matroids.hpp"

namespace cylrig {

void CountParams::validate() const {
  if (k < 1 || l < 0 || l > 2 * k - 1) {
    throw PreconditionError("count parameters " + str() + " need k >= 1 and 0 <= l <= 2k-1");
  }
}

PebbleGame::PebbleGame(int num_vertices, CountParams params)
    : params_(params),
      pebbles_(static_cast<std::size_t>(num_vertices), params.k),
      out_(static_cast<std::size_t>(num_vertices)) {
  params_.validate();
}

// Depth-first search for a free pebble reachable from target along directed
// edges, never entering keep. The path is reversed so the pebble ends up on
// target.
bool PebbleGame::gather(VertexId target, VertexId keep) {
  const std::size_t n = pebbles_.size();
  std::vector<VertexId> parent(n, -1);
  std::vector<char> seen(n, 0);
  seen[static_cast<std::size_t>(target)] = 1;
  seen[static_cast<std::size_t>(keep)] = 1;
  // Stack of (vertex, next out-edge index).
  std::vector<std::pair<VertexId, std::size_t>> stack{{target, 0}};
  VertexId found = -1;
  while (!stack.empty() && found < 0) {
    auto& [x, idx] = stack.back();
    const auto& outs = out_[static_cast<std::size_t>(x)];
    if (idx >= outs.size()) {
      stack.pop_back();
      continue;
    }
    VertexId y = outs[idx++];
    if (seen[static_cast<std::size_t>(y)]) continue;
    seen[static_cast<std::size_t>(y)] = 1;
    parent[static_cast<std::size_t>(y)] = x;
    if (pebbles_[static_cast<std::size_t>(y)] > 0) {
      found = y;
    } else {
      stack.emplace_back(y, 0);
    }
  }
  if (found < 0) return false;

  pebbles_[static_cast<std::size_t>(found)] -= 1;
  pebbles_[static_cast<std::size_t>(target)] += 1;
  for (VertexId y = found; y != target;) {
    VertexId x = parent[static_cast<std::size_t>(y)];
    auto& xs = out_[static_cast<std::size_t>(x)];
    xs.erase(std::find(xs.begin(), xs.end(), y));
    auto& ys = out_[static_cast<std::size_t>(y)];
    ys.insert(std::upper_bound(ys.begin(), ys.end(), x), x);
    y = x;
  }
  return true;
}

bool PebbleGame::collect(VertexId a, VertexId b) {
  const int need = params_.l + 1;
  auto held = [&] { return pebbles_[static_cast<std::size_t>(a)] + pebbles_[static_cast<std::size_t>(b)]; };
  while (held() < need) {
    bool moved = false;
    if (pebbles_[static_cast<std::size_t>(a)] < params_.k) moved = gather(a, b);
    if (!moved && pebbles_[static_cast<std::size_t>(b)] < params_.k) moved = gather(b, a);
    if (!moved) return false;
  }
  return true;
}

bool PebbleGame::can_add(VertexId a, VertexId b) {
  if (a == b) return false;
  return collect(a, b);
}

bool PebbleGame::add_edge(VertexId a, VertexId b) {
  if (!can_add(a, b)) return false;
  VertexId tail = pebbles_[static_cast<std::size_t>(a)] > 0 ? a : b;
  VertexId head = tail == a ? b : a;
  pebbles_[static_cast<std::size_t>(tail)] -= 1;
  auto& outs = out_[static_cast<std::size_t>(tail)];
  outs.insert(std::upper_bound(outs.begin(), outs.end(), head), head);
  ++accepted_;
  return true;
}

void PebbleGame::remove_edge(VertexId a, VertexId b) {
  for (auto [tail, head] : {std::pair{a, b}, std::pair{b, a}}) {
    auto& outs = out_[static_cast<std::size_t>(tail)];
    auto it = std::lower_bound(outs.begin(), outs.end(), head);
    if (it != outs.end() && *it == head) {
      outs.erase(it);
      pebbles_[static_cast<std::size_t>(tail)] += 1;
      --accepted_;
      return;
    }
  }
  throw PreconditionError("remove_edge: edge " + std::to_string(a) + "-" + std::to_string(b) + " was not accepted");
}

bool pebble_sparse(const Graph& g, CountParams params) {
  PebbleGame game(g.num_vertices(), params);
  for (const auto& e : g.edges())
    if (!game.add_edge(e.u, e.v)) return false;
  return true;
}

bool pebble_tight(const Graph& g, CountParams params) {
  params.validate();
  return g.num_edges() == params.tight_count(g.num_vertices()) && pebble_sparse(g, params);
}

EdgeSet count_matroid_basis(const Graph& g, CountParams params, std::span<const EdgeId> order) {
  PebbleGame game(g.num_vertices(), params);
  EdgeSet basis;
  for (EdgeId e : order)
    if (game.add_edge(g.edge(e).u, g.edge(e).v)) basis.push_back(e);
  std::sort(basis.begin(), basis.end());
  return basis;
}

EdgeSet count_matroid_basis(const Graph& g, CountParams params) {
  EdgeSet order = g.all_edges();
  return count_matroid_basis(g, params, order);
}

}  // namespace cylrig
