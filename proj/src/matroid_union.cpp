#include <algorithm>
#include <deque>

#include "cylrig/error.hpp"
#include "cylrig/matroids.hpp"

namespace cylrig {

namespace {

constexpr int kUnassigned = -1;

struct UnionState {
  std::span<const MatroidOracle* const> oracles;
  std::vector<EdgeSet> parts;
  std::vector<int> owner;  // part index per edge, or kUnassigned

  int num_parts() const { return static_cast<int>(parts.size()); }

  void insert(int j, EdgeId e) {
    auto& p = parts[static_cast<std::size_t>(j)];
    p.insert(std::lower_bound(p.begin(), p.end(), e), e);
    owner[static_cast<std::size_t>(e)] = j;
  }

  void erase(int j, EdgeId e) {
    auto& p = parts[static_cast<std::size_t>(j)];
    p.erase(std::lower_bound(p.begin(), p.end(), e));
    owner[static_cast<std::size_t>(e)] = kUnassigned;
  }

  // Breadth-first search for a shortest exchange path starting at x. A node
  // is an element waiting to enter some part; an arc z -> y (y in part j)
  // means part j accepts z after giving up y.
  bool augment(EdgeId x) {
    const int m = num_parts();
    std::vector<std::unique_ptr<ExchangeQuery>> queries;
    queries.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) queries.push_back(oracles[static_cast<std::size_t>(j)]->exchange(parts[static_cast<std::size_t>(j)]));

    const std::size_t num_edges = owner.size();
    std::vector<EdgeId> parent(num_edges, -1);
    std::vector<char> seen(num_edges, 0);
    std::deque<EdgeId> queue{x};
    seen[static_cast<std::size_t>(x)] = 1;
    EdgeId last = -1;
    int last_part = -1;
    while (!queue.empty() && last < 0) {
      EdgeId z = queue.front();
      queue.pop_front();
      const int own = owner[static_cast<std::size_t>(z)];
      for (int j = 0; j < m && last < 0; ++j) {
        if (j == own) continue;
        if (queries[static_cast<std::size_t>(j)]->can_add(z)) {
          last = z;
          last_part = j;
        }
      }
      if (last >= 0) break;
      for (int j = 0; j < m; ++j) {
        if (j == own) continue;
        for (EdgeId y : parts[static_cast<std::size_t>(j)]) {
          if (seen[static_cast<std::size_t>(y)]) continue;
          if (queries[static_cast<std::size_t>(j)]->can_swap(y, z)) {
            seen[static_cast<std::size_t>(y)] = 1;
            parent[static_cast<std::size_t>(y)] = z;
            queue.push_back(y);
          }
        }
      }
    }
    if (last < 0) return false;

    // Walk back: last enters last_part; each predecessor takes the slot its
    // successor vacates.
    std::vector<int> touched{last_part};
    EdgeId z = last;
    int target = last_part;
    while (true) {
      const int from = owner[static_cast<std::size_t>(z)];
      if (from != kUnassigned) erase(from, z);
      insert(target, z);
      if (z == x) break;
      target = from;
      touched.push_back(from);
      z = parent[static_cast<std::size_t>(z)];
    }
    for (int j : touched) {
      if (!oracles[static_cast<std::size_t>(j)]->is_independent(parts[static_cast<std::size_t>(j)]))
        throw MatroidAxiomError("augmentation left part " + std::to_string(j) + " (" +
                                oracles[static_cast<std::size_t>(j)]->name() + ") dependent");
    }
    return true;
  }
};

}  // namespace

std::vector<EdgeSet> matroid_union_basis(std::span<const MatroidOracle* const> oracles, const Graph& g,
                                         std::span<const EdgeSet> seeds) {
  if (seeds.size() > oracles.size()) throw PreconditionError("more seeds than matroids");
  UnionState st{oracles, std::vector<EdgeSet>(oracles.size()),
                std::vector<int>(static_cast<std::size_t>(g.num_edges()), kUnassigned)};
  for (std::size_t j = 0; j < seeds.size(); ++j) {
    for (EdgeId e : seeds[j]) {
      if (e < 0 || e >= g.num_edges()) throw PreconditionError("seed edge out of range");
      if (st.owner[static_cast<std::size_t>(e)] != kUnassigned) throw PreconditionError("seeds are not disjoint");
      st.insert(static_cast<int>(j), e);
    }
    if (!oracles[j]->is_independent(st.parts[j]))
      throw PreconditionError("seed " + std::to_string(j) + " is dependent in " + oracles[j]->name());
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (st.owner[static_cast<std::size_t>(e)] != kUnassigned) continue;
    st.augment(e);
  }
  return st.parts;
}

}  // namespace cylrig
