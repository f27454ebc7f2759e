#include <doctest.h>

#include <algorithm>

#include "cylrig/error.hpp"
#include "cylrig/matroids.hpp"
#include "oracles.hpp"

using namespace cylrig;

namespace {

// max over (k,l)-sparse A of |A| + rank of the graphic matroid on E \ A.
int brute_union_rank(const Graph& g, int k, int l, int forests) {
  const int m = g.num_edges();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    EdgeSet a, rest;
    for (int e = 0; e < m; ++e) ((s >> e) & 1u ? a : rest).push_back(e);
    if (!oracle::sparse_edges(g, a, k, l)) continue;
    int r = 0;
    if (forests == 1) r = g.num_vertices() - oracle::components(g, rest);
    best = std::max(best, static_cast<int>(a.size()) + r);
  }
  return best;
}

}  // namespace

TEST_CASE("count parameters") {
  CHECK_NOTHROW(CountParams{2, 3}.validate());
  CHECK_NOTHROW(CountParams{3, 5}.validate());
  CHECK_THROWS_AS((CountParams{2, 4}.validate()), PreconditionError);
  CHECK_THROWS_AS((CountParams{0, 0}.validate()), PreconditionError);
  CHECK_THROWS_AS((CountParams{2, -1}.validate()), PreconditionError);
  CHECK(CountParams{3, 4}.tight_count(6) == 14);
}

TEST_CASE("pebble game agrees with subgraph counting, other parameters") {
  const CountParams params[] = {{1, 0}, {1, 1}, {2, 1}, {3, 5}, {4, 5}};
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : oracle::atlas(n))
      for (const auto& p : params) {
        CHECK(pebble_sparse(g, p) == oracle::sparse(g, p.k, p.l));
        CHECK(pebble_tight(g, p) == oracle::tight(g, p.k, p.l));
      }
}

TEST_CASE("count matroid basis is a maximal sparse subset") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(7, 14, rng);
    for (CountParams p : {CountParams{2, 3}, CountParams{3, 4}, CountParams{3, 3}}) {
      EdgeSet b = count_matroid_basis(g, p);
      CHECK(oracle::sparse_edges(g, b, p.k, p.l));
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (std::binary_search(b.begin(), b.end(), e)) continue;
        EdgeSet bigger = b;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), e), e);
        CHECK_FALSE(oracle::sparse_edges(g, bigger, p.k, p.l));
      }
    }
  }
}

TEST_CASE("pebble game removal restores capacity") {
  PebbleGame game(4, {2, 3});
  CHECK(game.add_edge(0, 1));
  CHECK(game.add_edge(1, 2));
  CHECK(game.add_edge(0, 2));
  CHECK_FALSE(game.can_add(0, 1));
  game.remove_edge(0, 2);
  CHECK(game.num_accepted() == 2);
  CHECK(game.can_add(0, 2));
  CHECK_THROWS_AS(game.remove_edge(2, 3), PreconditionError);
}

TEST_CASE("oracles and exchange queries") {
  Graph g = named_graph("K5");
  GraphicOracle forests(g);
  CountOracle laman(g, {2, 3});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    EdgeSet all = g.all_edges();
    std::shuffle(all.begin(), all.end(), rng);
    EdgeSet base;
    for (EdgeId e : all) {
      EdgeSet trial = base;
      trial.push_back(e);
      std::sort(trial.begin(), trial.end());
      if (oracle::is_forest(g, trial) && trial.size() < 3) base = trial;
    }
    auto q = forests.exchange(base);
    auto q2 = laman.exchange(base);
    for (EdgeId in = 0; in < g.num_edges(); ++in) {
      if (std::binary_search(base.begin(), base.end(), in)) continue;
      EdgeSet plus = base;
      plus.push_back(in);
      std::sort(plus.begin(), plus.end());
      CHECK(q->can_add(in) == oracle::is_forest(g, plus));
      CHECK(q2->can_add(in) == oracle::sparse_edges(g, plus, 2, 3));
      for (EdgeId out : base) {
        EdgeSet sw = plus;
        sw.erase(std::find(sw.begin(), sw.end(), out));
        CHECK(q->can_swap(out, in) == oracle::is_forest(g, sw));
        CHECK(q2->can_swap(out, in) == oracle::sparse_edges(g, sw, 2, 3));
      }
    }
  }
}

TEST_CASE("union of (2,3) and a forest reaches the brute-force rank") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : oracle::atlas(n)) {
      Decomposition d = max_count_plus_forests(g, {2, 3}, 1);
      CHECK(d.covered() == brute_union_rank(g, 2, 3, 1));
      CHECK(oracle::sparse_edges(g, d.h_edges, 2, 3));
      CHECK(oracle::is_forest(g, d.trees.at(0)));
      CHECK(static_cast<int>(d.h_edges.size() + d.trees[0].size() + d.rest.size()) == g.num_edges());
    }
}

TEST_CASE("matroid union with seeds and with a predicate oracle") {
  Graph g = named_graph("K6");
  GraphicOracle f1(g), f2(g), f3(g);
  const MatroidOracle* three[] = {&f1, &f2, &f3};
  auto parts = matroid_union_basis(three, g);
  REQUIRE(parts.size() == 3);
  int total = 0;
  for (const auto& p : parts) {
    CHECK(oracle::is_forest(g, p));
    total += static_cast<int>(p.size());
  }
  CHECK(total == 15);

  PredicateOracle brute(g, "forest", [&](std::span<const EdgeId> s) {
    return oracle::is_forest(g, EdgeSet(s.begin(), s.end()));
  });
  const MatroidOracle* mixed[] = {&f1, &brute};
  std::vector<EdgeSet> seeds = {EdgeSet{0, 1}};
  auto two = matroid_union_basis(mixed, g, seeds);
  CHECK(two[0].size() + two[1].size() == 10);
}

TEST_CASE("tree packings match the exhaustive search") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : oracle::atlas(n))
      for (int k = 1; k <= 2; ++k) {
        auto packing = nash_williams(g, k);
        CHECK(packing.has_value() == oracle::has_tree_packing(g, k));
        if (packing)
          for (const auto& t : *packing) CHECK(oracle::is_spanning_tree(g, t));
      }
}

TEST_CASE("(2,3)-tight plus spanning tree decompositions match the exhaustive search") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : oracle::atlas(n)) {
      if (g.num_edges() != 3 * n - 4) continue;
      auto d = decompose_h_plus_trees(g, {2, 3}, 1);
      CHECK(d.has_value() == oracle::has_h_plus_trees(g, 2, 3, 1));
      if (d) {
        CHECK(oracle::tight(g.edge_subgraph(d->h_edges), 2, 3));
        CHECK(oracle::is_spanning_tree(g, d->trees.at(0)));
      }
    }
}

TEST_CASE("colour switch") {
  Decomposition d = *decompose_h_plus_trees(named_graph("K6_minus_e"), {2, 3}, 1);
  const Graph g = named_graph("K6_minus_e");
  for (EdgeId e : d.trees[0]) {
    EdgeSet plus = d.h_edges;
    plus.push_back(e);
    std::sort(plus.begin(), plus.end());
    if (oracle::sparse_edges(g, plus, 2, 3)) continue;
    auto f = colour_switch(g, {2, 3}, d.h_edges, d.trees[0], e);
    REQUIRE(f.has_value());
    EdgeSet h2 = plus;
    h2.erase(std::find(h2.begin(), h2.end(), *f));
    EdgeSet t2 = d.trees[0];
    t2.erase(std::find(t2.begin(), t2.end(), e));
    t2.push_back(*f);
    std::sort(t2.begin(), t2.end());
    CHECK(oracle::sparse_edges(g, h2, 2, 3));
    CHECK(oracle::is_spanning_tree(g, t2));
  }
}

TEST_CASE("forest extension keeps H independent") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_connected(8, 16, rng);
    Decomposition d = max_count_plus_forests(g, {2, 3}, 1);
    extend_forest_to_tree(g, d);
    CHECK(oracle::is_spanning_tree(g, d.trees[0]));
    CHECK(oracle::sparse_edges(g, d.h_edges, 2, 3));
  }
}

TEST_CASE("union detects a predicate that is not a matroid") {
  // Downward-closed families with two maximal sets each; neither satisfies
  // the exchange axiom, and the shortest augmenting path breaks part 1.
  Graph g = complete_graph(4);
  auto family = [](std::vector<std::uint32_t> maximal) {
    return [maximal](std::span<const EdgeId> s) {
      std::uint32_t m = 0;
      for (EdgeId e : s) m |= 1u << e;
      return std::any_of(maximal.begin(), maximal.end(), [m](std::uint32_t x) { return (m & x) == m; });
    };
  };
  PredicateOracle a(g, "a", family({0b010101, 0b000011}));
  PredicateOracle b(g, "b", family({0b111000, 0b000111}));
  const MatroidOracle* both[] = {&a, &b};
  CHECK_THROWS_AS(matroid_union_basis(both, g), MatroidAxiomError);
}
