#include <doctest.h>

#include "cylrig/characterize.hpp"
#include "cylrig/error.hpp"
#include "cylrig/graph_ops.hpp"
#include "oracles.hpp"

using namespace cylrig;

TEST_CASE("0-extension") {
  Graph k4 = zero_extension(named_graph("K3"), 3, {0, 1, 2});
  CHECK(k4.num_vertices() == 4);
  CHECK(k4.num_edges() == 6);
  CHECK(oracle::tight(k4, 2, 2));
  CHECK(zero_extension(Graph(2, {{0, 1}}), 2, {0, 1}).num_edges() == 3);
  CHECK_THROWS_AS(zero_extension(named_graph("K3"), 3, {0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(zero_extension(named_graph("K3"), 3, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(zero_extension(named_graph("K3"), 4, {0, 1, 2, 2}), PreconditionError);

  Graph g = zero_extension(named_graph("K6_minus_e"), 3, {0, 1, 2});
  CHECK(g.num_vertices() == 7);
  CHECK(g.num_edges() == 17);
  CHECK(classify(g, SpaceKind::CylEuclid).minimally_rigid);
}

TEST_CASE("1-extension") {
  Graph k4 = named_graph("K4");
  Graph g = one_extension(k4, 3, {0, 1}, {2, 3});
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 9);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 4));
  CHECK(g.has_edge(1, 4));
  CHECK_THROWS_AS(one_extension(Graph(4, {{0, 1}}), 3, {2, 3}, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(one_extension(k4, 3, {0, 1}, {0, 2}), PreconditionError);
}

TEST_CASE("vertex split and spider split") {
  Graph k4 = named_graph("K4");
  Graph s = vertex_split(k4, 3, 0, {1, 2}, {3});
  CHECK(s.num_vertices() == 5);
  CHECK(s.num_edges() == 9);
  CHECK(s.has_edge(4, 3));
  CHECK_FALSE(s.has_edge(0, 3));
  CHECK(s.has_edge(0, 4));
  // Moved edges are rewritten in place.
  CHECK(s.edge(*k4.find_edge(0, 3)) == Edge{3, 4});
  CHECK_THROWS_AS(vertex_split(k4, 3, 0, {1}, {}), PreconditionError);
  CHECK_THROWS_AS(vertex_split(k4, 3, 0, {1, 2}, {2}), PreconditionError);

  Graph sp = spider_split(k4, 0, 1, 2, {3});
  CHECK(sp.num_edges() == 8);
  CHECK_FALSE(sp.has_edge(0, 4));
  CHECK(sp.has_edge(1, 4));
  CHECK(sp.has_edge(2, 4));
  CHECK(sp.has_edge(3, 4));
  CHECK_THROWS_AS(spider_split(k4, 0, 1, 1, {}), PreconditionError);
}

TEST_CASE("scripts") {
  auto ops = parse_op_script(R"([
    {"op": "zero_extension", "d": 3, "targets": [0, 1, 2]},
    {"op": "one_extension", "removed": [0, 1], "extra": [2, 3]},
    {"op": "vertex_split", "w": 0, "pinned": [1, 2], "moved": [3]},
    {"op": "spider_split", "w": 1, "v1": 0, "v2": 2},
    {"op": "vertex_split", "random": true}
  ])");
  REQUIRE(ops.size() == 5);
  CHECK(ops[0].kind == OpKind::ZeroExt);
  CHECK(ops[1].d == 3);
  CHECK(ops[3].d == 2);
  CHECK(ops[4].random);
  CHECK_THROWS_AS(apply_op(named_graph("K5"), ops[4]), PreconditionError);
  for (std::size_t i = 0; i < 4; ++i) CHECK(parse_op_script("[" + op_to_json(ops[i]) + "]")[0].targets == ops[i].targets);

  CHECK_THROWS_AS(parse_op_script("{"), ParseError);
  CHECK_THROWS_AS(parse_op_script("{}"), ParseError);
  try {
    parse_op_script(R"([{"op": "zero_extension", "targets": [0,1,2]}, {"op": "twist"}])");
    FAIL("expected an error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("random operations are valid") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_connected(6, 10, rng);
    for (OpKind k : {OpKind::ZeroExt, OpKind::OneExt, OpKind::VertexSplit, OpKind::SpiderSplit})
      for (int d : {2, 3}) {
        auto op = random_op(g, k, d, rng);
        REQUIRE(op.has_value());
        Graph h = apply_op(g, *op);
        CHECK(h.num_vertices() == g.num_vertices() + 1);
        CHECK(h.num_edges() == g.num_edges() + op->d);
      }
  }
  CHECK_FALSE(random_op(Graph(2), OpKind::ZeroExt, 3, rng).has_value());
}
