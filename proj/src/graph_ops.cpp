#include "cylrig/graph_ops.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "cylrig/error.hpp"

namespace cylrig {

namespace {

void check_d(int d) {
  if (d != 2 && d != 3) throw PreconditionError("operation dimension must be 2 or 3, got " + std::to_string(d));
}

void check_vertex(const Graph& g, VertexId v, const char* what) {
  if (!g.has_vertex(v)) throw PreconditionError(std::string(what) + " " + std::to_string(v) + " is not a vertex");
}

void check_distinct(const std::vector<VertexId>& vs, const char* what) {
  std::set<VertexId> s(vs.begin(), vs.end());
  if (s.size() != vs.size()) throw PreconditionError(std::string(what) + " must be distinct");
}

Graph build(int n, std::vector<std::pair<VertexId, VertexId>> edges) { return Graph(n, edges); }

}  // namespace

Graph zero_extension(const Graph& g, int d, const std::vector<VertexId>& targets) {
  check_d(d);
  if (static_cast<int>(targets.size()) != d) throw PreconditionError("0-extension needs exactly d targets");
  check_distinct(targets, "0-extension targets");
  for (VertexId t : targets) check_vertex(g, t, "target");
  const int n = g.num_vertices();
  auto edges = g.edge_pairs();
  for (VertexId t : targets) edges.emplace_back(t, n);
  return build(n + 1, std::move(edges));
}

Graph one_extension(const Graph& g, int d, std::pair<VertexId, VertexId> removed, const std::vector<VertexId>& extra) {
  check_d(d);
  auto [x, y] = removed;
  auto id = g.find_edge(x, y);
  if (!id) throw PreconditionError("1-extension: edge " + std::to_string(x) + "-" + std::to_string(y) + " is absent");
  if (static_cast<int>(extra.size()) != d - 1) throw PreconditionError("1-extension needs d-1 extra vertices");
  check_distinct(extra, "1-extension extra vertices");
  for (VertexId v : extra) {
    check_vertex(g, v, "extra vertex");
    if (v == x || v == y) throw PreconditionError("1-extension extra vertices must differ from the removed edge's ends");
  }
  const int n = g.num_vertices();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (e != *id) edges.emplace_back(g.edge(e).u, g.edge(e).v);
  edges.emplace_back(x, n);
  edges.emplace_back(y, n);
  for (VertexId v : extra) edges.emplace_back(v, n);
  return build(n + 1, std::move(edges));
}

namespace {

// Rewrites edges wv (v in moved) to w'v in place and appends w'a for each a in
// attach.
Graph split(const Graph& g, VertexId w, const std::vector<VertexId>& attach, const std::vector<VertexId>& moved) {
  const int n = g.num_vertices();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) {
    if (e.has(w) && std::find(moved.begin(), moved.end(), e.other(w)) != moved.end()) {
      edges.emplace_back(e.other(w), n);
    } else {
      edges.emplace_back(e.u, e.v);
    }
  }
  for (VertexId a : attach) edges.emplace_back(a, n);
  return build(n + 1, std::move(edges));
}

void check_moved(const Graph& g, VertexId w, const std::vector<VertexId>& moved, const std::vector<VertexId>& excluded) {
  check_distinct(moved, "moved neighbours");
  for (VertexId v : moved) {
    if (!g.has_vertex(v) || !g.has_edge(w, v))
      throw PreconditionError("moved vertex " + std::to_string(v) + " is not a neighbour of " + std::to_string(w));
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end())
      throw PreconditionError("moved vertex " + std::to_string(v) + " is also kept");
  }
}

}  // namespace

Graph vertex_split(const Graph& g, int d, VertexId w, const std::vector<VertexId>& pinned,
                   const std::vector<VertexId>& moved) {
  check_d(d);
  check_vertex(g, w, "split vertex");
  if (static_cast<int>(pinned.size()) != d - 1) throw PreconditionError("vertex split needs d-1 pinned neighbours");
  check_distinct(pinned, "pinned neighbours");
  for (VertexId v : pinned)
    if (!g.has_vertex(v) || !g.has_edge(w, v))
      throw PreconditionError("pinned vertex " + std::to_string(v) + " is not a neighbour of " + std::to_string(w));
  check_moved(g, w, moved, pinned);
  std::vector<VertexId> attach{w};
  attach.insert(attach.end(), pinned.begin(), pinned.end());
  return split(g, w, attach, moved);
}

Graph spider_split(const Graph& g, VertexId w, VertexId v1, VertexId v2, const std::vector<VertexId>& moved) {
  check_vertex(g, w, "split vertex");
  if (v1 == v2) throw PreconditionError("spider split needs two distinct neighbours");
  for (VertexId v : {v1, v2})
    if (!g.has_vertex(v) || !g.has_edge(w, v))
      throw PreconditionError("vertex " + std::to_string(v) + " is not a neighbour of " + std::to_string(w));
  check_moved(g, w, moved, {v1, v2});
  return split(g, w, {v1, v2}, moved);
}

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::ZeroExt: return "zero_extension";
    case OpKind::OneExt: return "one_extension";
    case OpKind::VertexSplit: return "vertex_split";
    case OpKind::SpiderSplit: return "spider_split";
  }
  return {};
}

Graph apply_op(const Graph& g, const OpSpec& op) {
  if (op.random) throw PreconditionError("random operation must be resolved with random_op before it is applied");
  switch (op.kind) {
    case OpKind::ZeroExt: return zero_extension(g, op.d, op.targets);
    case OpKind::OneExt: return one_extension(g, op.d, op.removed, op.targets);
    case OpKind::VertexSplit: return vertex_split(g, op.d, op.w, op.pinned, op.moved);
    case OpKind::SpiderSplit: return spider_split(g, op.w, op.v1, op.v2, op.moved);
  }
  return g;
}

namespace {

std::vector<VertexId> sample(std::vector<VertexId> pool, int k, std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<VertexId> random_subset(const std::vector<VertexId>& pool, std::mt19937_64& rng) {
  std::vector<VertexId> out;
  std::bernoulli_distribution coin(0.5);
  for (VertexId v : pool)
    if (coin(rng)) out.push_back(v);
  return out;
}

std::vector<VertexId> without(std::span<const VertexId> pool, const std::vector<VertexId>& drop) {
  std::vector<VertexId> out;
  for (VertexId v : pool)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

}  // namespace

std::optional<OpSpec> random_op(const Graph& g, OpKind kind, int d, std::mt19937_64& rng) {
  check_d(d);
  const int n = g.num_vertices();
  OpSpec op;
  op.kind = kind;
  op.d = kind == OpKind::SpiderSplit ? 2 : d;
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  switch (kind) {
    case OpKind::ZeroExt:
      if (n < d) return std::nullopt;
      op.targets = sample(all, d, rng);
      return op;
    case OpKind::OneExt: {
      if (g.num_edges() == 0 || n < d + 1) return std::nullopt;
      std::uniform_int_distribution<EdgeId> pick(0, g.num_edges() - 1);
      const Edge& e = g.edge(pick(rng));
      op.removed = {e.u, e.v};
      op.targets = sample(without(all, {e.u, e.v}), d - 1, rng);
      return op;
    }
    case OpKind::VertexSplit:
    case OpKind::SpiderSplit: {
      const int need = kind == OpKind::VertexSplit ? d - 1 : 2;
      std::vector<VertexId> candidates;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) >= need) candidates.push_back(v);
      if (candidates.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      op.w = candidates[pick(rng)];
      std::vector<VertexId> nbrs(g.neighbours(op.w).begin(), g.neighbours(op.w).end());
      std::vector<VertexId> kept = sample(nbrs, need, rng);
      if (kind == OpKind::VertexSplit) {
        op.pinned = kept;
      } else {
        op.v1 = kept[0];
        op.v2 = kept[1];
      }
      op.moved = random_subset(without(nbrs, kept), rng);
      return op;
    }
  }
  return std::nullopt;
}

namespace {

OpKind kind_from(const std::string& name, std::size_t step) {
  if (name == "zero_extension") return OpKind::ZeroExt;
  if (name == "one_extension") return OpKind::OneExt;
  if (name == "vertex_split") return OpKind::VertexSplit;
  if (name == "spider_split") return OpKind::SpiderSplit;
  throw PreconditionError("step " + std::to_string(step) + ": unknown operation '" + name + "'");
}

}  // namespace

std::vector<OpSpec> parse_op_script(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("operation script: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("operation script must be a JSON list", 0);
  std::vector<OpSpec> ops;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& j = doc[i];
    try {
      OpSpec op;
      op.kind = kind_from(j.at("op").get<std::string>(), i);
      op.d = j.value("d", op.kind == OpKind::SpiderSplit ? 2 : 3);
      op.random = j.value("random", false);
      if (!op.random) {
        switch (op.kind) {
          case OpKind::ZeroExt:
            op.targets = j.at("targets").get<std::vector<VertexId>>();
            break;
          case OpKind::OneExt: {
            auto r = j.at("removed").get<std::vector<VertexId>>();
            if (r.size() != 2) throw PreconditionError("removed must list two vertices");
            op.removed = {r[0], r[1]};
            op.targets = j.at("extra").get<std::vector<VertexId>>();
            break;
          }
          case OpKind::VertexSplit:
            op.w = j.at("w").get<VertexId>();
            op.pinned = j.at("pinned").get<std::vector<VertexId>>();
            op.moved = j.value("moved", std::vector<VertexId>{});
            break;
          case OpKind::SpiderSplit:
            op.w = j.at("w").get<VertexId>();
            op.v1 = j.at("v1").get<VertexId>();
            op.v2 = j.at("v2").get<VertexId>();
            op.moved = j.value("moved", std::vector<VertexId>{});
            break;
        }
      }
      ops.push_back(std::move(op));
    } catch (const json::exception& e) {
      throw PreconditionError("step " + std::to_string(i) + ": " + e.what());
    } catch (const PreconditionError& e) {
      std::string msg = e.what();
      if (msg.rfind("step ", 0) == 0) throw;
      throw PreconditionError("step " + std::to_string(i) + ": " + msg);
    }
  }
  return ops;
}

std::string op_to_json(const OpSpec& op) {
  nlohmann::ordered_json j;
  j["op"] = to_string(op.kind);
  j["d"] = op.d;
  if (op.random) {
    j["random"] = true;
    return j.dump();
  }
  switch (op.kind) {
    case OpKind::ZeroExt: j["targets"] = op.targets; break;
    case OpKind::OneExt:
      j["removed"] = {op.removed.first, op.removed.second};
      j["extra"] = op.targets;
      break;
    case OpKind::VertexSplit:
      j["w"] = op.w;
      j["pinned"] = op.pinned;
      j["moved"] = op.moved;
      break;
    case OpKind::SpiderSplit:
      j["w"] = op.w;
      j["v1"] = op.v1;
      j["v2"] = op.v2;
      j["moved"] = op.moved;
      break;
  }
  return j.dump();
}

}  // namespace cylrig
