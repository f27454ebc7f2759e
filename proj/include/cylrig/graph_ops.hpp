#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cylrig/graph.hpp"

namespace cylrig {

// Each operation adds vertex n (the old vertex count). Output edge ids: the
// input edges in order, with a removed edge dropped and moved edges rewritten
// in place, followed by the new edges.

/// New vertex joined to d distinct targets.
Graph zero_extension(const Graph& g, int d, const std::vector<VertexId>& targets);

/// Deletes xy and adds a vertex adjacent to x, y and d-1 further vertices.
Graph one_extension(const Graph& g, int d, std::pair<VertexId, VertexId> removed, const std::vector<VertexId>& extra);

/// New vertex w' adjacent to w and the d-1 pinned neighbours; every edge wv
/// with v in moved becomes w'v.
Graph vertex_split(const Graph& g, int d, VertexId w, const std::vector<VertexId>& pinned,
                   const std::vector<VertexId>& moved);

/// New vertex w' adjacent to v1 and v2 (not to w); moved edges go to w'.
Graph spider_split(const Graph& g, VertexId w, VertexId v1, VertexId v2, const std::vector<VertexId>& moved);

enum class OpKind { ZeroExt, OneExt, VertexSplit, SpiderSplit };
std::string to_string(OpKind k);

struct OpSpec {
  OpKind kind = OpKind::ZeroExt;
  int d = 3;
  /// ZeroExt targets, OneExt extra vertices.
  std::vector<VertexId> targets;
  std::pair<VertexId, VertexId> removed{-1, -1};
  VertexId w = -1;
  VertexId v1 = -1;
  VertexId v2 = -1;
  std::vector<VertexId> pinned;
  std::vector<VertexId> moved;
  /// Parameters are drawn at application time.
  bool random = false;
};

Graph apply_op(const Graph& g, const OpSpec& op);

/// Uniformly drawn valid parameters for the operation on g, or nullopt when
/// none exist.
std::optional<OpSpec> random_op(const Graph& g, OpKind kind, int d, std::mt19937_64& rng);

/// JSON list of operations, for example
/// [{"op": "vertex_split", "d": 3, "w": 0, "pinned": [1, 2], "moved": [3]}].
/// Names: zero_extension, one_extension, vertex_split, spider_split. An entry
/// {"op": ..., "random": true} draws its parameters when applied.
std::vector<OpSpec> parse_op_script(std::string_view json_text);
std::string op_to_json(const OpSpec& op);

}  // namespace cylrig
