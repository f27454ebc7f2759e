#include <charconv>

#include "cylrig/error.hpp"
#include "cylrig/graph.hpp"

namespace cylrig {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void add_clique(EdgeList& edges, std::span<const VertexId> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
}

// K6 minus the edge between the poles, poles listed last.
void add_k6_minus_pole_edge(EdgeList& edges, std::span<const VertexId, 4> inner, VertexId pole_a, VertexId pole_b) {
  add_clique(edges, inner);
  for (VertexId pole : {pole_a, pole_b})
    for (VertexId v : inner) edges.emplace_back(v, pole);
}

}  // namespace

Graph complete_graph(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph needs at least 3 vertices");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph named_graph(std::string_view name) {
  if (name.size() >= 2 && name[0] == 'K' && name.find('_', 2) == std::string_view::npos &&
      name.find("minus") == std::string_view::npos && name.find("glue") == std::string_view::npos) {
    std::string_view digits = name.substr(name[1] == '_' ? 2 : 1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 8) return complete_graph(n);
  }
  if (name == "K6_minus_e") {
    EdgeList edges;
    const VertexId inner[4] = {0, 1, 2, 3};
    add_k6_minus_pole_edge(edges, inner, 4, 5);
    return Graph(6, edges);
  }
  if (name == "K5_glue_K3_K5") {
    EdgeList edges;
    const VertexId left[5] = {0, 1, 2, 3, 4};
    add_clique(edges, left);
    // Second K5 shares {2,3,4}; skip the shared triangle.
    for (VertexId v : {5, 6})
      for (VertexId w : {2, 3, 4}) edges.emplace_back(w, v);
    edges.emplace_back(5, 6);
    return Graph(7, edges);
  }
  if (name == "K7_minus_K3") {
    EdgeList edges;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        if (!(i < 3 && j < 3)) edges.emplace_back(i, j);
    return Graph(7, edges);
  }
  if (name == "FIG2_OCTA_RING") {
    // Poles 0..3; copy c owns inner vertices 4+4c..7+4c and joins poles c and c+1 (mod 4).
    EdgeList edges;
    for (int c = 0; c < 4; ++c) {
      const VertexId inner[4] = {4 + 4 * c, 5 + 4 * c, 6 + 4 * c, 7 + 4 * c};
      add_k6_minus_pole_edge(edges, inner, c, (c + 1) % 4);
    }
    return Graph(20, edges);
  }
  throw CatalogError("unknown catalog graph '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 8; ++n) names.push_back("K" + std::to_string(n));
  for (const char* s : {"K6_minus_e", "K5_glue_K3_K5", "K7_minus_K3", "FIG2_OCTA_RING"}) names.emplace_back(s);
  return names;
}

}  // namespace cylrig
