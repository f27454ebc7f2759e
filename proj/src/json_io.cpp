#include "cylrig/json_io.hpp"

#include "cylrig/error.hpp"

namespace cylrig {

Json to_json(const Decomposition& d) {
  Json j;
  j["h"] = d.h_edges;
  j["trees"] = d.trees;
  if (!d.rest.empty()) j["rest"] = d.rest;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  try {
    Decomposition d;
    d.h_edges = j.at("h").get<EdgeSet>();
    d.trees = j.at("trees").get<std::vector<EdgeSet>>();
    if (j.contains("rest")) d.rest = j.at("rest").get<EdgeSet>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("bad decomposition JSON: ") + e.what());
  }
}

Json to_json(const Placement& p) {
  Json j = Json::object();
  for (int v = 0; v < p.num_vertices(); ++v) {
    Json coords = Json::array();
    for (const auto& c : p[v]) coords.push_back(to_string(c));
    j[std::to_string(v)] = std::move(coords);
  }
  return j;
}

Placement placement_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("placement JSON must be an object");
  std::vector<Vector> pts(j.size());
  int dim = -1;
  for (const auto& [key, value] : j.items()) {
    std::size_t v = 0;
    try {
      v = std::stoul(key);
    } catch (const std::exception&) {
      throw PreconditionError("placement key '" + key + "' is not a vertex id");
    }
    if (v >= pts.size()) throw PreconditionError("placement vertex ids must be 0..n-1");
    Vector pt;
    for (const auto& c : value) pt.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : from_double(c.get<double>()));
    if (dim < 0) dim = static_cast<int>(pt.size());
    pts[v] = std::move(pt);
  }
  return Placement(dim < 0 ? 0 : dim, std::move(pts));
}

Json to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) {
      if (m.exact) {
        row.push_back(to_string((*m.exact)[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]));
      } else {
        row.push_back(m.approx(i, c));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Screens compute_screens(const Graph& g, SpaceKind kind) {
  Screens s;
  s.counts = necessary_counts(g, kind);
  s.edge_connectivity = edge_connectivity(g);
  s.connectivity_sufficient = connectivity_sufficient(g, kind);
  return s;
}

Json to_json(const Screens& s) {
  Json j;
  j["rigid_edge_count"] = s.counts.rigid_count;
  j["minimal_count_rule"] = s.counts.minimal_rule;
  j["minimal_count"] = s.counts.minimal_count;
  j["edge_connectivity"] = s.edge_connectivity;
  j["connectivity_sufficient"] = s.connectivity_sufficient;
  return j;
}

Json report_json(const Graph& g, const RigidityReport& r, std::optional<Screens> screens, std::uint64_t seed) {
  Json j;
  j["graph6"] = emit_graph6(g);
  j["space"] = r.space;
  j["independent"] = r.independent;
  j["rigid"] = r.rigid;
  j["minimally_rigid"] = r.minimally_rigid;
  j["method"] = to_string(r.method);
  j["rank"] = r.rank;
  j["rank_target"] = r.rank_target;
  Json cert = Json::object();
  if (r.decomposition) cert["decomposition"] = to_json(*r.decomposition);
  if (!r.spanning_trees.empty()) cert["spanning_trees"] = r.spanning_trees;
  if (r.placement) cert["placement"] = to_json(*r.placement);
  j["certificate"] = std::move(cert);
  j["screens"] = screens ? to_json(*screens) : Json::object();
  if (r.small_instance) j["small_instance"] = true;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["conflicts"] = r.conflicts;
  j["seed"] = seed;
  return j;
}

}  // namespace cylrig
