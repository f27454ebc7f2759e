#include "cylrig/error.hpp"
#include "cylrig/rigidity_linear.hpp"

namespace cylrig {

RigidityReport infinitesimal_rigidity(const Graph& g, const Placement& p, const Space& space, double tau) {
  RMatrix r = rigidity_matrix(g, p, space);
  RMatrix t = trivial_flexes(p, space);
  const int n = g.num_vertices();
  const int columns = space.dim() * n;
  const int trivial = rank(t);

  RigidityReport rep;
  rep.space = space.str();
  rep.rank = rank(r, tau);
  rep.rank_target = columns - trivial;
  rep.method = r.is_exact() ? Method::ExactRank : Method::FloatRank;
  rep.small_instance = n < space.dim();
  rep.independent = rep.rank == g.num_edges();
  // Trivial flexes always lie in the kernel, so equal dimensions mean the
  // kernel is exactly the trivial part.
  rep.rigid = columns - rep.rank == trivial;
  rep.minimally_rigid = rep.rigid && rep.independent;
  if (rep.small_instance) {
    rep.notes.push_back("small instance: rigidity decided against the evaluated trivial flexes");
  } else if (trivial != space.trivial_flex_dim()) {
    rep.notes.push_back("trivial flexes span " + std::to_string(trivial) + " dimensions at this placement, expected " +
                        std::to_string(space.trivial_flex_dim()));
  }
  rep.placement = p;
  return rep;
}

ProjectedCheck projected_rank_check(const Graph& g, const Placement& p, const Space& cylinder, double tau) {
  if (cylinder.kind() != Space::Kind::Cylinder) throw PreconditionError("projected_rank_check needs a cylindrical space");
  if (auto bad = first_non_smooth_edge(g, p, cylinder))
    throw NotWellPositionedError("framework is not well-positioned: " + bad->second, bad->first);
  ProjectedCheck out;
  EdgeColouring col = monochrome_labelling(g, p, cylinder);
  out.blue = col.blue();
  out.green = col.green();

  Graph blue = g.edge_subgraph(out.blue);
  RigidityReport inner = infinitesimal_rigidity(blue, p.project_inner(), cylinder.inner(), tau);
  out.blue_independent = inner.independent;
  out.blue_rigid = inner.rigid;

  Graph green = g.edge_subgraph(out.green);
  out.green_forest = is_forest(g, out.green);
  out.green_connected = g.num_vertices() <= 1 || is_connected(green);

  RigidityReport full = infinitesimal_rigidity(g, p, cylinder, tau);
  out.full_independent = full.independent;
  out.full_rigid = full.rigid;
  out.matches = out.full_independent == (out.blue_independent && out.green_forest) &&
                out.full_rigid == (out.blue_rigid && out.green_connected);
  return out;
}

}  // namespace cylrig
