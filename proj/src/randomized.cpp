#include "cylrig/error.hpp"
#include "cylrig/rigidity_linear.hpp"

namespace cylrig {

Placement random_placement(const Graph& g, const Space& space, std::mt19937_64& rng) {
  const int d = space.dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vector> pts(static_cast<std::size_t>(g.num_vertices()));
    for (auto& pt : pts)
      for (int k = 0; k < d; ++k) pt.push_back(random_dyadic(rng));
    Placement p(d, std::move(pts));
    if (is_well_positioned(g, p, space)) return p;
  }
  throw PreconditionError("could not sample a well-positioned placement in " + space.str());
}

RandomizedResult randomized_independence(const Graph& g, const Space& cylinder, std::uint64_t seed, int retries,
                                         double tau) {
  if (cylinder.kind() != Space::Kind::Cylinder)
    throw PreconditionError("randomized_independence needs a cylindrical space, got " + cylinder.str());
  const Space& inner = cylinder.inner();
  const bool generic_inner = inner.is_plane() || (inner.kind() == Space::Kind::Cone && inner.inner().is_plane());
  if (!generic_inner) throw PreconditionError("randomized_independence: inner space " + inner.str() + " is not supported");
  if (retries < 0) throw PreconditionError("retries must be non-negative");

  RandomizedResult out;
  if (g.num_edges() == 0) {
    out.independent = true;
    out.exact = true;
    return out;
  }
  const Orientation orient = default_orientation(g);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), std::uint32_t{0x63796c72}};
    std::mt19937_64 rng(seq);
    Placement p = random_placement(g, inner, rng);
    std::vector<Rational> b;
    for (EdgeId e = 0; e < g.num_edges(); ++e) b.push_back(random_nonzero_dyadic(rng));
    RMatrix m = hstack(rigidity_matrix(g, p, inner), b_matrix(g, orient, b));
    const int r = rank(m, tau);
    out.attempts = attempt + 1;
    out.exact = m.is_exact();
    out.rank = std::max(out.rank, r);
    if (r == g.num_edges()) {
      out.independent = true;
      return out;
    }
  }
  return out;
}

}  // namespace cylrig
