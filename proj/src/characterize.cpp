#include "cylrig/characterize.hpp"

#include <algorithm>
#include <functional>

#include "cylrig/error.hpp"
#include "cylrig/matroids.hpp"

namespace cylrig {

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::CylEuclid: return "cyl-euclid";
    case SpaceKind::CylGeneric: return "cyl-lq";
    case SpaceKind::ConeEuclid: return "cone-euclid";
    case SpaceKind::Cyl4: return "cyl4";
  }
  return {};
}

SpaceKind parse_space_kind(std::string_view name) {
  if (name == "cyl-euclid") return SpaceKind::CylEuclid;
  if (name == "cyl-lq") return SpaceKind::CylGeneric;
  if (name == "cone-euclid") return SpaceKind::ConeEuclid;
  if (name == "cyl4") return SpaceKind::Cyl4;
  throw PreconditionError("unknown space kind '" + std::string(name) + "'");
}

Space space_for(SpaceKind k, const Rational& q) {
  const Space r2 = Space::euclidean_plane();
  switch (k) {
    case SpaceKind::CylEuclid: return Space::cylinder(r2);
    case SpaceKind::CylGeneric: {
      Space x = Space::lq_plane(q);
      if (x.kind() == Space::Kind::EuclideanPlane) throw PreconditionError("cyl-lq needs q != 2");
      return Space::cylinder(x);
    }
    case SpaceKind::ConeEuclid: return Space::cone(r2);
    case SpaceKind::Cyl4: return Space::cylinder(Space::cone(r2));
  }
  return r2;
}

std::optional<SpaceKind> kind_of(const Space& s) {
  const Space r2 = Space::euclidean_plane();
  if (s == Space::cylinder(r2)) return SpaceKind::CylEuclid;
  if (s == Space::cone(r2)) return SpaceKind::ConeEuclid;
  if (s == Space::cylinder(Space::cone(r2))) return SpaceKind::Cyl4;
  if (s.kind() == Space::Kind::Cylinder && s.inner().kind() == Space::Kind::LqPlane) return SpaceKind::CylGeneric;
  return std::nullopt;
}

int rank_target(SpaceKind k, int n) {
  if (n <= 1) return 0;
  switch (k) {
    case SpaceKind::CylEuclid:
    case SpaceKind::ConeEuclid: return 3 * n - 4;
    case SpaceKind::CylGeneric: return 3 * n - 3;
    case SpaceKind::Cyl4: return 4 * n - 5;
  }
  return 0;
}

namespace {

constexpr CountParams k23{2, 3};
constexpr CountParams k22{2, 2};
constexpr CountParams k33{3, 3};
constexpr CountParams k34{3, 4};

void agree(RigidityReport& rep, bool a, bool b, const std::string& what) {
  if (a != b) rep.conflicts.push_back(what);
}

// Space with a (2,3) count part and `forests` graphic parts.
void classify_count_plus_forests(const Graph& g, int forests, int target, RigidityReport& rep) {
  Decomposition d = max_count_plus_forests(g, k23, forests);
  rep.rank = d.covered();
  rep.independent = d.rest.empty();
  rep.rigid = rep.rank == target;
  auto exact = decompose_h_plus_trees(g, k23, forests);
  rep.minimally_rigid = exact.has_value();
  agree(rep, rep.minimally_rigid, rep.independent && rep.rigid,
        "tight decomposition search disagrees with the union rank");
  if (exact) {
    rep.decomposition = std::move(*exact);
  } else {
    extend_forest_to_tree(g, d);
    rep.decomposition = std::move(d);
  }
}

}  // namespace

RigidityReport classify(const Graph& g, SpaceKind kind) {
  RigidityReport rep;
  rep.space = space_for(kind).str();
  rep.method = Method::Combinatorial;
  const int n = g.num_vertices();
  rep.rank_target = rank_target(kind, n);
  if (n <= 1) {
    rep.independent = rep.rigid = rep.minimally_rigid = true;
    rep.small_instance = true;
    rep.notes.push_back("at most one vertex");
    return rep;
  }
  switch (kind) {
    case SpaceKind::CylEuclid:
    case SpaceKind::ConeEuclid:
      classify_count_plus_forests(g, 1, rep.rank_target, rep);
      rep.notes.push_back("(2,3)-sparse + forest union");
      if (kind == SpaceKind::ConeEuclid) rep.notes.push_back("same verdicts as linf(l2(2))");
      break;
    case SpaceKind::Cyl4:
      classify_count_plus_forests(g, 2, rep.rank_target, rep);
      rep.notes.push_back("(2,3)-sparse + two forests union");
      rep.notes.push_back(
          "independence: l1(l2(2)) is generic with (2,3)-sparse independent sets, product rule adds a forest");
      break;
    case SpaceKind::CylGeneric: {
      const bool sparse = pebble_sparse(g, k33);
      const int rank33 = static_cast<int>(count_matroid_basis(g, k33).size());
      Decomposition d = max_count_plus_forests(g, k22, 1);
      rep.rank = rank33;
      rep.independent = sparse;
      rep.rigid = rank33 == rep.rank_target;
      rep.minimally_rigid = pebble_tight(g, k33);
      agree(rep, sparse, d.rest.empty(), "(3,3)-sparsity disagrees with the (2,2) + forest union");
      agree(rep, rep.rigid, d.covered() == rep.rank_target, "(3,3) rank disagrees with the (2,2) + forest union rank");
      auto trees = nash_williams(g, 3);
      agree(rep, rep.minimally_rigid, trees.has_value(), "(3,3)-tightness disagrees with the tree packing");
      if (trees) rep.spanning_trees = std::move(*trees);
      extend_forest_to_tree(g, d);
      rep.decomposition = std::move(d);
      rep.notes.push_back("(3,3)-count matroid; (2,2)-sparse + forest union");
      break;
    }
  }
  return rep;
}

namespace {

// Calls f on every k-subset of 0..n-1 until it returns false.
bool all_subsets(int n, int k, const std::function<bool(const std::vector<VertexId>&)>& f) {
  std::vector<VertexId> s(static_cast<std::size_t>(k));
  std::function<bool(int, int)> rec = [&](int start, int depth) {
    if (depth == k) return f(s);
    for (int v = start; v <= n - (k - depth); ++v) {
      s[static_cast<std::size_t>(depth)] = v;
      if (!rec(v + 1, depth + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

bool cascade(const Graph& g, int top, int deletions) {
  for (int k = 0; k <= deletions; ++k) {
    const int need = top - 2 * k;
    bool ok = all_subsets(g.num_vertices(), k, [&](const std::vector<VertexId>& s) {
      return edge_connectivity(g.remove_vertices(s)) >= need;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool connectivity_sufficient(const Graph& g, SpaceKind kind) {
  switch (kind) {
    case SpaceKind::CylEuclid:
    case SpaceKind::ConeEuclid:
      return g.num_vertices() >= 5 && cascade(g, 8, 3);
    case SpaceKind::CylGeneric:
      return edge_connectivity(g) >= 6;
    case SpaceKind::Cyl4:
      return g.num_vertices() >= 6 && cascade(g, 10, 4);
  }
  return false;
}

NecessaryScreens necessary_counts(const Graph& g, SpaceKind kind) {
  NecessaryScreens s;
  const int n = g.num_vertices();
  s.rigid_count = n <= 1 || g.num_edges() >= 2 * (n - 1);
  switch (kind) {
    case SpaceKind::CylEuclid:
    case SpaceKind::ConeEuclid:
      s.minimal_rule = "(3,4)-tight";
      s.minimal_count = n <= 1 ? g.num_edges() == 0 : pebble_tight(g, k34);
      break;
    case SpaceKind::CylGeneric:
      s.minimal_rule = "(3,3)-tight";
      s.minimal_count = n <= 1 ? g.num_edges() == 0 : pebble_tight(g, k33);
      break;
    case SpaceKind::Cyl4:
      s.minimal_rule = "|E| = 4|V|-5";
      s.minimal_count = g.num_edges() == rank_target(kind, n);
      break;
  }
  return s;
}

RandomizedResult numeric_cross_check(const Graph& g, SpaceKind kind, const Space& space, RigidityReport& report,
                                     std::uint64_t seed, int retries, double tau) {
  RandomizedResult res;
  bool rigid = false;
  const int n = g.num_vertices();
  if (kind == SpaceKind::ConeEuclid) {
    for (int attempt = 0; attempt <= retries; ++attempt) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(attempt), std::uint32_t{0x636f6e65}};
      std::mt19937_64 rng(seq);
      Placement p = random_placement(g, space, rng);
      RigidityReport r = infinitesimal_rigidity(g, p, space, tau);
      res.attempts = attempt + 1;
      res.exact = r.method == Method::ExactRank;
      if (r.rank >= res.rank) {
        res.rank = r.rank;
        rigid = r.rigid;
      }
      res.independent = res.rank == g.num_edges();
      if (res.rank >= std::min(g.num_edges(), report.rank_target)) break;
    }
  } else {
    res = randomized_independence(g, space, seed, retries, tau);
    // rank [R B] is the rank of the union matroid.
    rigid = n <= 1 || res.rank == rank_target(kind, n);
  }
  const std::string method = to_string(res.exact ? Method::RandomizedExact : Method::RandomizedFloat);
  if (res.independent != report.independent)
    report.conflicts.push_back(method + " independence (rank " + std::to_string(res.rank) + ") disagrees with " +
                               to_string(report.method));
  if (n > 1 && rigid != report.rigid)
    report.conflicts.push_back(method + " rigidity (rank " + std::to_string(res.rank) + ") disagrees with " +
                               to_string(report.method));
  return res;
}

}  // namespace cylrig
