#include "cylrig/placement_synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cylrig/error.hpp"

namespace cylrig {

namespace {

Vector sub(const Vector& a, const Vector& b) {
  Vector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Inner-plane geometry: distances as doubles, strict comparisons through
// compare_norm, and points on spheres.
class Plane {
 public:
  explicit Plane(const Space& s) : space_(s), exact_(s.kind() == Space::Kind::EuclideanPlane) {}

  bool exact() const { return exact_; }
  const Space& space() const { return space_; }

  double dist(const Vector& a, const Vector& b) const { return norm(space_, sub(a, b)).approx; }
  /// Sign of ||a - b|| - c.
  int cmp(const Vector& a, const Vector& b, const Rational& c) const { return compare_norm(space_, sub(a, b), c); }

  /// A point of S_radius[centre] in direction theta.
  Vector sphere_point(const Vector& centre, const Rational& radius, double theta) const {
    if (exact_) {
      bool flip = std::cos(theta) < 0;
      double half = (flip ? theta - std::numbers::pi : theta) / 2;
      Rational t(static_cast<long>(std::lround(std::tan(half) * 4096.0)), 4096L);
      t.canonicalize();
      Rational den = 1 + t * t;
      Rational cx = (1 - t * t) / den;
      Rational cy = 2 * t / den;
      if (flip) {
        cx = -cx;
        cy = -cy;
      }
      return {centre[0] + radius * cx, centre[1] + radius * cy};
    }
    const double q = space_.q().get_d();
    double c = std::cos(theta), s = std::sin(theta);
    double n = std::pow(std::pow(std::fabs(c), q) + std::pow(std::fabs(s), q), 1.0 / q);
    double rr = radius.get_d();
    return {centre[0] + from_double(rr * c / n), centre[1] + from_double(rr * s / n)};
  }

 private:
  const Space& space_;
  bool exact_;
};

double angle_of(const Vector& from, const Vector& to) {
  return std::atan2(Rational(to[1] - from[1]).get_d(), Rational(to[0] - from[0]).get_d());
}

// Builds q on the vertices of one tree, following the level-by-level
// construction; returns the level data with s, r, epsilon and h filled in.
LevelData build_tree(const Plane& plane, const std::vector<std::vector<VertexId>>& adj, VertexId root,
                     std::vector<Vector>& q) {
  const std::size_t n = adj.size();
  const double guard = plane.exact() ? 1.0 : 0.5;
  LevelData ld;
  ld.root = root;
  ld.parent.assign(n, -1);
  std::vector<int> level(n, -1);
  level[static_cast<std::size_t>(root)] = 0;
  ld.levels.push_back({root});
  while (true) {
    std::vector<VertexId> next;
    for (VertexId v : ld.levels.back())
      for (VertexId w : adj[static_cast<std::size_t>(v)])
        if (level[static_cast<std::size_t>(w)] < 0) {
          level[static_cast<std::size_t>(w)] = static_cast<int>(ld.levels.size());
          ld.parent[static_cast<std::size_t>(w)] = v;
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    ld.levels.push_back(std::move(next));
  }
  const int depth = static_cast<int>(ld.levels.size()) - 1;
  auto at = [&](VertexId v) -> Vector& { return q[static_cast<std::size_t>(v)]; };
  auto par = [&](VertexId v) { return ld.parent[static_cast<std::size_t>(v)]; };

  at(root) = {Rational(0), Rational(0)};
  ld.s.push_back(Rational(1));
  for (int k = 1; k <= depth; ++k) {
    const Rational& radius = ld.s[static_cast<std::size_t>(k - 1)];
    // Place the children of each vertex of level k-1.
    for (VertexId u1 : ld.levels[static_cast<std::size_t>(k - 1)]) {
      std::vector<VertexId> kids;
      for (VertexId u : ld.levels[static_cast<std::size_t>(k)])
        if (par(u) == u1) kids.push_back(u);
      const int m = static_cast<int>(kids.size());
      for (int j = 0; j < m; ++j) {
        VertexId u = kids[static_cast<std::size_t>(j)];
        double theta;
        if (k == 1) {
          theta = 0.3 + 2 * std::numbers::pi * j / m;
        } else {
          double away = angle_of(at(par(u1)), at(u1));
          theta = away + ((j + 0.5) / m - 0.5) * (2 * std::numbers::pi / 3);
        }
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
          double th = theta + (attempt % 2 ? 1 : -1) * 0.01 * ((attempt + 1) / 2);
          Vector cand = plane.sphere_point(at(u1), radius, th);
          bool ok = true;
          if (k >= 2) ok = plane.cmp(cand, at(par(u1)), ld.s[static_cast<std::size_t>(k - 2)]) > 0;
          for (int i = 0; i < j && ok; ++i) ok = cand != at(kids[static_cast<std::size_t>(i)]);
          if (ok) {
            at(u) = std::move(cand);
            placed = true;
          }
        }
        if (!placed) throw Error("key lemma: no admissible sphere point for vertex " + std::to_string(u));
      }
    }

    // s_k below half the same-level gaps (levels 0 and 1 together for k = 1),
    // below the margins ||q_u - q_v|| - s_i, and below s_{k-1} / 2.
    std::vector<VertexId> same = ld.levels[static_cast<std::size_t>(k)];
    if (k == 1) same.push_back(root);
    double bound = radius.get_d() / 2;
    for (std::size_t a = 0; a < same.size(); ++a)
      for (std::size_t b = a + 1; b < same.size(); ++b) bound = std::min(bound, plane.dist(at(same[a]), at(same[b])) / 2);
    for (VertexId u : ld.levels[static_cast<std::size_t>(k)])
      for (int i = 0; i < k; ++i)
        for (VertexId v : ld.levels[static_cast<std::size_t>(i)])
          if (v != par(u))
            bound = std::min(bound, plane.dist(at(u), at(v)) - ld.s[static_cast<std::size_t>(i)].get_d());
    if (!(bound > 0)) throw Error("key lemma: level " + std::to_string(k) + " has no room for a radius");
    Rational sk = rational_below(bound * guard);
    auto valid = [&](const Rational& s) {
      if (!(2 * s < radius)) return false;
      for (std::size_t a = 0; a < same.size(); ++a)
        for (std::size_t b = a + 1; b < same.size(); ++b)
          if (plane.cmp(at(same[a]), at(same[b]), 2 * s) <= 0) return false;
      for (VertexId u : ld.levels[static_cast<std::size_t>(k)])
        for (int i = 0; i < k; ++i)
          for (VertexId v : ld.levels[static_cast<std::size_t>(i)])
            if (v != par(u) && plane.cmp(at(u), at(v), s + ld.s[static_cast<std::size_t>(i)]) <= 0) return false;
      return true;
    };
    int halvings = 0;
    while (!valid(sk)) {
      if (++halvings > 60) throw Error("key lemma: could not certify radius at level " + std::to_string(k));
      sk /= 2;
    }
    ld.s.push_back(sk);
  }

  // epsilon below 2^i (||q_v - q_w|| - s_i) over non-adjacent pairs v in V_i,
  // w in V_j, i <= j.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<int> lv;
  for (int i = 0; i <= depth; ++i)
    for (VertexId v : ld.levels[static_cast<std::size_t>(i)])
      for (int j = i; j <= depth; ++j)
        for (VertexId w : ld.levels[static_cast<std::size_t>(j)]) {
          if (w == v || (i == j && w < v)) continue;
          if (par(w) == v || par(v) == w) continue;
          pairs.emplace_back(v, w);
          lv.push_back(i);
        }
  double eps_bound = 1.0;
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    int i = lv[t];
    eps_bound = std::min(eps_bound, std::ldexp(plane.dist(at(pairs[t].first), at(pairs[t].second)) -
                                                   ld.s[static_cast<std::size_t>(i)].get_d(),
                                               i));
  }
  if (!(eps_bound > 0)) throw Error("key lemma: no admissible epsilon");
  Rational eps = rational_below(eps_bound * guard);
  auto r_of = [&](const Rational& e, int i) {
    Rational p2 = 1;
    mpz_mul_2exp(p2.get_num_mpz_t(), p2.get_num_mpz_t(), static_cast<mp_bitcnt_t>(i));
    return Rational(ld.s[static_cast<std::size_t>(i)] + e / p2);
  };
  auto eps_ok = [&](const Rational& e) {
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (plane.cmp(at(pairs[t].first), at(pairs[t].second), r_of(e, lv[t])) <= 0) return false;
    // Tree edges stay strictly inside r_i (a margin check for inexact planes).
    for (int k = 1; k <= depth; ++k)
      for (VertexId u : ld.levels[static_cast<std::size_t>(k)])
        if (plane.cmp(at(u), at(par(u)), r_of(e, k - 1)) >= 0) return false;
    return true;
  };
  int halvings = 0;
  while (!eps_ok(eps)) {
    if (++halvings > 60) throw Error("key lemma: could not certify epsilon");
    eps /= 2;
  }
  ld.epsilon = eps;
  for (int i = 0; i <= depth; ++i) ld.r.push_back(r_of(eps, i));
  ld.h.push_back(Rational(0));
  for (int k = 1; k <= depth; ++k) {
    Rational term = ld.r[static_cast<std::size_t>(k - 1)];
    ld.h.push_back(ld.h.back() + ((k - 1) % 2 ? Rational(-term) : term));
  }

  // The claim: ||q_v - q_w|| < |h_i - h_j| exactly for tree edges.
  for (int i = 0; i <= depth; ++i)
    for (VertexId v : ld.levels[static_cast<std::size_t>(i)])
      for (int j = i; j <= depth; ++j)
        for (VertexId w : ld.levels[static_cast<std::size_t>(j)]) {
          if (w == v) continue;
          Rational gap = abs(ld.h[static_cast<std::size_t>(i)] - ld.h[static_cast<std::size_t>(j)]);
          int c = plane.cmp(at(v), at(w), gap);
          bool adjacent = par(w) == v || par(v) == w;
          if (adjacent ? c >= 0 : c <= 0)
            throw Error("key lemma: height/distance claim fails for vertices " + std::to_string(v) + " and " +
                        std::to_string(w));
        }
  return ld;
}

}  // namespace

KeyLemmaResult key_lemma_construction(const Graph& g, const EdgeSet& forest, const Space& inner) {
  if (inner.dim() < 2) throw PreconditionError("key lemma placement needs an inner space of dimension at least 2");
  if (!inner.is_plane()) throw PreconditionError("key lemma placement supports planar inner spaces, got " + inner.str());
  if (!is_forest(g, forest)) throw PreconditionError("key lemma placement: the edge set is not a forest");

  const int n = g.num_vertices();
  Graph tree_graph = g.edge_subgraph(forest);
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (const auto& e : tree_graph.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  Plane plane(inner);
  KeyLemmaResult out;
  out.exact = plane.exact();
  out.component = component_labels(tree_graph);
  const int comps = n == 0 ? 0 : *std::max_element(out.component.begin(), out.component.end()) + 1;

  std::vector<Vector> q(static_cast<std::size_t>(n));
  std::vector<Rational> height(static_cast<std::size_t>(n));
  for (int c = 0; c < comps; ++c) {
    VertexId root = 0;
    while (out.component[static_cast<std::size_t>(root)] != c) ++root;
    LevelData ld = build_tree(plane, adj, root, q);
    for (std::size_t k = 0; k < ld.levels.size(); ++k)
      for (VertexId v : ld.levels[k]) height[static_cast<std::size_t>(v)] = ld.h[k];
    out.trees.push_back(std::move(ld));
  }

  // Separate the components: shift component i by i * x with ||x|| > R + S.
  Rational hmin = 0, hmax = 0, l1max = 0;
  for (int v = 0; v < n; ++v) {
    hmin = std::min(hmin, height[static_cast<std::size_t>(v)]);
    hmax = std::max(hmax, height[static_cast<std::size_t>(v)]);
    const Vector& p = q[static_cast<std::size_t>(v)];
    l1max = std::max(l1max, Rational(abs(p[0]) + abs(p[1])));
  }
  Rational big = (hmax - hmin) + 2 * l1max + 1;
  out.shift = {comps > 1 ? big : Rational(0), Rational(0)};

  std::vector<Vector> pts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int c = out.component[static_cast<std::size_t>(v)];
    const Vector& p = q[static_cast<std::size_t>(v)];
    pts[static_cast<std::size_t>(v)] = {p[0] + c * out.shift[0], p[1], height[static_cast<std::size_t>(v)]};
  }
  out.placement = Placement(3, std::move(pts));
  return out;
}

Placement key_lemma_placement(const Graph& g, const EdgeSet& forest, const Space& inner) {
  return key_lemma_construction(g, forest, inner).placement;
}

bool verify_colouring(const Graph& g, const Placement& p, const EdgeSet& forest, const Space& cylinder) {
  if (cylinder.kind() != Space::Kind::Cylinder || p.dim != cylinder.dim() || p.num_vertices() != g.num_vertices())
    return false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ConeRegion r = cone_region(cylinder, p.displacement(g.edge(e).u, g.edge(e).v));
    bool in_forest = std::binary_search(forest.begin(), forest.end(), e);
    if (r != (in_forest ? ConeRegion::Interior : ConeRegion::Complement)) return false;
  }
  return true;
}

double cone_margin(const Graph& g, const Placement& p, const Space& cylinder) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges()) {
    Vector d = p.displacement(e.u, e.v);
    double y = std::fabs(d.back().get_d());
    d.pop_back();
    best = std::min(best, std::fabs(norm(cylinder.inner(), d).approx - y));
  }
  return best;
}

Placement perturb_placement(const Graph& g, const Placement& p, const EdgeSet& forest, const Space& cylinder,
                            std::mt19937_64& rng) {
  if (!verify_colouring(g, p, forest, cylinder)) throw PreconditionError("perturb_placement: colouring does not match the forest");
  double margin = cone_margin(g, p, cylinder);
  if (!std::isfinite(margin)) margin = 1;
  // Coordinate jitter of at most margin/8 moves each displacement by less
  // than the margin in every supported plane norm.
  Rational scale = rational_below(margin / 4);
  for (int attempt = 0; attempt < 40; ++attempt) {
    Placement out = p;
    for (auto& pt : out.points)
      for (auto& c : pt) c += random_dyadic(rng) * scale;
    if (verify_colouring(g, out, forest, cylinder) && is_well_positioned(g, out, cylinder)) return out;
    scale /= 2;
  }
  throw Error("perturb_placement: could not keep the colouring");
}

CertifiedPlacement realise_decomposition(const Graph& g, const Decomposition& d, const Space& inner,
                                         std::uint64_t seed, int attempts) {
  if (d.trees.empty()) throw PreconditionError("realise_decomposition: no tree part");
  const EdgeSet& tree = d.trees[0];
  Space cyl = Space::cylinder(inner);
  Placement base = key_lemma_placement(g, tree, inner);
  std::mt19937_64 rng(seed);
  CertifiedPlacement best;
  for (int a = 1; a <= std::max(attempts, 1); ++a) {
    Placement p = perturb_placement(g, base, tree, cyl, rng);
    RigidityReport rep = infinitesimal_rigidity(g, p, cyl);
    if (a == 1 || rep.rank > best.report.rank) {
      best.placement = p;
      best.report = rep;
    }
    best.attempts = a;
    if (rep.rank >= d.covered()) break;
  }
  return best;
}

}  // namespace cylrig
