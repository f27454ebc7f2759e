#include <cmath>
#include <sstream>

#include "cylrig/error.hpp"
#include "cylrig/rigidity_linear.hpp"

namespace cylrig {

namespace {

RMatrix make_exact(int rows, int cols, std::vector<Vector> data) {
  RMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.approx = Eigen::MatrixXd::Zero(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.approx(i, j) = data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
  m.exact = std::move(data);
  return m;
}

void check_edges_in(const Graph& g, const Orientation& orient) {
  if (orient.arcs.size() != static_cast<std::size_t>(g.num_edges()))
    throw PreconditionError("orientation does not cover every edge");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = orient.arcs[static_cast<std::size_t>(e)];
    const Edge& ed = g.edge(e);
    if (!((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u)))
      throw PreconditionError("orientation of edge " + std::to_string(e) + " does not match its endpoints");
  }
}

}  // namespace

std::string RMatrix::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) out << ',';
      if (exact) {
        out << to_string((*exact)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      } else {
        out << approx(i, j);
      }
    }
    out << '\n';
  }
  return out.str();
}

RMatrix hstack(const RMatrix& a, const RMatrix& b) {
  if (a.rows != b.rows) throw PreconditionError("hstack: row counts differ");
  RMatrix m;
  m.rows = a.rows;
  m.cols = a.cols + b.cols;
  m.approx.resize(m.rows, m.cols);
  if (m.rows > 0) m.approx << a.approx, b.approx;
  if (a.exact && b.exact) {
    std::vector<Vector> rows(static_cast<std::size_t>(a.rows));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] = (*a.exact)[i];
      rows[i].insert(rows[i].end(), (*b.exact)[i].begin(), (*b.exact)[i].end());
    }
    m.exact = std::move(rows);
  }
  return m;
}

int rank(const RMatrix& m, double tau) {
  if (m.exact) return exact_rank(*m.exact);
  return float_rank(m.approx, tau);
}

Orientation default_orientation(const Graph& g) {
  Orientation o;
  for (const auto& e : g.edges()) o.arcs.emplace_back(e.u, e.v);
  return o;
}

Orientation height_orientation(const Graph& g, const Placement& p) {
  Orientation o;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Rational& hu = p[ed.u].back();
    const Rational& hv = p[ed.v].back();
    if (hu == hv) throw PreconditionError("edge " + std::to_string(e) + " has endpoints at equal height");
    o.arcs.push_back(hu > hv ? std::pair{ed.u, ed.v} : std::pair{ed.v, ed.u});
  }
  return o;
}

RMatrix rigidity_matrix(const Graph& g, const Placement& p, const Space& space) {
  if (auto bad = first_non_smooth_edge(g, p, space))
    throw NotWellPositionedError("framework is not well-positioned: " + bad->second, bad->first);
  const int d = space.dim();
  const int rows = g.num_edges();
  const int cols = d * g.num_vertices();
  RMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.approx = Eigen::MatrixXd::Zero(rows, cols);
  std::vector<Vector> exact(static_cast<std::size_t>(rows), Vector(static_cast<std::size_t>(cols), Rational(0)));
  bool all_exact = true;
  for (EdgeId e = 0; e < rows; ++e) {
    const Edge& ed = g.edge(e);
    SupportRow r = rigidity_row(space, p.displacement(ed.u, ed.v));
    for (int k = 0; k < d; ++k) {
      m.approx(e, d * ed.u + k) = r.approx[static_cast<std::size_t>(k)];
      m.approx(e, d * ed.v + k) = -r.approx[static_cast<std::size_t>(k)];
    }
    if (r.exact && all_exact) {
      auto& row = exact[static_cast<std::size_t>(e)];
      for (int k = 0; k < d; ++k) {
        row[static_cast<std::size_t>(d * ed.u + k)] = (*r.exact)[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(d * ed.v + k)] = -(*r.exact)[static_cast<std::size_t>(k)];
      }
    } else {
      all_exact = false;
    }
  }
  if (all_exact) m.exact = std::move(exact);
  return m;
}

RMatrix b_matrix(const Graph& g, const Orientation& orient, const std::vector<Rational>& b) {
  check_edges_in(g, orient);
  if (b.size() != static_cast<std::size_t>(g.num_edges())) throw PreconditionError("b_matrix: one multiplier per edge");
  const int n = g.num_vertices();
  std::vector<Vector> rows(b.size(), Vector(static_cast<std::size_t>(n), Rational(0)));
  for (std::size_t e = 0; e < b.size(); ++e) {
    if (sgn(b[e]) == 0) throw PreconditionError("b_matrix: multipliers must be non-zero");
    auto [from, to] = orient.arcs[e];
    rows[e][static_cast<std::size_t>(from)] = b[e];
    rows[e][static_cast<std::size_t>(to)] = -b[e];
  }
  return make_exact(g.num_edges(), n, std::move(rows));
}

RMatrix b_matrix(const Graph& g, const Orientation& orient, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> b;
  for (EdgeId e = 0; e < g.num_edges(); ++e) b.push_back(random_nonzero_dyadic(rng));
  return b_matrix(g, orient, b);
}

RMatrix conical_m_matrix(const Graph& g, const Placement& q, const Orientation& orient, const Space& cone) {
  if (cone.kind() != Space::Kind::Cone) throw PreconditionError("conical_m_matrix needs a conical space");
  const Space& inner = cone.inner();
  if (q.dim != inner.dim() || q.num_vertices() != g.num_vertices())
    throw PreconditionError("conical_m_matrix: placement does not match the inner space");
  check_edges_in(g, orient);
  const int d = inner.dim();
  const int n = g.num_vertices();
  const int rows = g.num_edges();
  RMatrix m;
  m.rows = rows;
  m.cols = (d + 1) * n;
  m.approx = Eigen::MatrixXd::Zero(rows, m.cols);
  std::vector<Vector> exact(static_cast<std::size_t>(rows), Vector(static_cast<std::size_t>(m.cols), Rational(0)));
  bool all_exact = true;
  for (EdgeId e = 0; e < rows; ++e) {
    const Edge& ed = g.edge(e);
    Vector x = q.displacement(ed.u, ed.v);
    if (!is_smooth(inner, x))
      throw PreconditionError("conical_m_matrix: edge " + std::to_string(e) + " has coincident or non-smooth inner points");
    SupportRow r = support_row(inner, x);
    NormValue len = norm(inner, x);
    auto [from, to] = orient.arcs[static_cast<std::size_t>(e)];
    for (int k = 0; k < d; ++k) {
      m.approx(e, d * ed.u + k) = r.approx[static_cast<std::size_t>(k)];
      m.approx(e, d * ed.v + k) = -r.approx[static_cast<std::size_t>(k)];
    }
    m.approx(e, d * n + from) = len.approx;
    m.approx(e, d * n + to) = -len.approx;
    if (all_exact && r.exact && len.exact) {
      auto& row = exact[static_cast<std::size_t>(e)];
      for (int k = 0; k < d; ++k) {
        row[static_cast<std::size_t>(d * ed.u + k)] = (*r.exact)[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(d * ed.v + k)] = -(*r.exact)[static_cast<std::size_t>(k)];
      }
      row[static_cast<std::size_t>(d * n + from)] = *len.exact;
      row[static_cast<std::size_t>(d * n + to)] = -*len.exact;
    } else {
      all_exact = false;
    }
  }
  if (all_exact) m.exact = std::move(exact);
  return m;
}

RMatrix trivial_flexes(const Placement& p, const Space& space) {
  if (p.dim != space.dim()) throw PreconditionError("trivial_flexes: placement dimension does not match");
  const int d = space.dim();
  const int n = p.num_vertices();
  std::vector<Vector> rows;
  for (int k = 0; k < d; ++k) {
    Vector t(static_cast<std::size_t>(d * n), Rational(0));
    for (int v = 0; v < n; ++v) t[static_cast<std::size_t>(d * v + k)] = 1;
    rows.push_back(std::move(t));
  }
  if (space.has_rotation()) {
    Vector t(static_cast<std::size_t>(d * n), Rational(0));
    for (int v = 0; v < n; ++v) {
      t[static_cast<std::size_t>(d * v)] = -p[v][1];
      t[static_cast<std::size_t>(d * v + 1)] = p[v][0];
    }
    rows.push_back(std::move(t));
  }
  const int count = static_cast<int>(rows.size());
  return make_exact(count, d * n, std::move(rows));
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Combinatorial: return "combinatorial";
    case Method::ExactRank: return "exact-rank";
    case Method::FloatRank: return "float-rank";
    case Method::RandomizedExact: return "randomized-exact";
    case Method::RandomizedFloat: return "randomized-float";
  }
  return {};
}

}  // namespace cylrig
