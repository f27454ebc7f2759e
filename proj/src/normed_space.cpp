#include "cylrig/normed_space.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "cylrig/error.hpp"

namespace cylrig {

Space Space::euclidean_plane() { return Space(Kind::EuclideanPlane, 2); }

Space Space::lq_plane(const Rational& q) {
  if (q <= 1) throw PreconditionError("lq plane needs q > 1, got " + to_string(q));
  if (q == 2) return euclidean_plane();
  Space s(Kind::LqPlane, 2);
  s.q_ = q;
  return s;
}

Space Space::cylinder(const Space& inner) {
  Space s(Kind::Cylinder, inner.dim() + 1);
  s.inner_ = std::make_shared<const Space>(inner);
  return s;
}

Space Space::cone(const Space& inner) {
  Space s(Kind::Cone, inner.dim() + 1);
  s.inner_ = std::make_shared<const Space>(inner);
  return s;
}

const Space& Space::inner() const {
  if (!inner_) throw PreconditionError("space " + str() + " is not a product");
  return *inner_;
}

int Space::trivial_flex_dim() const {
  switch (kind_) {
    case Kind::EuclideanPlane: return 3;
    case Kind::LqPlane: return 2;
    default: return inner_->trivial_flex_dim() + 1;
  }
}

bool Space::has_rotation() const {
  if (kind_ == Kind::EuclideanPlane) return true;
  if (kind_ == Kind::LqPlane) return false;
  return inner_->has_rotation();
}

bool Space::exact_comparisons() const {
  if (kind_ == Kind::EuclideanPlane) return true;
  if (kind_ == Kind::LqPlane) return false;
  return inner_->exact_comparisons();
}

std::string Space::str() const {
  switch (kind_) {
    case Kind::EuclideanPlane: return "l2(2)";
    case Kind::LqPlane: return "lq(2," + to_string(q_) + ")";
    case Kind::Cylinder: return "linf(" + inner_->str() + ")";
    case Kind::Cone: return "l1(" + inner_->str() + ")";
  }
  return {};
}

bool operator==(const Space& a, const Space& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Space::Kind::LqPlane) return a.q_ == b.q_;
  if (a.is_plane()) return true;
  return *a.inner_ == *b.inner_;
}

namespace {

class SpaceParser {
 public:
  explicit SpaceParser(std::string_view text) : text_(text) {}

  Space parse() {
    Space s = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("norm expression '" + std::string(text_) + "': " + what, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                   text_[pos_] == '/' || text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_dim2() {
    std::size_t at = pos_;
    if (number() != "2") {
      pos_ = at;
      fail("only planes (dimension 2) are supported as base spaces");
    }
  }

  Space expr() {
    std::size_t at = pos_;
    std::string head = word();
    if (head == "l2") {
      expect('(');
      expect_dim2();
      expect(')');
      return Space::euclidean_plane();
    }
    if (head == "lq") {
      expect('(');
      expect_dim2();
      expect(',');
      std::size_t qat = pos_;
      Rational q;
      try {
        q = parse_rational(number());
      } catch (const ParseError&) {
        pos_ = qat;
        fail("bad exponent");
      }
      if (q <= 1) {
        pos_ = qat;
        fail("exponent must exceed 1");
      }
      expect(')');
      return Space::lq_plane(q);
    }
    if (head == "linf" || head == "l1") {
      expect('(');
      Space inner = expr();
      expect(')');
      return head == "linf" ? Space::cylinder(inner) : Space::cone(inner);
    }
    pos_ = at;
    fail("unknown norm '" + head + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_dim(const Space& space, const Vector& v) {
  if (static_cast<int>(v.size()) != space.dim())
    throw PreconditionError("vector of length " + std::to_string(v.size()) + " used with " + space.str() +
                            " of dimension " + std::to_string(space.dim()));
}

Vector head(const Vector& v) { return Vector(v.begin(), v.end() - 1); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

double lq_norm(double q, double a, double b) {
  return std::pow(std::pow(std::fabs(a), q) + std::pow(std::fabs(b), q), 1.0 / q);
}

int cmp(const Rational& a, const Rational& b) { return a < b ? -1 : (a > b ? 1 : 0); }

}  // namespace

Space parse_space(std::string_view text) { return SpaceParser(text).parse(); }

NormValue norm(const Space& space, const Vector& v) {
  check_dim(space, v);
  switch (space.kind()) {
    case Space::Kind::EuclideanPlane: {
      Rational sq = v[0] * v[0] + v[1] * v[1];
      return {std::sqrt(sq.get_d()), exact_sqrt(sq)};
    }
    case Space::Kind::LqPlane: {
      NormValue out{lq_norm(space.q().get_d(), v[0].get_d(), v[1].get_d()), std::nullopt};
      if (is_zero(v)) out.exact = Rational(0);
      return out;
    }
    case Space::Kind::Cylinder:
    case Space::Kind::Cone: {
      NormValue x = norm(space.inner(), head(v));
      Rational y = abs(v.back());
      NormValue out;
      if (space.kind() == Space::Kind::Cylinder) {
        out.approx = std::max(x.approx, y.get_d());
        if (x.exact) out.exact = std::max(*x.exact, y);
      } else {
        out.approx = x.approx + y.get_d();
        if (x.exact) out.exact = *x.exact + y;
      }
      return out;
    }
  }
  return {};
}

int compare_norm(const Space& space, const Vector& v, const Rational& c) {
  check_dim(space, v);
  switch (space.kind()) {
    case Space::Kind::EuclideanPlane:
      if (sgn(c) < 0) return 1;
      return cmp(v[0] * v[0] + v[1] * v[1], c * c);
    case Space::Kind::LqPlane: {
      if (is_zero(v)) return cmp(Rational(0), c);
      double d = lq_norm(space.q().get_d(), v[0].get_d(), v[1].get_d()) - c.get_d();
      if (std::fabs(d) <= kNormTolerance) return 0;
      return d < 0 ? -1 : 1;
    }
    case Space::Kind::Cylinder:
      return std::max(cmp(abs(v.back()), c), compare_norm(space.inner(), head(v), c));
    case Space::Kind::Cone:
      return compare_norm(space.inner(), head(v), c - abs(v.back()));
  }
  return 0;
}

std::string to_string(ConeRegion r) {
  switch (r) {
    case ConeRegion::Interior: return "interior";
    case ConeRegion::Boundary: return "boundary";
    case ConeRegion::Complement: return "complement";
  }
  return {};
}

ConeRegion cone_region(const Space& space, const Vector& v) {
  if (space.kind() != Space::Kind::Cylinder) throw PreconditionError("cone_region needs a cylindrical space");
  check_dim(space, v);
  if (is_zero(v)) return ConeRegion::Boundary;
  int r = compare_norm(space.inner(), head(v), abs(v.back()));
  if (r < 0) return ConeRegion::Interior;
  if (r > 0) return ConeRegion::Complement;
  return ConeRegion::Boundary;
}

std::optional<std::string> smoothness_failure(const Space& space, const Vector& z) {
  check_dim(space, z);
  if (is_zero(z)) return "zero vector";
  switch (space.kind()) {
    case Space::Kind::EuclideanPlane:
    case Space::Kind::LqPlane:
      return std::nullopt;
    case Space::Kind::Cylinder: {
      ConeRegion r = cone_region(space, z);
      if (r == ConeRegion::Boundary) return "point lies on the boundary of the double cone";
      if (r == ConeRegion::Interior) return std::nullopt;
      if (auto inner = smoothness_failure(space.inner(), head(z))) return "inner point is not smooth: " + *inner;
      return std::nullopt;
    }
    case Space::Kind::Cone: {
      if (sgn(z.back()) == 0) return "last coordinate is zero";
      if (auto inner = smoothness_failure(space.inner(), head(z))) return "inner point is not smooth: " + *inner;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_smooth(const Space& space, const Vector& z) { return !smoothness_failure(space, z).has_value(); }

double SupportRow::apply(const std::vector<double>& u) const {
  if (u.size() != approx.size()) throw PreconditionError("functional applied to a vector of the wrong length");
  double s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += approx[i] * u[i];
  return s;
}

namespace {

SupportRow exact_row(Vector v) {
  SupportRow r;
  r.approx = to_double(v);
  r.exact = std::move(v);
  return r;
}

SupportRow float_row(std::vector<double> v) {
  SupportRow r;
  r.approx = std::move(v);
  return r;
}

SupportRow append(SupportRow r, const Rational& last) {
  r.approx.push_back(last.get_d());
  if (r.exact) r.exact->push_back(last);
  return r;
}

// Cone rows: scale * phi_x joined with a last entry; exact when ||x|| is.
SupportRow cone_row(const Space& space, const Vector& z, bool normalized) {
  Vector x = head(z);
  SupportRow phi_x = support_row(space.inner(), x);
  NormValue nx = norm(space.inner(), x);
  const int sy = sgn(z.back());
  SupportRow out;
  if (nx.exact && phi_x.exact) {
    Rational nz = *nx.exact + abs(z.back());
    Rational scale = normalized ? Rational(1 / *nx.exact) : Rational(nz / *nx.exact);
    Vector row;
    for (const auto& c : *phi_x.exact) row.push_back(scale * c);
    row.push_back(normalized ? Rational(sy) : Rational(sy * nz));
    return exact_row(std::move(row));
  }
  double nz = nx.approx + std::fabs(z.back().get_d());
  double scale = normalized ? 1.0 / nx.approx : nz / nx.approx;
  std::vector<double> row;
  for (double c : phi_x.approx) row.push_back(scale * c);
  row.push_back(normalized ? sy : sy * nz);
  return float_row(std::move(row));
}

SupportRow row_impl(const Space& space, const Vector& z, bool rigidity_form) {
  if (auto why = smoothness_failure(space, z)) throw SmoothnessError("support functional of non-smooth point: " + *why);
  switch (space.kind()) {
    case Space::Kind::EuclideanPlane:
      return exact_row(z);
    case Space::Kind::LqPlane: {
      const double q = space.q().get_d();
      const double nx = lq_norm(q, z[0].get_d(), z[1].get_d());
      std::vector<double> row;
      for (int i = 0; i < 2; ++i) {
        double x = z[static_cast<std::size_t>(i)].get_d();
        double s = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
        row.push_back(s * std::pow(std::fabs(x), q - 1) / std::pow(nx, q - 2));
      }
      return float_row(std::move(row));
    }
    case Space::Kind::Cylinder: {
      if (cone_region(space, z) == ConeRegion::Interior) {
        Vector row(z.size(), Rational(0));
        row.back() = z.back();
        return exact_row(std::move(row));
      }
      return append(row_impl(space.inner(), head(z), rigidity_form), Rational(0));
    }
    case Space::Kind::Cone:
      return cone_row(space, z, rigidity_form);
  }
  return {};
}

}  // namespace

SupportRow support_row(const Space& space, const Vector& z) { return row_impl(space, z, false); }

SupportRow rigidity_row(const Space& space, const Vector& z) { return row_impl(space, z, true); }

Placement::Placement(int d, std::vector<Vector> pts) : dim(d), points(std::move(pts)) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim) throw PreconditionError("placement point has the wrong dimension");
}

Vector Placement::displacement(VertexId v, VertexId w) const {
  const Vector& a = (*this)[v];
  const Vector& b = (*this)[w];
  Vector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Placement Placement::project_inner() const {
  if (dim < 2) throw PreconditionError("cannot project a placement of dimension < 2");
  std::vector<Vector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(head(p));
  return Placement(dim - 1, std::move(pts));
}

std::vector<Rational> Placement::heights() const {
  std::vector<Rational> h;
  h.reserve(points.size());
  for (const auto& p : points) h.push_back(p.back());
  return h;
}

Placement Placement::translated(const Vector& t) const {
  if (static_cast<int>(t.size()) != dim) throw PreconditionError("translation of the wrong dimension");
  Placement out = *this;
  for (auto& p : out.points)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += t[i];
  return out;
}

EdgeSet EdgeColouring::blue() const {
  EdgeSet s;
  for (std::size_t e = 0; e < colour.size(); ++e)
    if (colour[e] == EdgeColour::Blue) s.push_back(static_cast<EdgeId>(e));
  return s;
}

EdgeSet EdgeColouring::green() const {
  EdgeSet s;
  for (std::size_t e = 0; e < colour.size(); ++e)
    if (colour[e] == EdgeColour::Green) s.push_back(static_cast<EdgeId>(e));
  return s;
}

namespace {

void check_placement(const Graph& g, const Placement& p, const Space& space) {
  if (p.num_vertices() != g.num_vertices())
    throw PreconditionError("placement has " + std::to_string(p.num_vertices()) + " points for " +
                            std::to_string(g.num_vertices()) + " vertices");
  if (p.dim != space.dim()) throw PreconditionError("placement dimension does not match " + space.str());
}

std::string edge_name(const Graph& g, EdgeId e) {
  return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

}  // namespace

EdgeColouring monochrome_labelling(const Graph& g, const Placement& p, const Space& space) {
  check_placement(g, p, space);
  EdgeColouring out;
  out.colour.reserve(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Vector d = p.displacement(g.edge(e).u, g.edge(e).v);
    switch (cone_region(space, d)) {
      case ConeRegion::Interior: out.colour.push_back(EdgeColour::Green); break;
      case ConeRegion::Complement: out.colour.push_back(EdgeColour::Blue); break;
      case ConeRegion::Boundary:
        throw NotWellPositionedError("edge " + edge_name(g, e) + " has a displacement on the boundary of the cone", e);
    }
  }
  return out;
}

std::optional<std::pair<EdgeId, std::string>> first_non_smooth_edge(const Graph& g, const Placement& p,
                                                                     const Space& space) {
  check_placement(g, p, space);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (auto why = smoothness_failure(space, p.displacement(g.edge(e).u, g.edge(e).v)))
      return std::pair{e, "edge " + edge_name(g, e) + ": " + *why};
  }
  return std::nullopt;
}

bool is_well_positioned(const Graph& g, const Placement& p, const Space& space) {
  return !first_non_smooth_edge(g, p, space).has_value();
}

}  // namespace cylrig
