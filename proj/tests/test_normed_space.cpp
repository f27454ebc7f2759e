#include <doctest.h>

#include <cmath>

#include "cylrig/error.hpp"
#include "cylrig/normed_space.hpp"

using namespace cylrig;

namespace {

Vector vec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

// Reference norms straight from the definitions, in doubles.
double ref_norm(const Space& s, const std::vector<double>& v) {
  switch (s.kind()) {
    case Space::Kind::EuclideanPlane: return std::hypot(v[0], v[1]);
    case Space::Kind::LqPlane: {
      double q = to_double(s.q());
      return std::pow(std::pow(std::abs(v[0]), q) + std::pow(std::abs(v[1]), q), 1 / q);
    }
    default: {
      std::vector<double> x(v.begin(), v.end() - 1);
      double a = ref_norm(s.inner(), x);
      double y = std::abs(v.back());
      return s.kind() == Space::Kind::Cylinder ? std::max(a, y) : a + y;
    }
  }
}

// Gradient of ||z||^2 / 2 by central differences.
std::vector<double> ref_gradient(const Space& s, const std::vector<double>& z) {
  std::vector<double> g(z.size());
  const double h = 1e-6;
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto a = z, b = z;
    a[i] += h;
    b[i] -= h;
    double fa = ref_norm(s, a), fb = ref_norm(s, b);
    g[i] = (fa * fa - fb * fb) / (4 * h);
  }
  return g;
}

std::vector<Space> test_spaces() {
  Space e = Space::euclidean_plane();
  Space l3 = Space::lq_plane(3);
  Space l32 = Space::lq_plane(Rational(3, 2));
  return {e,
          l3,
          Space::cylinder(e),
          Space::cylinder(l32),
          Space::cone(e),
          Space::cone(l3),
          Space::cylinder(Space::cone(e)),
          Space::cylinder(Space::cylinder(e))};
}

}  // namespace

TEST_CASE("space construction and naming") {
  Space cyl = Space::cylinder(Space::euclidean_plane());
  CHECK(cyl.dim() == 3);
  CHECK(cyl.trivial_flex_dim() == 4);
  CHECK(cyl.has_rotation());
  CHECK(cyl.str() == "linf(l2(2))");
  CHECK(Space::euclidean_plane().trivial_flex_dim() == 3);
  Space lq = Space::lq_plane(Rational(3, 2));
  CHECK(lq.trivial_flex_dim() == 2);
  CHECK_FALSE(Space::cylinder(lq).has_rotation());
  CHECK(Space::lq_plane(2) == Space::euclidean_plane());
  CHECK_THROWS_AS(Space::lq_plane(1), PreconditionError);
  Space c4 = Space::cylinder(Space::cone(Space::euclidean_plane()));
  CHECK(c4.dim() == 4);
  CHECK(c4.trivial_flex_dim() == 5);
  for (const Space& s : test_spaces()) CHECK(parse_space(s.str()) == s);
  CHECK(parse_space(" linf( l2(2) ) ") == cyl);
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const char* text) {
    try {
      parse_space(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("linf(l2(2)") == 10);
  CHECK(offset_of("lx(2)") == 0);
  CHECK(offset_of("linf(l2(2)))") == 11);
  CHECK(offset_of("lq(2,1)") >= 0);
}

TEST_CASE("exact norms and comparisons") {
  Space e = Space::euclidean_plane();
  Space cyl = Space::cylinder(e);
  Space cone = Space::cone(e);
  CHECK(*norm(e, vec({"3", "4"})).exact == 5);
  CHECK_FALSE(norm(e, vec({"1", "1"})).exact.has_value());
  CHECK(norm(e, vec({"1", "1"})).approx == doctest::Approx(std::sqrt(2.0)));
  CHECK(*norm(cyl, vec({"3", "4", "-6"})).exact == 6);
  CHECK(*norm(cone, vec({"3", "4", "-6"})).exact == 11);
  CHECK(compare_norm(e, vec({"1", "1"}), Rational(1414, 1000)) == 1);
  CHECK(compare_norm(e, vec({"1", "1"}), Rational(1415, 1000)) == -1);
  CHECK(compare_norm(cone, vec({"1", "1", "1"}), Rational(2414, 1000)) == 1);
  CHECK(compare_norm(cyl, vec({"3", "4", "5"}), Rational(5)) == 0);
  CHECK_THROWS_AS(norm(cyl, vec({"1", "2"})), PreconditionError);
}

TEST_CASE("norms agree with the reference formula") {
  std::mt19937_64 rng(1);
  for (const Space& s : test_spaces())
    for (int t = 0; t < 100; ++t) {
      Vector v;
      for (int i = 0; i < s.dim(); ++i) v.push_back(random_dyadic(rng));
      CHECK(norm(s, v).approx == doctest::Approx(ref_norm(s, to_double(v))).epsilon(1e-12));
    }
}

TEST_CASE("cone regions") {
  Space cyl = Space::cylinder(Space::euclidean_plane());
  CHECK(cone_region(cyl, vec({"0", "-2", "-1/2"})) == ConeRegion::Complement);
  CHECK(cone_region(cyl, vec({"-1/2", "0", "-1"})) == ConeRegion::Interior);
  CHECK(cone_region(cyl, vec({"3", "4", "5"})) == ConeRegion::Boundary);
  CHECK(cone_region(cyl, vec({"0", "0", "0"})) == ConeRegion::Boundary);
  CHECK(to_string(ConeRegion::Interior) == "interior");
}

TEST_CASE("smoothness") {
  Space cyl = Space::cylinder(Space::euclidean_plane());
  CHECK(is_smooth(cyl, vec({"1", "0", "0"})));
  CHECK_FALSE(is_smooth(cyl, vec({"3", "4", "5"})));
  CHECK_FALSE(is_smooth(cyl, vec({"0", "0", "0"})));
  Space cone = Space::cone(Space::euclidean_plane());
  CHECK_FALSE(is_smooth(cone, vec({"1", "0", "0"})));
  CHECK(is_smooth(cone, vec({"1", "0", "2"})));
  CHECK(is_smooth(Space::lq_plane(3), vec({"1", "0"})));
  CHECK_FALSE(is_smooth(Space::lq_plane(3), vec({"0", "0"})));
  CHECK_THROWS_AS(support_row(cyl, vec({"3", "4", "5"})), SmoothnessError);
  CHECK(smoothness_failure(cyl, vec({"3", "4", "5"})).has_value());
}

TEST_CASE("support functionals are gradients of half the squared norm") {
  std::mt19937_64 rng(2);
  for (const Space& s : test_spaces()) {
    int checked = 0;
    for (int t = 0; t < 200 && checked < 60; ++t) {
      Vector z;
      for (int i = 0; i < s.dim(); ++i) z.push_back(random_dyadic(rng));
      if (!is_smooth(s, z)) continue;
      ++checked;
      SupportRow row = support_row(s, z);
      auto zd = to_double(z);
      auto grad = ref_gradient(s, zd);
      for (std::size_t i = 0; i < zd.size(); ++i) CHECK(row.approx[i] == doctest::Approx(grad[i]).epsilon(1e-5));
      double nz = ref_norm(s, zd);
      CHECK(row.apply(zd) == doctest::Approx(nz * nz).epsilon(1e-10));
      if (row.is_exact() && norm(s, z).exact) {
        Rational dot = 0;
        for (std::size_t i = 0; i < z.size(); ++i) dot += (*row.exact)[i] * z[i];
        CHECK(dot == *norm(s, z).exact * *norm(s, z).exact);
      }
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("cone rows are normalised support functionals") {
  Space cone = Space::cone(Space::euclidean_plane());
  Vector z = vec({"3", "4", "-2"});
  SupportRow phi = support_row(cone, z);
  SupportRow row = rigidity_row(cone, z);
  REQUIRE(row.is_exact());
  CHECK(*row.exact == vec({"3/5", "4/5", "-1"}));
  for (std::size_t i = 0; i < 3; ++i) CHECK(phi.approx[i] == doctest::Approx(7 * row.approx[i]));
}

TEST_CASE("placements and colourings") {
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  Placement p(3, {vec({"1", "-1", "1/2"}), vec({"1", "1", "1"}), vec({"3/2", "-1", "3/2"})});
  Space cyl = Space::cylinder(Space::euclidean_plane());
  CHECK(is_well_positioned(k3, p, cyl));
  EdgeColouring c = monochrome_labelling(k3, p, cyl);
  CHECK(c.blue() == EdgeSet{0, 1});
  CHECK(c.green() == EdgeSet{2});
  CHECK(p.project_inner().dim == 2);
  CHECK(p.heights() == std::vector<Rational>{Rational(1, 2), 1, Rational(3, 2)});
  Placement bad(3, {vec({"0", "0", "0"}), vec({"3", "4", "5"}), vec({"9", "9", "9"})});
  CHECK_FALSE(is_well_positioned(k3, bad, cyl));
  auto first = first_non_smooth_edge(k3, bad, cyl);
  REQUIRE(first.has_value());
  CHECK(first->first == 0);
  try {
    monochrome_labelling(k3, bad, cyl);
    FAIL("expected NotWellPositionedError");
  } catch (const NotWellPositionedError& e) {
    CHECK(e.edge() == 0);
  }
}
