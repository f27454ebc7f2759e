#include "cylrig/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "cylrig/error.hpp"

namespace cylrig {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    Rational r(s, 10);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: '" + s + "'", 0);
  }
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw PreconditionError("from_double: non-finite value");
  Rational r(x);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

std::vector<double> to_double(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

Rational abs(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

int sign(const Rational& r) { return sgn(r); }

namespace {
constexpr std::int64_t kDyadicScale = std::int64_t{1} << 20;
}

Rational random_dyadic(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-kDyadicScale, kDyadicScale);
  Rational r(mpz_class(static_cast<long>(dist(rng))), mpz_class(static_cast<long>(kDyadicScale)));
  r.canonicalize();
  return r;
}

Rational random_nonzero_dyadic(std::mt19937_64& rng) {
  for (;;) {
    Rational r = random_dyadic(rng);
    if (sgn(r) != 0) return r;
  }
}

Rational rational_below(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw PreconditionError("rational_below: need a positive finite bound");
  // Largest power-of-two denominator that still leaves a few significant bits.
  int exp = 0;
  std::frexp(x, &exp);
  int shift = 12 - exp;
  double scaled = std::ldexp(x / 2.0, shift);
  mpz_class num(static_cast<long>(std::floor(scaled)));
  if (num <= 0) num = 1;
  mpz_class den = 1;
  if (shift >= 0) {
    den <<= shift;
  } else {
    num <<= -shift;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cylrig
