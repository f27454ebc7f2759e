#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cylrig {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);
/// Accepts "a", "a/b" and finite decimals such as "-1.25".
Rational parse_rational(std::string_view text);
/// Exact binary value of a finite double.
Rational from_double(double x);

/// Square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }
std::vector<double> to_double(const Vector& v);

Rational abs(const Rational& r);
int sign(const Rational& r);

/// Dyadic rational k / 2^20 with k uniform in [-2^20, 2^20].
Rational random_dyadic(std::mt19937_64& rng);
/// Same distribution conditioned on non-zero.
Rational random_nonzero_dyadic(std::mt19937_64& rng);

/// A rational in (0, x) close to x/2 with a small power-of-two denominator.
/// Requires x > 0.
Rational rational_below(double x);

}  // namespace cylrig
