#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hypform {

using Rational = mpq_class;
using Integer = mpz_class;

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Rational bounds lo <= sqrt(x) <= hi with hi - lo <= 2^-bits * (1 + ...).
/// Requires x >= 0.
RationalInterval sqrt_bounds(const Rational& x, unsigned bits);

/// Round to the nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& x, unsigned bits);

/// Decimal rendering with `digits` digits after the point, rounded toward
/// -infinity (`Round::down`), +infinity (`Round::up`) or to nearest.
enum class Round { down, up, nearest };
std::string to_decimal(const Rational& x, unsigned digits, Round mode = Round::nearest);

/// Parses "p", "p/q", or a finite decimal like "-0.125".
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, otherwise "p/q".
std::string to_string(const Rational& x);

/// Interval arithmetic over exact rationals.
RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
/// Throws DivisionByZero when b contains zero.
RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

}  // namespace hypform
