#pragma once

#include <hypform/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hypform {

/// Univariate polynomial over Q, coefficients stored from the constant term
/// up, with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly monomial(const Rational& c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  Poly derivative() const;
  /// t^d p(1/t).
  Poly reversed(std::size_t d) const;
  /// p(-t).
  Poly negated_variable() const;
  Poly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Poly primitive() const;
  bool has_integer_coeffs() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Yun's square-free decomposition: p = c * prod f_k^k with f_k monic,
/// square-free and pairwise coprime. Only factors of positive degree.
std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p);
Poly squarefree_part(const Poly& p);

/// Sturm sequence of a square-free polynomial; counts distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);
  /// Roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  /// Roots in (a, +inf).
  int count_above(const Rational& a) const;
  int count_real() const;

 private:
  int variations(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<Poly> seq_;
};

/// Real roots of p with multiplicity in (a, +inf) and in (a, b].
int real_roots_above(const Poly& p, const Rational& a);
int real_roots_in(const Poly& p, const Rational& a, const Rational& b);

/// q with t^m q(t + 1/t) = r(t) for a palindromic r of degree 2m.
Poly palindromic_reduction(const Poly& r);

/// "t^2 - 3*t + 1".
std::string to_string(const Poly& p, const std::string& var = "t");

}  // namespace hypform
