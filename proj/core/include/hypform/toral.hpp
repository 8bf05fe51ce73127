#pragma once

// Linear torus automorphisms: integer matrices with determinant +-1.

#include <hypform/polynomial.hpp>
#include <hypform/roots.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypform {

class ToralMap {
 public:
  ToralMap() = default;
  /// Throws InvalidInput unless the rows are square, integer and unimodular.
  explicit ToralMap(std::vector<std::vector<Integer>> rows);
  static ToralMap from_longs(const std::vector<std::vector<long>>& rows);
  static ToralMap identity(std::size_t d);

  std::size_t d() const noexcept { return g_.size(); }
  const std::vector<std::vector<Integer>>& rows() const noexcept { return g_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return g_[i][j]; }
  int det() const noexcept { return det_; }

  friend ToralMap operator*(const ToralMap& a, const ToralMap& b);
  friend bool operator==(const ToralMap& a, const ToralMap& b) { return a.g_ == b.g_; }
  friend bool operator!=(const ToralMap& a, const ToralMap& b) { return !(a == b); }
  friend bool operator<(const ToralMap& a, const ToralMap& b) { return a.g_ < b.g_; }

 private:
  std::vector<std::vector<Integer>> g_;
  int det_ = 1;
};

std::string to_string(const ToralMap& m);

ToralMap inverse(const ToralMap& m);
ToralMap transpose(const ToralMap& m);
/// (g^T)^-1.
ToralMap contragredient(const ToralMap& m);
/// det(t I - g), monic with integer coefficients.
Poly char_poly(const ToralMap& m);

enum class Hyperbolicity { hyperbolic, not_hyperbolic, indeterminate };
std::string to_string(Hyperbolicity h);

/// Exact: no root of p on the unit circle. The roots on the circle divide
/// r = gcd(p, t^d p(1/t)); with p(+-1) != 0, r is palindromic and its circle
/// roots correspond to the real roots of r's reduction in [-2, 2].
Hyperbolicity hyperbolicity(const ToralMap& m);

struct SpectralBands {
  RationalInterval lambda1, lambda2, mu2, mu1;
  std::size_t s = 0;
  std::size_t u = 0;
};

/// Throws InvalidInput for non-hyperbolic maps.
SpectralBands spectral_bands(const ToralMap& m, unsigned bits = 64);

/// Both strict Brin-Manning inequalities, decided with interval logarithms;
/// Indeterminate when the enclosures cannot separate the two sides.
bool brin_manning(const SpectralBands& b);
/// Hyperbolic maps only; refines the bands until decided.
bool brin_manning(const ToralMap& m);

/// Hyperbolic, all eigenvalues real and positive, exactly one above 1.
bool codimension_one(const ToralMap& m);

struct DominationCertificate {
  std::size_t dim_e = 0;
  std::size_t dim_f = 0;
  RationalInterval rho_e;  // largest modulus on E
  RationalInterval rho_f;  // smallest modulus on F
  RationalInterval gap;    // rho_f / rho_e
  Rational c;              // constant C
  RationalInterval lambda; // exponent lambda
  bool diagonalizable = true;
};

std::vector<DominationCertificate> dominated_gaps(const ToralMap& m, unsigned bits = 64);

bool is_anosov_toral(const ToralMap& m);

/// Certified enclosure of log x for x > 0.
RationalInterval log_interval(const RationalInterval& x, unsigned bits);

enum class WordPredicate { hyperbolic, codim_one, brin_manning, anosov };
WordPredicate parse_word_predicate(const std::string& s);
std::string to_string(WordPredicate p);
bool satisfies(const ToralMap& m, WordPredicate p);

struct WordHit {
  /// Letters: generator i (0-based) as 2i, its inverse as 2i+1.
  std::vector<std::size_t> letters;
  ToralMap matrix;
};

/// "g1 g2^-1 g1".
std::string word_to_string(const std::vector<std::size_t>& letters);

/// Reduced words of length 1..max_len in length-then-lexicographic order
/// whose products satisfy the predicate; a matrix is reported once, for its
/// first word. With semigroup set, inverses are not used.
std::vector<WordHit> search_words(const std::vector<ToralMap>& generators, std::size_t max_len, WordPredicate predicate,
                                  bool semigroup = false, unsigned threads = 1);

/// Generators of Sp(4, Z) in the form J = [[0, I], [-I, 0]].
std::vector<ToralMap> sp4_generators();

}  // namespace hypform
