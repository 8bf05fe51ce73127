#pragma once

// Exact real arithmetic over a linear tower of quadratic extensions
//
//   Q = K_0 < K_1 = K_0(sqrt(rho_1)) < ... < K_k = K_{k-1}(sqrt(rho_k)),
//
// where each radicand rho_j is a positive element of K_{j-1} that is not a
// square there. A Scalar at level j is a + b*sqrt(rho_j) with a, b in
// K_{j-1} and b != 0; when b would be zero the value collapses to a, so every
// number has exactly one representation inside a given tower and structural
// equality is value equality.

#include <hypform/rational.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypform {

struct TowerNode;
using TowerNodePtr = std::shared_ptr<const TowerNode>;

class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  /// a + b*sqrt(radicand of node); collapses to `a` when b == 0.
  static Scalar make(const TowerNodePtr& node, Scalar a, Scalar b);

  int level() const noexcept;
  bool is_rational() const noexcept { return !ext_; }
  bool is_zero() const noexcept { return !ext_ && sgn(q_) == 0; }
  bool is_one() const noexcept { return !ext_ && q_ == 1; }

  /// Only valid for level-0 scalars.
  const Rational& rational() const;

  /// Components of a level >= 1 scalar.
  const Scalar& a() const;
  const Scalar& b() const;
  const TowerNodePtr& node() const;

  double to_double() const;
  /// Rational enclosure of the real value; width shrinks like 2^-bits.
  RationalInterval enclosure(unsigned bits) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  struct Ext;
  Rational q_;
  std::shared_ptr<const Ext> ext_;
};

struct TowerNode {
  TowerNodePtr parent;
  Scalar radicand;
  int level = 0;
};

/// Same node, or equal radicands over equal parents.
bool same_node(const TowerNodePtr& x, const TowerNodePtr& y);

Scalar inverse(const Scalar& x);
/// -1, 0 or +1, decided exactly.
int sign_of(const Scalar& x);
Scalar abs(const Scalar& x);
/// Nonnegative square root of x inside the field of `node` (nullptr means Q).
std::optional<Scalar> sqrt_in(const TowerNodePtr& node, const Scalar& x);

/// The deeper of two compatible nodes; throws IncompatibleTower otherwise.
TowerNodePtr join_nodes(const TowerNodePtr& x, const TowerNodePtr& y);

/// Debug rendering, e.g. "1/2 + (3)*sqrt(2)".
std::string to_string(const Scalar& x);

/// An ordered chain of adjoined radicands. Values are immutable; adjoining
/// produces a new context that shares the old chain.
class TowerContext {
 public:
  TowerContext() = default;
  explicit TowerContext(TowerNodePtr top) : top_(std::move(top)) {}

  /// Q(sqrt 2), shared process-wide so constructions that need sqrt(2) agree
  /// on the node identity.
  static const TowerContext& sqrt2();

  int level() const noexcept { return top_ ? top_->level : 0; }
  const TowerNodePtr& top() const noexcept { return top_; }
  /// Radicands from the bottom of the tower up.
  std::vector<Scalar> radicands() const;
  /// Node at the given level (1-based), or nullptr for level 0.
  TowerNodePtr node_at(int level) const;

  /// True when x lives in this tower.
  bool contains(const Scalar& x) const;

  /// Returns (context, root) with root*root == rho and root > 0. When rho is
  /// already a square the context is returned unchanged. Throws InvalidInput
  /// for rho <= 0.
  std::pair<TowerContext, Scalar> adjoin_sqrt(const Scalar& rho) const;

  /// The shallower of two nested contexts is widened to the deeper one.
  static TowerContext join(const TowerContext& x, const TowerContext& y);

  friend bool operator==(const TowerContext& x, const TowerContext& y) { return same_node(x.top_, y.top_); }

 private:
  TowerNodePtr top_;
};

/// Smallest context containing x.
TowerContext context_of(const Scalar& x);

}  // namespace hypform
