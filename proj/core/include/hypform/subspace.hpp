#pragma once

#include <hypform/matrix.hpp>

namespace hypform {

/// A linear subspace of K^ambient stored by its canonical RREF basis, so
/// that structural equality is equality of subspaces.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& rows);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> vectors() const { return basis_.row_list(); }

  /// Membership by elimination against the pivots (no division).
  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space of m as a subspace of K^cols.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& w1, const Subspace& w2);
Subspace sum(const Subspace& w1, const Subspace& w2);
/// {u : u.w = 0 for all w in W} under the standard dot product.
Subspace annihilator(const Subspace& w);
/// g(W) for a square matrix g.
Subspace image(const Matrix& g, const Subspace& w);
/// A complement of `sub` inside `w`, chosen greedily from w's basis rows;
/// requires sub <= w.
std::vector<Vector> complement_in(const Subspace& w, const Subspace& sub);

}  // namespace hypform
