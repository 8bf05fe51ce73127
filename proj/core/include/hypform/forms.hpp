#pragma once

// The standard symplectic space (V, omega) with basis e_1..e_n, f_1..f_n, the
// split quadratic space (V, Q) with basis x_1..x_n, y_1..y_n, and plain K^d
// for the special linear group.
//
// Coordinates are always ordered first block then second block, so e_i is
// unit vector i-1 and f_i is unit vector n+i-1. The quadratic space carries
// the bilinear form B(u,v) = Q(u+v) - Q(u) - Q(v), whose Gram is diag(2,..,-2)
// in the diagonal presentation and 2*[[0,I],[I,0]] in the split one.

#include <hypform/subspace.hpp>

#include <string>

namespace hypform {

enum class FormKind { sl, sp, so };
enum class Presentation { diagonal, split };

std::string to_string(FormKind k);
std::string to_string(Presentation p);
FormKind parse_form_kind(const std::string& s);
Presentation parse_presentation(const std::string& s);

class FormSpace {
 public:
  FormSpace() = default;
  FormSpace(FormKind kind, std::size_t n, Presentation presentation = Presentation::diagonal);

  static FormSpace symplectic(std::size_t n) { return {FormKind::sp, n}; }
  static FormSpace quadratic(std::size_t n, Presentation p = Presentation::diagonal) { return {FormKind::so, n, p}; }
  static FormSpace special_linear(std::size_t d) { return {FormKind::sl, d}; }

  FormKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  Presentation presentation() const noexcept { return presentation_; }
  /// 2n for sp/so, n for sl.
  std::size_t dim() const noexcept { return kind_ == FormKind::sl ? n_ : 2 * n_; }
  bool has_form() const noexcept { return kind_ != FormKind::sl; }

  /// Gram matrix of omega or B; throws for sl.
  const Matrix& gram() const;
  Scalar pair(const Vector& u, const Vector& v) const;
  Matrix gram(const std::vector<Vector>& vectors) const;

  /// Basis label of coordinate i ("e1", "f2", "x3", "y1", "u1", "v1").
  std::string label(std::size_t i) const;

  friend bool operator==(const FormSpace& a, const FormSpace& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.presentation_ == b.presentation_;
  }

 private:
  FormKind kind_ = FormKind::sp;
  std::size_t n_ = 0;
  Presentation presentation_ = Presentation::diagonal;
  Matrix gram_;
};

struct RankProfile {
  std::size_t p = 0;
  std::size_t two_r = 0;
  /// dim(W cap W^perp), the number the paper's displayed formula names.
  std::size_t radical_dim = 0;
  friend bool operator==(const RankProfile& a, const RankProfile& b) { return a.p == b.p && a.two_r == b.two_r; }
};

struct SignatureTriple {
  std::size_t l = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t dim() const { return l + p + q; }
  friend bool operator==(const SignatureTriple& a, const SignatureTriple& b) {
    return a.l == b.l && a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const SignatureTriple& a, const SignatureTriple& b) { return !(a == b); }
};

std::string to_string(const SignatureTriple& s);

/// Vectors spanning the same space as the input with diagonal Gram.
struct Diagonalization {
  std::vector<Vector> vectors;  // nonzero-valued first, then the radical
  std::vector<Scalar> values;   // B(v_k, v_k), zeros at the end
  Matrix transform;             // row k holds the coefficients of vectors[k]
  std::size_t rank = 0;         // number of nonzero values
};

Diagonalization diagonalize(const FormSpace& space, const std::vector<Vector>& vectors);

Subspace perp(const FormSpace& space, const Subspace& w);
Subspace radical(const FormSpace& space, const Subspace& w);
RankProfile symplectic_rank(const FormSpace& space, const Subspace& w);
SignatureTriple signature(const FormSpace& space, const Subspace& w);
bool is_isometry(const FormSpace& space, const Matrix& g);

bool admissible_rank(std::size_t p, std::size_t two_r, std::size_t n);
bool admissible_signature(std::size_t l, std::size_t p, std::size_t q, std::size_t n);
Subspace witness_rank(std::size_t p, std::size_t two_r, std::size_t n);
Subspace witness_signature(std::size_t l, std::size_t p, std::size_t q, std::size_t n,
                           Presentation presentation = Presentation::diagonal);

/// T over Q(sqrt 2) with T^T G_diag T = G_split. Column i is u_i = (x_i + y_i)/sqrt 2
/// and column n+i is v_i = (x_i - y_i)/sqrt 2, so T takes split coordinates to
/// diagonal ones.
Matrix split_to_diagonal_change_of_basis(std::size_t n);
Matrix diagonal_to_split_change_of_basis(std::size_t n);

}  // namespace hypform
