#pragma once

#include <hypform/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace hypform {

using Vector = std::vector<Scalar>;

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Scalar& c, const Vector& x);
Scalar dot(const Vector& x, const Vector& y);
bool is_zero(const Vector& v);
Vector unit_vector(std::size_t dim, std::size_t index);

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::vector<Vector> row_list() const;
  void set_row(std::size_t i, const Vector& v);
  void set_col(std::size_t j, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Highest tower level among the entries.
  int level() const;

  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Scalar& c, const Matrix& x);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& x, const Matrix& y);
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

struct Echelon {
  Matrix form;                      // reduced, zero rows kept at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon echelon(const Matrix& m);
/// Canonical reduced row-echelon form, same shape as the input.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of a x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Sign of det m for a matrix known to have det = +-1, computed through a
/// modular image of the tower. Returns nullopt when det is not +-1.
std::optional<int> unimodular_determinant(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace hypform
