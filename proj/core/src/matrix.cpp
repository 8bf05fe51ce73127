#include <hypform/error.hpp>
#include <hypform/matrix.hpp>

#include <algorithm>

namespace hypform {

namespace {

void check_same_size(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw InvalidInput("vector length mismatch");
}

// row_i -= factor * row_r, from column `from` on.
void eliminate(Matrix& m, std::size_t i, std::size_t r, const Scalar& factor, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) {
    if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
  }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Vector operator+(const Vector& x, const Vector& y) {
  check_same_size(x, y);
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Vector operator-(const Vector& x, const Vector& y) {
  check_same_size(x, y);
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

Scalar dot(const Vector& x, const Vector& y) {
  check_same_size(x, y);
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = Scalar(1);
  return v;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  if (i >= rows_) throw InvalidInput("row index out of range");
  return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  if (j >= cols_) throw InvalidInput("column index out of range");
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_ || i >= rows_) throw InvalidInput("row shape mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<long>(i * cols_));
}

void Matrix::set_col(std::size_t j, const Vector& v) {
  if (v.size() != rows_ || j >= cols_) throw InvalidInput("column shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

int Matrix::level() const {
  int l = 0;
  for (const auto& s : data_) l = std::max(l, s.level());
  return l;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InvalidInput("matrix shape mismatch");
  Matrix out(x.rows_, x.cols_);
  for (std::size_t k = 0; k < x.data_.size(); ++k) out.data_[k] = x.data_[k] + y.data_[k];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InvalidInput("matrix shape mismatch");
  Matrix out(x.rows_, x.cols_);
  for (std::size_t k = 0; k < x.data_.size(); ++k) out.data_[k] = x.data_[k] - y.data_[k];
  return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw InvalidInput("matrix product shape mismatch");
  Matrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += a * y(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, const Matrix& x) {
  Matrix out = x;
  for (auto& s : out.data_) s = c * s;
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.size()) throw InvalidInput("matrix-vector shape mismatch");
  Vector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

bool operator==(const Matrix& x, const Matrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidInput("vstack column mismatch");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw InvalidInput("hstack row mismatch");
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Echelon echelon(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    if (!a(r, c).is_one()) {
      Scalar inv = inverse(a(r, c));
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(r, j) *= inv;
      }
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      eliminate(a, i, r, factor, c);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

Matrix rref(const Matrix& m) { return echelon(m).form; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw InvalidInput("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.form(k, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Echelon e = echelon(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  Matrix a = m;
  std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      swap_rows(a, p, c);
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = inverse(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar factor = a(i, c) * inv;
      eliminate(a, i, c, factor, c);
    }
  }
  return det;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace hypform
