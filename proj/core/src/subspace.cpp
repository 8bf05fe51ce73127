#include <hypform/error.hpp>
#include <hypform/subspace.hpp>

namespace hypform {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InvalidInput("vector does not live in the ambient space");
  }
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& rows) {
  Echelon e = echelon(rows);
  Subspace s(rows.cols());
  Matrix b(e.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = e.form(i, j);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InvalidInput("vector does not live in the ambient space");
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = w[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (!basis_(i, j).is_zero()) w[j] -= c * basis_(i, j);
    }
  }
  return hypform::is_zero(w);
}

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw InvalidInput("ambient dimension mismatch");
  if (w.dim() > dim()) return false;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (!contains(w.vector(i))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  Echelon e = echelon(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = Scalar(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.form(k, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(n, basis);
}

Subspace annihilator(const Subspace& w) { return kernel(w.basis()); }

Subspace intersect(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient() != w2.ambient()) throw InvalidInput("ambient dimension mismatch");
  if (w1.is_zero() || w2.is_zero()) return Subspace(w1.ambient());
  if (w1.contains(w2)) return w2;
  if (w2.contains(w1)) return w1;
  return kernel(vstack(annihilator(w1).basis(), annihilator(w2).basis()));
}

Subspace sum(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient() != w2.ambient()) throw InvalidInput("ambient dimension mismatch");
  return Subspace::row_space(vstack(w1.basis(), w2.basis()));
}

Subspace image(const Matrix& g, const Subspace& w) {
  if (g.cols() != w.ambient() || !g.is_square()) throw InvalidInput("map does not act on the ambient space");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < w.dim(); ++i) out.push_back(g * w.vector(i));
  return Subspace::span(w.ambient(), out);
}

std::vector<Vector> complement_in(const Subspace& w, const Subspace& sub) {
  std::vector<Vector> chosen;
  Subspace acc = sub;
  for (std::size_t i = 0; i < w.dim() && acc.dim() < w.dim(); ++i) {
    Vector v = w.vector(i);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, Subspace::span(w.ambient(), {v}));
  }
  return chosen;
}

}  // namespace hypform
