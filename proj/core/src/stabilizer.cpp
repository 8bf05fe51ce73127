#include <hypform/error.hpp>
#include <hypform/general_position.hpp>

namespace hypform {

// Unknowns are the entries X(i,j), flattened as i*d + j.
StabilizerReport stabilizer_subalgebra(const FormSpace& space, const std::vector<Subspace>& subspaces) {
  if (subspaces.empty()) throw InvalidInput("stabilizer needs at least one subspace");
  const std::size_t d = space.dim();
  for (const auto& w : subspaces)
    if (w.ambient() != d) throw InvalidInput("subspaces must live in the ambient space of dimension " + std::to_string(d));

  std::vector<Vector> rows;
  auto at = [d](std::size_t i, std::size_t j) { return i * d + j; };
  if (space.kind() == FormKind::sl) {
    Vector tr(d * d);
    for (std::size_t i = 0; i < d; ++i) tr[at(i, i)] = Scalar(1);
    rows.push_back(std::move(tr));
  } else {
    // (X^T G + G X)(i,j) = sum_k X(k,i) G(k,j) + G(i,k) X(k,j)
    const Matrix& g = space.gram();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        Vector r(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          if (!g(k, j).is_zero()) r[at(k, i)] += g(k, j);
          if (!g(i, k).is_zero()) r[at(k, j)] += g(i, k);
        }
        if (!is_zero(r)) rows.push_back(std::move(r));
      }
    }
  }
  // a^T X w = 0 for a in the annihilator of W and w in W
  for (const auto& w : subspaces) {
    Subspace ann = annihilator(w);
    for (const auto& a : ann.vectors()) {
      for (const auto& v : w.vectors()) {
        Vector r(d * d);
        for (std::size_t i = 0; i < d; ++i) {
          if (a[i].is_zero()) continue;
          for (std::size_t j = 0; j < d; ++j)
            if (!v[j].is_zero()) r[at(i, j)] = a[i] * v[j];
        }
        rows.push_back(std::move(r));
      }
    }
  }

  StabilizerReport report;
  report.kind = space.kind();
  report.ambient = d;
  Subspace sol = rows.empty() ? Subspace::whole(d * d) : kernel(Matrix::from_rows(rows, d * d));
  report.scalars_only = true;
  for (const auto& v : sol.vectors()) {
    Matrix x(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) x(i, j) = v[at(i, j)];
    if (x != x(0, 0) * Matrix::identity(d)) report.scalars_only = false;
    report.basis.push_back(std::move(x));
  }
  return report;
}

}  // namespace hypform
