#include <hypform/error.hpp>
#include <hypform/forms.hpp>

namespace hypform {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::sl:
      return "sl";
    case FormKind::sp:
      return "sp";
    case FormKind::so:
      return "so";
  }
  return "?";
}

std::string to_string(Presentation p) { return p == Presentation::diagonal ? "diagonal" : "split"; }

FormKind parse_form_kind(const std::string& s) {
  if (s == "sl") return FormKind::sl;
  if (s == "sp") return FormKind::sp;
  if (s == "so") return FormKind::so;
  throw InvalidInput("unknown space kind '" + s + "' (expected sl, sp or so)");
}

Presentation parse_presentation(const std::string& s) {
  if (s == "diagonal") return Presentation::diagonal;
  if (s == "split") return Presentation::split;
  throw InvalidInput("unknown presentation '" + s + "' (expected diagonal or split)");
}

std::string to_string(const SignatureTriple& s) {
  return "(" + std::to_string(s.l) + "," + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

FormSpace::FormSpace(FormKind kind, std::size_t n, Presentation presentation)
    : kind_(kind), n_(n), presentation_(presentation) {
  if (kind == FormKind::sp) {
    gram_ = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      gram_(i, n + i) = Scalar(1);
      gram_(n + i, i) = Scalar(-1);
    }
  } else if (kind == FormKind::so) {
    gram_ = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (presentation == Presentation::diagonal) {
        gram_(i, i) = Scalar(2);
        gram_(n + i, n + i) = Scalar(-2);
      } else {
        gram_(i, n + i) = Scalar(2);
        gram_(n + i, i) = Scalar(2);
      }
    }
  }
}

const Matrix& FormSpace::gram() const {
  if (!has_form()) throw InvalidInput("the sl space carries no bilinear form");
  return gram_;
}

Scalar FormSpace::pair(const Vector& u, const Vector& v) const {
  const Matrix& g = gram();
  if (u.size() != dim() || v.size() != dim()) throw InvalidInput("vector dimension does not match the space");
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!g(i, j).is_zero() && !v[j].is_zero()) s += u[i] * g(i, j) * v[j];
    }
  }
  return s;
}

Matrix FormSpace::gram(const std::vector<Vector>& vectors) const {
  Matrix m(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) m(i, j) = pair(vectors[i], vectors[j]);
  return m;
}

std::string FormSpace::label(std::size_t i) const {
  if (i >= dim()) throw InvalidInput("coordinate index out of range");
  if (kind_ == FormKind::sl) return "e" + std::to_string(i + 1);
  const char* names = kind_ == FormKind::sp ? "ef" : (presentation_ == Presentation::diagonal ? "xy" : "uv");
  return std::string(1, names[i < n_ ? 0 : 1]) + std::to_string(i % n_ + 1);
}

Diagonalization diagonalize(const FormSpace& space, const std::vector<Vector>& vectors) {
  std::size_t k = vectors.size();
  Matrix m = space.gram(vectors);
  Matrix p = Matrix::identity(k);

  auto add_to = [&](std::size_t i, std::size_t j, const Scalar& c) {
    // basis_i += c * basis_j, applied as a congruence
    for (std::size_t t = 0; t < k; ++t) p(i, t) += c * p(j, t);
    for (std::size_t t = 0; t < k; ++t) m(i, t) += c * m(j, t);
    for (std::size_t t = 0; t < k; ++t) m(t, i) += c * m(t, j);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t t = 0; t < k; ++t) std::swap(p(i, t), p(j, t));
    for (std::size_t t = 0; t < k; ++t) std::swap(m(i, t), m(j, t));
    for (std::size_t t = 0; t < k; ++t) std::swap(m(t, i), m(t, j));
  };

  std::size_t done = 0;
  for (; done < k; ++done) {
    std::size_t piv = done;
    while (piv < k && m(piv, piv).is_zero()) ++piv;
    if (piv == k) {
      bool found = false;
      for (std::size_t i = done; i < k && !found; ++i) {
        for (std::size_t j = i + 1; j < k && !found; ++j) {
          if (!m(i, j).is_zero()) {
            add_to(i, j, Scalar(1));
            piv = i;
            found = true;
          }
        }
      }
      if (!found) break;
    }
    swap(done, piv);
    Scalar inv = inverse(m(done, done));
    for (std::size_t i = done + 1; i < k; ++i) {
      if (m(i, done).is_zero()) continue;
      add_to(i, done, -(m(i, done) * inv));
    }
  }

  Diagonalization out;
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(space.dim());
    for (std::size_t j = 0; j < k; ++j) {
      if (!p(i, j).is_zero()) v = v + p(i, j) * vectors[j];
    }
    out.vectors.push_back(std::move(v));
    out.values.push_back(i < done ? m(i, i) : Scalar());
  }
  out.transform = std::move(p);
  out.rank = done;
  return out;
}

Subspace perp(const FormSpace& space, const Subspace& w) {
  if (w.ambient() != space.dim()) throw InvalidInput("subspace does not live in the space");
  return kernel(w.basis() * space.gram());
}

Subspace radical(const FormSpace& space, const Subspace& w) { return intersect(w, perp(space, w)); }

RankProfile symplectic_rank(const FormSpace& space, const Subspace& w) {
  if (space.kind() != FormKind::sp) throw InvalidInput("symplectic rank needs a symplectic space");
  if (w.ambient() != space.dim()) throw InvalidInput("subspace does not live in the space");
  // rank of the restricted form equals rank of its Gram matrix
  std::size_t two_r = rank(space.gram(w.vectors()));
  return {w.dim(), two_r, w.dim() - two_r};
}

SignatureTriple signature(const FormSpace& space, const Subspace& w) {
  if (space.kind() != FormKind::so) throw InvalidInput("signature needs a quadratic space");
  if (w.ambient() != space.dim()) throw InvalidInput("subspace does not live in the space");
  Diagonalization d = diagonalize(space, w.vectors());
  SignatureTriple s;
  for (const auto& v : d.values) {
    int sg = sign_of(v);
    if (sg > 0) ++s.p;
    else if (sg < 0) ++s.q;
    else ++s.l;
  }
  return s;
}

bool is_isometry(const FormSpace& space, const Matrix& g) {
  if (!g.is_square() || g.rows() != space.dim()) return false;
  switch (space.kind()) {
    case FormKind::sl:
      return determinant(g) == Scalar(1);
    case FormKind::sp:
      return g.transpose() * space.gram() * g == space.gram();
    case FormKind::so:
      if (g.transpose() * space.gram() * g != space.gram()) return false;
      return unimodular_determinant(g) == 1;
  }
  return false;
}

bool admissible_rank(std::size_t p, std::size_t two_r, std::size_t n) {
  if (two_r % 2) throw InvalidInput("symplectic rank must be even");
  return 2 * two_r <= 2 * p && 2 * p <= two_r + 2 * n;
}

bool admissible_signature(std::size_t l, std::size_t p, std::size_t q, std::size_t n) {
  return l + p <= n && l + q <= n && l + p + q <= 2 * n;
}

Subspace witness_rank(std::size_t p, std::size_t two_r, std::size_t n) {
  if (!admissible_rank(p, two_r, n))
    throw InvalidInput("inadmissible rank profile p=" + std::to_string(p) + ", 2r=" + std::to_string(two_r));
  std::size_t r = two_r / 2;
  std::vector<Vector> vs;
  // f_1..f_{p-2r}, then the pairs (e_i, f_i) for the last r indices
  for (std::size_t i = 0; i < p - two_r; ++i) vs.push_back(unit_vector(2 * n, n + i));
  for (std::size_t i = n - r; i < n; ++i) {
    vs.push_back(unit_vector(2 * n, i));
    vs.push_back(unit_vector(2 * n, n + i));
  }
  Subspace w = Subspace::span(2 * n, vs);
  if (!(symplectic_rank(FormSpace::symplectic(n), w) == RankProfile{p, two_r, 0}))
    throw VerificationFailure("rank witness failed its own check");
  return w;
}

Subspace witness_signature(std::size_t l, std::size_t p, std::size_t q, std::size_t n, Presentation presentation) {
  if (!admissible_signature(l, p, q, n))
    throw InvalidInput("inadmissible signature " + to_string(SignatureTriple{l, p, q}));
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < l; ++i) vs.push_back(unit_vector(2 * n, i) + unit_vector(2 * n, n + i));
  for (std::size_t i = l; i < l + p; ++i) vs.push_back(unit_vector(2 * n, i));
  for (std::size_t i = l; i < l + q; ++i) vs.push_back(unit_vector(2 * n, n + i));
  Subspace w = Subspace::span(2 * n, vs);
  if (presentation == Presentation::split) w = image(diagonal_to_split_change_of_basis(n), w);
  if (signature(FormSpace::quadratic(n, presentation), w) != SignatureTriple{l, p, q})
    throw VerificationFailure("signature witness failed its own check");
  return w;
}

Matrix split_to_diagonal_change_of_basis(std::size_t n) {
  const TowerNodePtr& node = TowerContext::sqrt2().top();
  Scalar h = Scalar::make(node, Scalar(), Scalar(1, 2));  // sqrt(2)/2
  Matrix t(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = h;
    t(n + i, i) = h;
    t(i, n + i) = h;
    t(n + i, n + i) = -h;
  }
  FormSpace diag = FormSpace::quadratic(n), split = FormSpace::quadratic(n, Presentation::split);
  if (t.transpose() * diag.gram() * t != split.gram()) throw VerificationFailure("split change of basis is not isometric");
  return t;
}

Matrix diagonal_to_split_change_of_basis(std::size_t n) {
  // T is symmetric with T*T = I
  return split_to_diagonal_change_of_basis(n);
}

}  // namespace hypform
