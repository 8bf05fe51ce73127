#pragma once

// Random exact objects for property tests.

#include <hypform/general_position.hpp>
#include <hypform/toral.hpp>

#include <random>

namespace hypform::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Vector random_vector(Rng& rng, std::size_t d, long range = 2) {
  Vector v(d);
  for (auto& x : v) x = Scalar(uniform(rng, -range, range));
  return v;
}

inline Subspace random_subspace(Rng& rng, std::size_t d, std::size_t k, long range = 2) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vector(rng, d, range));
  return Subspace::span(d, rows);
}

// x -> x + c omega(v, x) v
inline Matrix transvection(const FormSpace& space, const Vector& v, const Scalar& c) {
  const std::size_t d = space.dim();
  Matrix m = Matrix::identity(d);
  Vector row(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) row[j] += v[k] * space.gram()(k, j);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) += c * v[i] * row[j];
  return m;
}

// Eichler transformation x -> x + B(x,e)u - B(x,u)e - Q(u)B(x,e)e for
// isotropic e and u orthogonal to e; integral and in SO.
inline Matrix eichler(const FormSpace& space, const Vector& e, const Vector& u) {
  const std::size_t d = space.dim();
  Scalar qu = space.pair(u, u) / Scalar(2);
  Matrix m = Matrix::identity(d);
  for (std::size_t j = 0; j < d; ++j) {
    Vector x = unit_vector(d, j);
    Vector img = x + space.pair(x, e) * u - space.pair(x, u) * e - (qu * space.pair(x, e)) * e;
    m.set_col(j, img);
  }
  return m;
}

/// A random element of Sp or SO with integer entries (transvections, Eichler transformations).
inline Matrix random_group_element(Rng& rng, const FormSpace& space, int steps = 4) {
  const std::size_t d = space.dim(), n = space.n();
  Matrix g = Matrix::identity(d);
  for (int t = 0; t < steps; ++t) {
    if (space.kind() == FormKind::sp) {
      g = transvection(space, random_vector(rng, d), Scalar(uniform(rng, 1, 2))) * g;
      continue;
    }
    // e = x_i +- y_j is isotropic; u avoids coordinates x_i and y_j
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    Vector e = unit_vector(d, i) + Scalar(uniform(rng, 0, 1) ? 1 : -1) * unit_vector(d, n + j);
    Vector u = random_vector(rng, d, 1);
    u[i] = Scalar(0);
    u[n + j] = Scalar(0);
    g = eichler(space, e, u) * g;
  }
  return g;
}

/// Two subspaces sharing some spanning vectors, so usually not in general position.
inline std::pair<Subspace, Subspace> correlated_pair(Rng& rng, std::size_t d, long range = 2) {
  std::vector<Vector> base;
  for (std::size_t i = 0; i < d; ++i) base.push_back(random_vector(rng, d, range));
  std::size_t k1 = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d)));
  std::size_t k2 = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d)));
  std::size_t from = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(k1)));
  std::vector<Vector> v1(base.begin(), base.begin() + static_cast<long>(k1));
  std::vector<Vector> v2(base.begin() + static_cast<long>(from), base.end());
  if (v2.size() > k2) v2.resize(k2);
  return {Subspace::span(d, v1), Subspace::span(d, v2)};
}

/// Both Lagrangian with odd-dimensional intersection: SO preserves the two
/// families, and hW1 cap W2 = 0 needs hW1, W2 in families that differ exactly
/// when n is odd, so no element of SO puts them in general position.
inline bool lagrangian_obstruction(const FormSpace& space, const Subspace& a, const Subspace& b) {
  if (space.kind() != FormKind::so) return false;
  auto lagrangian = [&](const Subspace& w) { return w.dim() == space.n() && perp(space, w) == w; };
  return lagrangian(a) && lagrangian(b) && intersect(a, b).dim() % 2 == 1;
}

inline ToralMap random_unimodular(Rng& rng, std::size_t d, int steps = 8) {
  std::vector<std::vector<long>> id(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i) id[i][i] = 1;
  ToralMap g = ToralMap::from_longs(id);
  for (int t = 0; t < steps; ++t) {
    auto e = id;
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d) - 2));
    if (j >= i) ++j;
    e[i][j] = uniform(rng, -2, 2);
    if (uniform(rng, 0, 3) == 0) e[i][i] = -1;
    g = g * ToralMap::from_longs(e);
  }
  return g;
}

inline std::vector<std::size_t> random_word(Rng& rng, std::size_t alphabet, std::size_t len) {
  std::vector<std::size_t> w;
  while (w.size() < len) {
    std::size_t l = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(alphabet) - 1));
    if (!w.empty() && (w.back() ^ 1u) == l) continue;
    w.push_back(l);
  }
  return w;
}

inline ToralMap word_product(const std::vector<ToralMap>& gens, const std::vector<std::size_t>& w) {
  ToralMap g = ToralMap::identity(gens.front().d());
  for (std::size_t l : w) g = g * (l % 2 ? inverse(gens[l / 2]) : gens[l / 2]);
  return g;
}

}  // namespace hypform::testing
