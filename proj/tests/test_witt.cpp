#include <doctest.h>

#include <hypform/error.hpp>
#include <hypform/witt.hpp>

#include "support.hpp"

#include <functional>

using namespace hypform;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(2 * n, i - 1); }
Vector f(std::size_t n, std::size_t i) { return unit_vector(2 * n, n + i - 1); }

std::string reason_of(const std::function<void()>& run) {
  try {
    run();
  } catch (const Infeasible& err) {
    return err.reason();
  }
  return "";
}

void check_decomposition(const FormSpace& space, const Subspace& w, const WittArtinDecomposition& d) {
  const std::size_t dim = space.dim();
  Subspace wp = perp(space, w);
  CHECK(sum(d.h, d.rad) == w);
  CHECK(intersect(d.h, d.rad).is_zero());
  CHECK(sum(d.jc, d.rad) == wp);
  CHECK(intersect(d.jc, d.rad).is_zero());
  CHECK(d.h.dim() + d.jc.dim() + d.rest.dim() == dim);
  CHECK(sum(sum(d.h, d.jc), d.rest).dim() == dim);
  CHECK(perp(space, d.h).contains(d.jc));
  CHECK(perp(space, d.h).contains(d.rest));
  CHECK(perp(space, d.jc).contains(d.rest));
  CHECK(d.rest.contains(d.rad));
  CHECK(2 * d.rad.dim() == d.rest.dim());
  CHECK(perp(space, d.rad).contains(d.rad));
}

}  // namespace

TEST_CASE("Witt-Artin examples") {
  const std::size_t n = 2;
  FormSpace sp = FormSpace::symplectic(n);
  Subspace w = Subspace::span(4, {e(n, 1), f(n, 1)});
  WittArtinDecomposition d = witt_artin(sp, w);
  CHECK(d.h == w);
  CHECK(d.rad.is_zero());
  CHECK(d.jc == Subspace::span(4, {e(n, 2), f(n, 2)}));
  CHECK(d.rest.is_zero());

  w = Subspace::span(4, {f(n, 1), e(n, 2), f(n, 2)});
  d = witt_artin(sp, w);
  CHECK(d.h == Subspace::span(4, {e(n, 2), f(n, 2)}));
  CHECK(d.rad == Subspace::span(4, {f(n, 1)}));
  CHECK(d.jc.is_zero());
  CHECK(d.rest == Subspace::span(4, {e(n, 1), f(n, 1)}));
  check_decomposition(sp, w, d);

  d = witt_artin(sp, Subspace(4));
  CHECK(d.h.is_zero());
  CHECK(d.rad.is_zero());
  CHECK(d.jc == Subspace::whole(4));
  CHECK(d.rest.is_zero());
}

TEST_CASE("Witt-Artin invariants on random subspaces") {
  testing::Rng rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    FormSpace sp = FormSpace::symplectic(n);
    for (int i = 0; i < 40; ++i) {
      Subspace w = testing::random_subspace(rng, 2 * n, static_cast<std::size_t>(testing::uniform(rng, 0, 2 * static_cast<long>(n))));
      check_decomposition(sp, w, witt_artin(sp, w));
    }
  }
}

TEST_CASE("symplectic completion") {
  const std::size_t n = 2;
  FormSpace sp = FormSpace::symplectic(n);
  SymplecticBasis b = symplectic_complete(sp, {e(n, 1)});
  CHECK(b.e[0] == e(n, 1));
  CHECK(sp.pair(b.e[0], b.f[0]) == Scalar(1));
  CHECK(is_isometry(sp, b.matrix()));
  b = symplectic_complete(sp, {e(n, 1) + f(n, 2)});
  CHECK(b.e[0] == e(n, 1) + f(n, 2));
  CHECK(is_isometry(sp, b.matrix()));
  b = symplectic_complete(sp, {e(n, 1), e(n, 2)}, {f(n, 1) + e(n, 2)});
  CHECK(b.f[0] == f(n, 1) + e(n, 2));
  CHECK(is_isometry(sp, b.matrix()));
  CHECK_THROWS_AS(symplectic_complete(sp, {e(n, 1), Scalar(2) * e(n, 1)}), InvalidInput);
  CHECK_THROWS_AS(symplectic_complete(sp, {e(n, 1), f(n, 1)}), InvalidInput);
}

TEST_CASE("hyperbolic completion") {
  const std::size_t n = 2;
  FormSpace so = FormSpace::quadratic(n);
  HyperbolicCompletion c = hyperbolic_complete(so, Subspace::span(4, {e(n, 1) + f(n, 1)}));
  Vector z = Scalar(1, 4) * (e(n, 1) - f(n, 1));
  CHECK(c.u == Subspace::span(4, {z}));
  REQUIRE(c.pairs.size() == 1);
  CHECK(c.pairs[0].second == z);
  CHECK(so.pair(c.pairs[0].first, z) == Scalar(1));
  CHECK(so.pair(z, z).is_zero());

  CHECK(hyperbolic_complete(so, Subspace::span(4, {e(n, 1)})).u.is_zero());

  c = hyperbolic_complete(so, Subspace::span(4, {e(n, 1) + f(n, 1), e(n, 2) + f(n, 2)}));
  REQUIRE(c.pairs.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(so.pair(c.pairs[i].first, c.pairs[j].second) == Scalar(i == j ? 1 : 0));
      CHECK(so.pair(c.pairs[i].second, c.pairs[j].second).is_zero());
    }
}

TEST_CASE("Witt extension") {
  const std::size_t n = 2;
  FormSpace so = FormSpace::quadratic(n);
  IsometryCertificate c = witt_extend(so, {e(n, 1)}, {e(n, 2)});
  CHECK(c.verified);
  CHECK(c.h * e(n, 1) == e(n, 2));
  CHECK(unimodular_determinant(c.h) == 1);

  CHECK(reason_of([&] { witt_extend(so, {e(n, 1)}, {f(n, 1)}); }) == "not a partial isometry");

  Scalar r3 = TowerContext().adjoin_sqrt(Scalar(3)).second;
  Vector img = inverse(r3) * (Scalar(2) * e(n, 1) + f(n, 1));
  c = witt_extend(so, {e(n, 1)}, {img});
  CHECK(c.verified);
  CHECK(is_isometry(so, c.h));
  CHECK(c.h * e(n, 1) == img);
  CHECK(unimodular_determinant(c.h) == 1);
}

TEST_CASE("transport examples") {
  const std::size_t n = 2;
  FormSpace sp = FormSpace::symplectic(n), so = FormSpace::quadratic(n);
  Subspace w = Subspace::span(4, {e(n, 1), f(n, 2)});
  IsometryCertificate c = transport_sp(sp, w, w);
  CHECK(verify_certificate(c));

  c = transport_sp(sp, Subspace::span(4, {e(n, 1)}), Subspace::span(4, {f(n, 1)}));
  CHECK(verify_certificate(c));
  CHECK(image(c.h, Subspace::span(4, {e(n, 1)})) == Subspace::span(4, {f(n, 1)}));
  CHECK(c.h.level() == 0);

  CHECK(reason_of([&] {
          transport_sp(sp, Subspace::span(4, {e(n, 1), e(n, 2)}), Subspace::span(4, {e(n, 1), f(n, 1)}));
        }) == "rank mismatch");

  c = transport_so(so, Subspace::span(4, {e(n, 1)}), Subspace::span(4, {e(n, 2)}));
  CHECK(verify_certificate(c));
  CHECK(reason_of([&] { transport_so(so, Subspace::span(4, {e(n, 1)}), Subspace::span(4, {f(n, 1)})); }) ==
        "signature mismatch");
  c = transport_so(so, Subspace::span(4, {e(n, 1) + f(n, 1)}), Subspace::span(4, {e(n, 2) + f(n, 2)}));
  CHECK(verify_certificate(c));
  CHECK(unimodular_determinant(c.h) == 1);
}

TEST_CASE("transport on random matched pairs") {
  testing::Rng rng(22);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (FormKind kind : {FormKind::sp, FormKind::so}) {
      FormSpace space(kind, n);
      for (int i = 0; i < 25; ++i) {
        Subspace w1 = testing::random_subspace(rng, 2 * n, static_cast<std::size_t>(testing::uniform(rng, 0, 2 * static_cast<long>(n))));
        Subspace w2 = image(testing::random_group_element(rng, space), w1);
        IsometryCertificate c = transport(space, w1, w2);
        CHECK(is_isometry(space, c.h));
        CHECK(image(c.h, w1) == w2);
        CHECK(unimodular_determinant(c.h) == 1);
        if (kind == FormKind::sp) CHECK(c.h.level() == 0);
      }
    }
  }
}

TEST_CASE("reflections") {
  FormSpace so = FormSpace::quadratic(2);
  Matrix s = reflection(so, e(2, 1));
  CHECK(s.transpose() * so.gram() * s == so.gram());
  CHECK_FALSE(is_isometry(so, s));
  CHECK(s * e(2, 1) == Scalar(-1) * e(2, 1));
  CHECK(s * s == Matrix::identity(4));
  CHECK(unimodular_determinant(s) == -1);
  CHECK_THROWS_AS(reflection(so, e(2, 1) + f(2, 1)), InvalidInput);
}

TEST_CASE("certificates reject tampering") {
  FormSpace sp = FormSpace::symplectic(2);
  IsometryCertificate c = transport_sp(sp, Subspace::span(4, {e(2, 1)}), Subspace::span(4, {f(2, 1)}));
  REQUIRE(verify_certificate(c));
  c.h(0, 0) += Scalar(1);
  CHECK_FALSE(verify_certificate(c));
  c = transport_sp(sp, Subspace::span(4, {e(2, 1)}), Subspace::span(4, {f(2, 1)}));
  c.w2 = Subspace::span(4, {f(2, 2)});
  CHECK_FALSE(verify_certificate(c));
}
