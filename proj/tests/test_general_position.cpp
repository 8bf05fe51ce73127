#include <doctest.h>

#include <hypform/enumerate.hpp>
#include <hypform/error.hpp>
#include <hypform/general_position.hpp>

#include "support.hpp"

using namespace hypform;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(2 * n, i - 1); }
Vector f(std::size_t n, std::size_t i) { return unit_vector(2 * n, n + i - 1); }

std::size_t expected_meet(const Subspace& a, const Subspace& b) {
  std::size_t s = a.dim() + b.dim(), d = a.ambient();
  return s > d ? s - d : 0;
}

void check_sp_witness(std::size_t n, const RankProfile& a, const RankProfile& b) {
  FormSpace sp = FormSpace::symplectic(n);
  GeneralPositionWitness w = genpos_sp(n, a, b);
  CHECK(symplectic_rank(sp, w.y1) == a);
  CHECK(symplectic_rank(sp, w.y2) == b);
  CHECK(in_general_position(w.y1, w.y2));
}

}  // namespace

TEST_CASE("general position examples") {
  const std::size_t n = 2;
  CHECK(in_general_position(Subspace::span(4, {e(n, 1)}), Subspace::span(4, {f(n, 1), e(n, 2), f(n, 2)})));
  Subspace w = Subspace::span(4, {e(n, 1)});
  CHECK_FALSE(in_general_position(w, w));
  CHECK(in_general_position(Subspace::span(4, {e(n, 1), f(n, 1)}),
                            Subspace::span(4, {e(n, 2) - e(n, 1), f(n, 2) + f(n, 1)})));
  CHECK(in_general_position(Subspace(4), w));
}

TEST_CASE("symplectic base cases") {
  GeneralPositionWitness w = genpos_sp(2, {1, 0}, {3, 2});
  CHECK(w.y1 == Subspace::span(4, {e(2, 1)}));
  CHECK(w.y2 == Subspace::span(4, {f(2, 1), e(2, 2), f(2, 2)}));
  CHECK(w.entry == "base (1)");
  w = genpos_sp(2, {2, 0}, {2, 0});
  CHECK(w.y1 == Subspace::span(4, {e(2, 1), e(2, 2)}));
  CHECK(w.y2 == Subspace::span(4, {f(2, 1), f(2, 2)}));
  CHECK(w.entry == "base (4)");
  w = genpos_sp(2, {2, 2}, {2, 2});
  CHECK(w.entry == "base (2)");
  w = genpos_sp(2, {2, 2}, {2, 0});
  CHECK(w.entry == "base (3)");
  CHECK(w.y1 == Subspace::span(4, {e(2, 1), f(2, 1)}));
  CHECK(w.y2 == Subspace::span(4, {e(2, 2) - e(2, 1), f(2, 2) + f(2, 1)}));
  check_sp_witness(3, {2, 2}, {4, 2});
  CHECK_THROWS_AS(genpos_sp(2, {3, 4}, {1, 0}), InvalidInput);
}

TEST_CASE("quadratic table examples") {
  FormSpace so = FormSpace::quadratic(5);
  for (auto [a, b] : std::vector<std::pair<SignatureTriple, SignatureTriple>>{{{0, 3, 2}, {0, 2, 3}}, {{5, 0, 0}, {5, 0, 0}}}) {
    GeneralPositionWitness w = genpos_so(5, a, b);
    CHECK(signature(so, w.y1) == a);
    CHECK(signature(so, w.y2) == b);
    CHECK(in_general_position(w.y1, w.y2));
  }
  CHECK_NOTHROW(genpos_so(5, {0, 5, 1}, {0, 0, 4}));
  CHECK_THROWS_AS(genpos_so(5, {1, 5, 0}, {0, 0, 4}), InvalidInput);
}

TEST_CASE("exhaustive enumeration for small n") {
  EnumerationReport sp = enumerate_validate(FormKind::sp, 0, 4);
  CHECK(sp.ok());
  CHECK(sp.pass == sp.cases.size());
  EnumerationReport so = enumerate_validate(FormKind::so, 2, 4);
  CHECK(so.ok());
  CHECK(so.pass > 0);
  CHECK(enumerate_validate(FormKind::sp, 0, 0).cases.empty());
}

TEST_CASE("arrange examples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    FormSpace sp = FormSpace::symplectic(n);
    std::vector<Vector> es;
    for (std::size_t i = 1; i <= n; ++i) es.push_back(e(n, i));
    Subspace l = Subspace::span(2 * n, es);
    IsometryCertificate c = arrange(sp, l, l);
    CHECK(verify_certificate(c));
    CHECK(intersect(image(c.h, l), l).is_zero());
    c = arrange(sp, Subspace(2 * n), l);
    CHECK(c.h == Matrix::identity(2 * n));
  }
  FormSpace so = FormSpace::quadratic(2);
  Subspace w1 = Subspace::span(4, {e(2, 1)}), w2 = Subspace::span(4, {e(2, 1), e(2, 2), f(2, 1) + f(2, 2)});
  IsometryCertificate c = arrange(so, w1, w2);
  CHECK(verify_certificate(c));
  CHECK(sum(image(c.h, w1), w2) == Subspace::whole(4));

  FormSpace sl = FormSpace::special_linear(3);
  Subspace line = Subspace::span(3, {unit_vector(3, 0)});
  c = arrange(sl, line, line);
  CHECK(verify_certificate(c));
  CHECK(intersect(image(c.h, line), line).is_zero());
  CHECK(arrange(sl, Subspace(3), line).h == Matrix::identity(3));
  Subspace plane = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
  c = arrange(sl, line, plane);
  CHECK(sum(image(c.h, line), plane) == Subspace::whole(3));
}

TEST_CASE("arrange on random pairs") {
  testing::Rng rng(31);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (FormKind kind : {FormKind::sp, FormKind::so}) {
      FormSpace space(kind, n);
      for (int i = 0; i < 20; ++i) {
        auto [w1, w2] = testing::correlated_pair(rng, 2 * n);
        if (testing::lagrangian_obstruction(space, w1, w2)) continue;
        IsometryCertificate c = arrange(space, w1, w2, static_cast<std::uint64_t>(i));
        CHECK(verify_certificate(c));
        CHECK(intersect(image(c.h, w1), w2).dim() == expected_meet(w1, w2));
      }
    }
  }
}

TEST_CASE("stabilizer subalgebras") {
  FormSpace sl = FormSpace::special_linear(2);
  Vector e1 = unit_vector(2, 0), e2 = unit_vector(2, 1);
  StabilizerReport r = stabilizer_subalgebra(sl, {Subspace::span(2, {e1})});
  CHECK(r.dim() == 2);
  CHECK_FALSE(r.scalars_only);
  r = stabilizer_subalgebra(sl, {Subspace::span(2, {e1}), Subspace::span(2, {e2}), Subspace::span(2, {e1 + e2})});
  CHECK(r.dim() == 0);
  CHECK(r.scalars_only);
  CHECK(stabilizer_subalgebra(sl, {Subspace::whole(2)}).dim() == 3);
  CHECK(stabilizer_subalgebra(FormSpace::symplectic(2), {Subspace::whole(4)}).dim() == 10);
  CHECK(stabilizer_subalgebra(FormSpace::quadratic(2), {Subspace::whole(4)}).dim() == 6);
  for (const Matrix& x : stabilizer_subalgebra(FormSpace::symplectic(2), {Subspace::span(4, {e(2, 1)})}).basis) {
    const Matrix& j = FormSpace::symplectic(2).gram();
    CHECK((x.transpose() * j + j * x).is_zero());
    CHECK(Subspace::span(4, {e(2, 1)}).contains(x * e(2, 1)));
  }
}

TEST_CASE("stabilizers shrink along chains") {
  testing::Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    FormSpace sl = FormSpace::special_linear(d);
    std::vector<Subspace> chain;
    std::size_t last = stabilizer_subalgebra(sl, {Subspace::whole(d)}).dim();
    CHECK(last == d * d - 1);
    for (int k = 0; k < 4; ++k) {
      chain.push_back(testing::random_subspace(rng, d, static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<long>(d) - 1))));
      std::size_t now = stabilizer_subalgebra(sl, chain).dim();
      CHECK(now <= last);
      last = now;
    }
  }
}
