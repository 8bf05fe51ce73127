#include <doctest.h>

#include <hypform/error.hpp>
#include <hypform/scalar.hpp>

#include "support.hpp"

using namespace hypform;

namespace {

Scalar sqrt2() { return TowerContext().adjoin_sqrt(Scalar(2)).second; }

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(2, 4).rational() == Rational(1, 2));
  CHECK(Scalar(3, -6).rational() == Rational(-1, 2));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("one level of square roots") {
  Scalar r = sqrt2();
  CHECK(r.level() == 1);
  CHECK(r * r == Scalar(2));
  CHECK((Scalar(1) + r) * (Scalar(1) - r) == Scalar(-1));
  CHECK(inverse(Scalar(1) + r) == Scalar(-1) + r);
  CHECK((Scalar(1) + r) * inverse(Scalar(1) + r) == Scalar(1));
  CHECK((r - r).is_zero());
  CHECK((r - r).level() == 0);
}

TEST_CASE("exact signs") {
  Scalar r = sqrt2();
  CHECK(sign_of(Scalar(0)) == 0);
  CHECK(sign_of(Scalar(1) - r) == -1);
  CHECK(sign_of(Scalar(7, 5) - r) == -1);
  CHECK(sign_of(Scalar(3, 2) - r) == 1);
  CHECK(sign_of(-r) == -1);
  CHECK(abs(Scalar(1) - r) == r - Scalar(1));
}

TEST_CASE("adjoining roots") {
  TowerContext q;
  auto [c1, r2] = q.adjoin_sqrt(Scalar(2));
  CHECK(c1.level() == 1);
  CHECK(r2 * r2 == Scalar(2));

  auto [same, root] = q.adjoin_sqrt(Scalar(9, 4));
  CHECK(same.level() == 0);
  CHECK(root == Scalar(3, 2));

  auto [c2, r3] = c1.adjoin_sqrt(Scalar(3));
  CHECK(c2.level() == 2);
  CHECK(r3 * r3 == Scalar(3));
  // sqrt 6 = sqrt 2 sqrt 3 is already in the tower
  auto [c3, r6] = c2.adjoin_sqrt(Scalar(6));
  CHECK(c3.level() == 2);
  CHECK(r6 == r2 * r3);
  CHECK(sign_of(r2 + r3 - Scalar(3)) == 1);  // 3.146 > 3
  CHECK(sign_of(r2 + r3 - Scalar(32, 10)) == -1);

  CHECK_THROWS_AS(q.adjoin_sqrt(Scalar(-1)), InvalidInput);
  CHECK_THROWS_AS(q.adjoin_sqrt(Scalar(0)), InvalidInput);
}

TEST_CASE("nested radicands") {
  auto [c1, r2] = TowerContext().adjoin_sqrt(Scalar(2));
  auto [c2, s] = c1.adjoin_sqrt(Scalar(1) + r2);
  CHECK(c2.level() == 2);
  CHECK(s * s == Scalar(1) + r2);
  CHECK(sign_of(s - Scalar(155, 100)) == 1);  // sqrt(1 + sqrt 2) = 1.5537
  CHECK(sign_of(s - Scalar(156, 100)) == -1);
  // sqrt(3 + 2 sqrt 2) = 1 + sqrt 2 without growing the tower
  auto [c3, t] = c1.adjoin_sqrt(Scalar(3) + Scalar(2) * r2);
  CHECK(c3.level() == 1);
  CHECK(t == Scalar(1) + r2);
}

TEST_CASE("unrelated towers do not mix") {
  auto [a, r3] = TowerContext().adjoin_sqrt(Scalar(3));
  auto [b, r5] = TowerContext().adjoin_sqrt(Scalar(5));
  auto [c, r7] = a.adjoin_sqrt(Scalar(7));
  auto [d, r11] = b.adjoin_sqrt(Scalar(11));
  CHECK_THROWS_AS(r7 + r11, IncompatibleTower);
}

TEST_CASE("enclosures contain the value") {
  auto [c, r] = TowerContext().adjoin_sqrt(Scalar(2));
  RationalInterval e = (Scalar(1) + r).enclosure(80);
  CHECK(e.lo < e.hi);
  CHECK(e.lo > Rational(241, 100));
  CHECK(e.hi < Rational(242, 100));
  CHECK(e.width() < Rational(1, 1000000000));
}

TEST_CASE("field laws on random level-2 scalars") {
  testing::Rng rng(1);
  auto [c1, r2] = TowerContext().adjoin_sqrt(Scalar(2));
  auto [c2, r5] = c1.adjoin_sqrt(Scalar(5));
  auto pick = [&] {
    auto q = [&] { return Scalar(testing::uniform(rng, -9, 9), testing::uniform(rng, 1, 5)); };
    return q() + q() * r2 + q() * r5 + q() * r2 * r5;
  };
  for (int i = 0; i < 200; ++i) {
    Scalar x = pick(), y = pick(), z = pick();
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    // sign agrees with a high-precision enclosure
    RationalInterval e = x.enclosure(128);
    if (sgn(e.lo) > 0) CHECK(sign_of(x) == 1);
    if (sgn(e.hi) < 0) CHECK(sign_of(x) == -1);
  }
}
