#include <doctest.h>

#include <hypform/error.hpp>
#include <hypform/toral.hpp>

#include "support.hpp"

using namespace hypform;

namespace {

ToralMap cat() { return ToralMap::from_longs({{2, 1}, {1, 1}}); }
ToralMap rotation() { return ToralMap::from_longs({{0, -1}, {1, 0}}); }
ToralMap shear() { return ToralMap::from_longs({{1, 1}, {0, 1}}); }

bool near(const RationalInterval& x, double v, double tol) {
  return x.lo.get_d() > v - tol && x.hi.get_d() < v + tol;
}

Poly reciprocal(const Poly& p) {
  Poly r = p.reversed(static_cast<std::size_t>(p.degree()));
  return r.monic();
}

}  // namespace

TEST_CASE("polynomial basics") {
  Poly p{1, -3, 1};
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "t^2 - 3*t + 1");
  CHECK(p(Rational(1)) == Rational(-1));
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
  CHECK(squarefree_part(Poly{1, 2, 1}) == Poly{1, 1});
  CHECK(SturmSequence(Poly{-2, 0, 1}).count_real() == 2);
  CHECK(SturmSequence(Poly{1, 0, 1}).count_real() == 0);
  CHECK(real_roots_in(Poly{-2, 0, 1}, Rational(0), Rational(2)) == 1);
  // t^2 - 3t + 1 = t (t + 1/t - 3)
  CHECK(palindromic_reduction(Poly{1, -3, 1}) == Poly{-3, 1});
}

TEST_CASE("root isolation") {
  std::vector<RootDisk> r = isolate_roots(Poly{1, -3, 1}, 60);
  REQUIRE(r.size() == 2);
  for (const auto& disk : r) {
    CHECK(disk.real);
    CHECK(disk.radius < Rational(1, 1000000));
  }
  r = isolate_roots(Poly{1, 0, 1}, 30);
  REQUIRE(r.size() == 2);
  CHECK(r[0].nonreal);
  CHECK(near(r[0].modulus(), 1.0, 1e-6));
  r = isolate_roots(Poly{1, 2, 1}, 30);
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 2);
}

TEST_CASE("contragredient and characteristic polynomials") {
  CHECK(contragredient(ToralMap::identity(3)) == ToralMap::identity(3));
  CHECK(contragredient(cat()) == ToralMap::from_longs({{1, -1}, {-1, 2}}));
  CHECK(char_poly(cat()) == Poly{1, -3, 1});
  CHECK(char_poly(ToralMap::identity(2)) == Poly{1, -2, 1});
  CHECK(char_poly(rotation()) == Poly{1, 0, 1});
  CHECK_THROWS_AS(ToralMap::from_longs({{2, 0}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(ToralMap::from_longs({{1, 0}}), InvalidInput);
}

TEST_CASE("hyperbolicity and Anosov") {
  CHECK(hyperbolicity(cat()) == Hyperbolicity::hyperbolic);
  CHECK(hyperbolicity(rotation()) == Hyperbolicity::not_hyperbolic);
  CHECK(hyperbolicity(ToralMap::identity(2)) == Hyperbolicity::not_hyperbolic);
  CHECK(hyperbolicity(shear()) == Hyperbolicity::not_hyperbolic);
  CHECK(is_anosov_toral(cat()));
  CHECK_FALSE(is_anosov_toral(ToralMap::identity(2)));
  CHECK_FALSE(is_anosov_toral(shear()));
  // t^4 - t^3 - t^2 - t + 1 is a Salem polynomial: two roots on the circle
  ToralMap salem = ToralMap::from_longs({{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  CHECK(hyperbolicity(salem) == Hyperbolicity::not_hyperbolic);
}

TEST_CASE("spectral bands") {
  SpectralBands b = spectral_bands(cat(), 60);
  CHECK(b.s == 1);
  CHECK(b.u == 1);
  const double lo = (3 - std::sqrt(5.0)) / 2, hi = (3 + std::sqrt(5.0)) / 2;
  CHECK(near(b.lambda1, lo, 1e-12));
  CHECK(near(b.lambda2, lo, 1e-12));
  CHECK(near(b.mu1, hi, 1e-12));
  CHECK(near(b.mu2, hi, 1e-12));
  CHECK_THROWS_AS(spectral_bands(rotation()), InvalidInput);
}

TEST_CASE("Brin-Manning") {
  CHECK(brin_manning(spectral_bands(cat())));
  CHECK(brin_manning(cat()));
  auto point = [](long num, long den) { return RationalInterval{Rational(num, den), Rational(num, den)}; };
  SpectralBands b;
  b.lambda1 = point(1, 100);
  b.lambda2 = point(9, 10);
  b.mu2 = point(2, 1);
  b.mu1 = point(21, 10);
  b.s = b.u = 2;
  CHECK_FALSE(brin_manning(b));
}

TEST_CASE("codimension one") {
  CHECK(codimension_one(cat()));
  CHECK_FALSE(codimension_one(ToralMap::identity(2)));
  CHECK_FALSE(codimension_one(rotation()));
  CHECK_FALSE(codimension_one(ToralMap::from_longs({{-2, -1}, {-1, -1}})));
}

TEST_CASE("dominated splittings") {
  CHECK(dominated_gaps(ToralMap::identity(2)).empty());
  std::vector<DominationCertificate> g = dominated_gaps(cat());
  REQUIRE(g.size() == 1);
  CHECK(g[0].dim_e == 1);
  CHECK(g[0].dim_f == 1);
  CHECK(near(g[0].gap, (7 + 3 * std::sqrt(5.0)) / 2, 1e-9));
  // companion of t^3 - 3t^2 - t + 1: three real roots of distinct moduli
  ToralMap m = ToralMap::from_longs({{0, 0, -1}, {1, 0, 1}, {0, 1, 3}});
  CHECK(char_poly(m) == Poly{1, -1, -3, 1});
  g = dominated_gaps(m);
  CHECK(g.size() == 2);
  for (const auto& c : g) CHECK(sgn(c.lambda.lo) > 0);
}

TEST_CASE("logarithm enclosures") {
  RationalInterval l = log_interval({Rational(2), Rational(2)}, 60);
  CHECK(near(l, std::log(2.0), 1e-15));
  CHECK(l.width() < Rational(1, 1000000) * Rational(1, 1000000));
  l = log_interval({Rational(1, 3), Rational(1, 3)}, 60);
  CHECK(near(l, std::log(1.0 / 3), 1e-15));
}

TEST_CASE("word search examples") {
  std::vector<ToralMap> gens{shear(), ToralMap::from_longs({{1, 0}, {1, 1}})};
  auto hits = search_words(gens, 2, WordPredicate::hyperbolic);
  bool found = false;
  for (const auto& h : hits) found = found || (h.letters == std::vector<std::size_t>{0, 2} && h.matrix == cat());
  CHECK(found);
  CHECK(search_words({ToralMap::identity(2)}, 3, WordPredicate::hyperbolic).empty());
  hits = search_words({cat()}, 3, WordPredicate::codim_one, true);
  REQUIRE(hits.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(hits[k].letters.size() == k + 1);
  CHECK(word_to_string({0, 3, 0}) == "g1 g2^-1 g1");
}

TEST_CASE("word search does not depend on threads") {
  auto one = search_words(sp4_generators(), 4, WordPredicate::hyperbolic, false, 1);
  auto four = search_words(sp4_generators(), 4, WordPredicate::hyperbolic, false, 4);
  REQUIRE(one.size() == four.size());
  CHECK_FALSE(one.empty());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].letters == four[i].letters);
    CHECK(one[i].matrix == four[i].matrix);
  }
}

TEST_CASE("spectral symmetries on random unimodular matrices") {
  testing::Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
    ToralMap m = testing::random_unimodular(rng, d);
    Poly p = char_poly(m);
    CHECK(char_poly(contragredient(m)) == reciprocal(p));
    CHECK(contragredient(contragredient(m)) == m);
    CHECK(m * inverse(m) == ToralMap::identity(d));
    Hyperbolicity h = hyperbolicity(m);
    CHECK(hyperbolicity(inverse(m)) == h);
    CHECK(hyperbolicity(contragredient(m)) == h);
    if (h == Hyperbolicity::hyperbolic) {
      CHECK(brin_manning(m) == brin_manning(inverse(m)));
    }
  }
}

TEST_CASE("symplectic words have self-reciprocal characteristic polynomials") {
  testing::Rng rng(42);
  auto gens = sp4_generators();
  for (int i = 0; i < 100; ++i) {
    auto w = testing::random_word(rng, 2 * gens.size(), static_cast<std::size_t>(testing::uniform(rng, 1, 6)));
    Poly p = char_poly(testing::word_product(gens, w));
    CHECK(reciprocal(p) == p);
  }
}
