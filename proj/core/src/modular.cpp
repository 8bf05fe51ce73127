// Determinant sign of tower matrices through a ring map into F_p.
//
// Each radicand is sent to a square root mod p (p = 3 mod 4, so the root is
// x^((p+1)/4)); any such assignment extends to a field homomorphism of the
// tower, so det = +-1 is decided by its image.

#include <hypform/error.hpp>
#include <hypform/matrix.hpp>

#include <cstdint>

namespace hypform {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Field {
  u64 p;

  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

struct Embedding {
  Field f;
  std::vector<u64> roots;  // image of sqrt(rho_k), index k-1

  std::optional<u64> image(const Scalar& x) const {
    if (x.is_rational()) {
      mpz_class num = x.rational().get_num() % mpz_class(static_cast<unsigned long>(f.p));
      mpz_class den = x.rational().get_den() % mpz_class(static_cast<unsigned long>(f.p));
      if (num < 0) num += static_cast<unsigned long>(f.p);
      if (den == 0) return std::nullopt;
      return f.mul(num.get_ui(), f.inv(den.get_ui()));
    }
    auto a = image(x.a());
    auto b = image(x.b());
    if (!a || !b) return std::nullopt;
    return f.add(*a, f.mul(*b, roots.at(static_cast<std::size_t>(x.level() - 1))));
  }
};

// Depth-first over the sign of each earlier root: a radicand that is a
// non-residue under one choice may be a residue under another.
bool extend(Embedding& e, const std::vector<Scalar>& radicands, std::size_t level, int& budget) {
  if (level == radicands.size()) return true;
  if (--budget < 0) return false;
  auto r = e.image(radicands[level]);
  if (r && *r != 0 && e.f.pow(*r, (e.f.p - 1) / 2) == 1) {
    e.roots.push_back(e.f.pow(*r, (e.f.p + 1) / 4));
    if (extend(e, radicands, level + 1, budget)) return true;
    e.roots.pop_back();
  }
  for (std::size_t k = level; k-- > 0;) {
    if (budget <= 0) return false;
    std::vector<u64> saved(e.roots.begin() + static_cast<long>(k), e.roots.end());
    e.roots.resize(k);
    e.roots.push_back(e.f.sub(0, saved.front()));
    bool ok = true;
    for (std::size_t j = k + 1; j < level && ok; ++j) {
      auto rj = e.image(radicands[j]);
      if (!rj || *rj == 0 || e.f.pow(*rj, (e.f.p - 1) / 2) != 1) ok = false;
      else e.roots.push_back(e.f.pow(*rj, (e.f.p + 1) / 4));
    }
    if (ok && extend(e, radicands, level, budget)) return true;
    e.roots.resize(k);
    e.roots.insert(e.roots.end(), saved.begin(), saved.end());
  }
  return false;
}

std::optional<Embedding> embed(const TowerContext& ctx, u64 p) {
  Embedding e{Field{p}, {}};
  int budget = 64;
  if (!extend(e, ctx.radicands(), 0, budget)) return std::nullopt;
  return e;
}

// Deep towers rarely embed into F_p. Then det is bracketed through rational
// approximations M' of the entries, |M - M'| <= eps entrywise:
//   |det M - det M'| <= (F + d eps)^d - F^d,  F >= |M'|_F (Hadamard).
std::optional<int> approximate_sign(const Matrix& m) {
  const std::size_t n = m.rows();
  for (unsigned bits = 64; bits <= 4096; bits *= 2) {
    // entries rounded to multiples of 2^-bits, kept as integers scaled by 2^bits
    std::vector<mpz_class> a(n * n);
    Rational frob2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational mid = m(i, j).is_rational() ? m(i, j).rational() : m(i, j).enclosure(bits + 1).midpoint();
        Rational r = round_dyadic(mid, bits);
        frob2 += r * r;
        mpz_class scaled = r.get_num();
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
        mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), r.get_den().get_mpz_t());
        a[i * n + j] = scaled;
      }
    }
    // Bareiss elimination: the last pivot is the determinant
    int sign = 1;
    mpz_class prev = 1;
    mpz_class det = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) {
        det = 0;
        break;
      }
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i * n + j] = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
          mpz_divexact(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(), prev.get_mpz_t());
        }
      }
      prev = a[k * n + k];
      det = prev;
    }
    Rational approx_det(det * sign);
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits * n);
    approx_det /= Rational(scale);

    // entrywise error <= 2^-bits (enclosure) + 2^-bits (rounding)
    Rational eps(2);
    mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), bits);
    Rational f = sqrt_bounds(frob2, 32).hi + Rational(1, 1 << 20);
    Rational hi = 1, lo = 1;
    for (std::size_t k = 0; k < n; ++k) {
      hi *= f + Rational(static_cast<long>(n)) * eps;
      lo *= f;
    }
    Rational err = hi - lo;
    if (err < Rational(1, 2)) {
      if (abs(approx_det - 1) <= err) return 1;
      if (abs(approx_det + 1) <= err) return -1;
      return std::nullopt;
    }
  }
  throw Indeterminate("determinant sign not resolved at the precision ceiling");
}

}  // namespace

std::optional<int> unimodular_determinant(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  TowerNodePtr top;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) top = join_nodes(top, m(i, j).node());
  TowerContext ctx(top);

  mpz_class candidate = 1;
  mpz_mul_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), 61);
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    if (mpz_fdiv_ui(candidate.get_mpz_t(), 4) != 3) continue;
    u64 p = candidate.get_ui();
    auto e = embed(ctx, p);
    if (!e) continue;
    std::size_t n = m.rows();
    std::vector<u64> a(n * n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        auto v = e->image(m(i, j));
        if (!v) ok = false;
        else a[i * n + j] = *v;
      }
    }
    if (!ok) continue;
    const Field& f = e->f;
    u64 det = 1;
    for (std::size_t c = 0; c < n && det; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv * n + c] == 0) ++piv;
      if (piv == n) {
        det = 0;
        break;
      }
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        det = f.sub(0, det);
      }
      det = f.mul(det, a[c * n + c]);
      u64 inv = f.inv(a[c * n + c]);
      for (std::size_t i = c + 1; i < n; ++i) {
        u64 factor = f.mul(a[i * n + c], inv);
        if (!factor) continue;
        for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
      }
    }
    if (det == 1) return 1;
    if (det == p - 1) return -1;
    return std::nullopt;
  }
  return approximate_sign(m);
}

}  // namespace hypform
