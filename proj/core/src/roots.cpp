#include <hypform/error.hpp>
#include <hypform/roots.hpp>

#include <cmath>
#include <cstdlib>
#include <string>

namespace hypform {

unsigned max_precision_bits() {
  static const unsigned bits = [] {
    const char* env = std::getenv("HYPFORM_MAX_PRECISION_BITS");
    if (!env) return 4096u;
    try {
      unsigned long v = std::stoul(env);
      return v >= 64 && v <= (1ul << 20) ? static_cast<unsigned>(v) : 4096u;
    } catch (const std::exception&) {
      return 4096u;
    }
  }();
  return bits;
}

RationalInterval RootDisk::modulus() const {
  Rational sq = re * re + im * im;
  RationalInterval s = sqrt_bounds(sq, 256);
  Rational lo = s.lo - radius;
  if (sgn(lo) < 0) lo = 0;
  return {lo, s.hi + radius};
}

namespace {

struct Cf {
  mpf_class re, im;
};

Cf mul(const Cf& a, const Cf& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cf sub(const Cf& a, const Cf& b) { return {a.re - b.re, a.im - b.im}; }
Cf div(const Cf& a, const Cf& b) {
  mpf_class n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

struct Cq {
  Rational re, im;
};

Cq mul(const Cq& a, const Cq& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Rational norm2(const Cq& a) { return a.re * a.re + a.im * a.im; }

Rational to_dyadic(const mpf_class& x, unsigned bits) {
  Rational q;
  mpq_set_f(q.get_mpq_t(), x.get_mpf_t());
  return round_dyadic(q, bits);
}

// Simultaneous Aberth-Ehrlich iteration on a square-free polynomial.
void aberth(const std::vector<Rational>& coeffs, std::vector<Cf>& z, unsigned prec) {
  const std::size_t d = coeffs.size() - 1;
  std::vector<mpf_class> c, dc;
  for (const auto& q : coeffs) c.emplace_back(q, prec);
  for (std::size_t k = 1; k <= d; ++k) dc.emplace_back(mpf_class(coeffs[k], prec) * static_cast<unsigned long>(k), prec);
  for (auto& x : z) {
    x.re.set_prec(prec);
    x.im.set_prec(prec);
  }
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec > 16 ? prec - 16 : prec);
  for (int iter = 0; iter < 2000; ++iter) {
    mpf_class worst(0, prec);
    for (std::size_t i = 0; i < d; ++i) {
      Cf pv{mpf_class(0, prec), mpf_class(0, prec)}, dv{mpf_class(0, prec), mpf_class(0, prec)};
      for (std::size_t k = d + 1; k-- > 0;) {
        pv = mul(pv, z[i]);
        pv.re += c[k];
      }
      for (std::size_t k = d; k-- > 0;) {
        dv = mul(dv, z[i]);
        dv.re += dc[k];
      }
      if (pv.re == 0 && pv.im == 0) continue;
      Cf ratio = div(pv, dv);
      Cf s{mpf_class(0, prec), mpf_class(0, prec)};
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        Cf diff = sub(z[i], z[j]);
        mpf_class n = diff.re * diff.re + diff.im * diff.im;
        if (n == 0) {
          diff.re += tol;
          n = diff.re * diff.re + diff.im * diff.im;
        }
        s.re += diff.re / n;
        s.im -= diff.im / n;
      }
      Cf one_minus = sub(Cf{mpf_class(1, prec), mpf_class(0, prec)}, mul(ratio, s));
      Cf w = (one_minus.re == 0 && one_minus.im == 0) ? ratio : div(ratio, one_minus);
      z[i] = sub(z[i], w);
      mpf_class size = abs(w.re) + abs(w.im);
      mpf_class scale = 1 + abs(z[i].re) + abs(z[i].im);
      if (size / scale > worst) worst = size / scale;
    }
    if (worst < tol) break;
  }
}

struct FactorDisks {
  std::vector<RootDisk> disks;
  bool ok = false;
};

FactorDisks certify(const Poly& f, const std::vector<Cf>& z, unsigned bits, unsigned grid) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  FactorDisks out;
  std::vector<Cq> zq;
  for (const auto& x : z) zq.push_back({to_dyadic(x.re, grid), to_dyadic(x.im, grid)});
  Rational limit(1);
  mpq_div_2exp(limit.get_mpq_t(), limit.get_mpq_t(), bits);
  Rational lc2 = f.leading() * f.leading();
  for (std::size_t i = 0; i < d; ++i) {
    Cq pv{0, 0};
    for (std::size_t k = d + 1; k-- > 0;) {
      pv = mul(pv, zq[i]);
      pv.re += f.coeff(k);
    }
    Rational denom = lc2;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      Rational n = norm2({zq[i].re - zq[j].re, zq[i].im - zq[j].im});
      if (sgn(n) == 0) return out;
      denom *= n;
    }
    Rational w2 = norm2(pv) / denom;
    RootDisk disk;
    disk.re = zq[i].re;
    disk.im = zq[i].im;
    disk.radius = Rational(static_cast<long>(d)) * sqrt_bounds(w2, grid).hi;
    if (disk.radius > limit) return out;
    out.disks.push_back(disk);
  }
  auto overlap = [](const Rational& ar, const Rational& ai, const Rational& rr, const RootDisk& b) {
    Rational dr = ar - b.re, di = ai - b.im, s = rr + b.radius;
    return dr * dr + di * di <= s * s;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (overlap(out.disks[i].re, out.disks[i].im, out.disks[i].radius, out.disks[j])) return out;
  for (std::size_t i = 0; i < d; ++i) {
    RootDisk& di = out.disks[i];
    std::vector<std::size_t> meets;
    for (std::size_t j = 0; j < d; ++j)
      if (overlap(di.re, -di.im, di.radius, out.disks[j])) meets.push_back(j);
    if (meets.size() != 1) return out;
    di.conjugate = meets.front();
    Rational absim = abs(di.im);
    di.real = di.conjugate == i;
    di.nonreal = absim > di.radius;
    if (di.real == di.nonreal) return out;
  }
  out.ok = true;
  return out;
}

std::vector<Cf> initial_guesses(const Poly& f, unsigned prec) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  double bound = 0;
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(Rational(f.coeff(k) / f.leading()).get_d()));
  double r = std::min(1.0 + bound, 1e6);
  r = std::sqrt(r);
  std::vector<Cf> z;
  for (std::size_t k = 0; k < d; ++k) {
    double angle = 2 * M_PI * static_cast<double>(k) / static_cast<double>(d) + 0.4;
    z.push_back({mpf_class(r * std::cos(angle), prec), mpf_class(r * std::sin(angle), prec)});
  }
  return z;
}

}  // namespace

std::vector<RootDisk> isolate_roots(const Poly& p, unsigned bits) {
  if (p.degree() < 0) throw InvalidInput("roots of the zero polynomial");
  std::vector<RootDisk> all;
  const unsigned ceiling = max_precision_bits();
  for (const auto& [factor, mult] : squarefree_factors(p)) {
    Poly f = factor.primitive();
    std::vector<Cf> z;
    FactorDisks found;
    for (unsigned prec = std::max(64u, bits + 32); ; prec *= 2) {
      if (prec > ceiling + 64) throw Indeterminate("root isolation failed at the precision ceiling");
      if (z.empty()) z = initial_guesses(f, prec);
      aberth(f.coeffs(), z, prec);
      found = certify(f, z, bits, prec);
      if (found.ok) break;
    }
    std::size_t offset = all.size();
    for (auto& disk : found.disks) {
      disk.multiplicity = mult;
      disk.conjugate += offset;
      all.push_back(disk);
    }
  }
  return all;
}

}  // namespace hypform
