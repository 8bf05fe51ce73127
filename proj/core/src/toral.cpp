#include <hypform/error.hpp>
#include <hypform/toral.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <thread>

namespace hypform {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

Integer bareiss_det(IntRows a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntRows multiply(const IntRows& a, const IntRows& b) {
  const std::size_t n = a.size();
  IntRows c(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

ToralMap::ToralMap(std::vector<std::vector<Integer>> rows) : g_(std::move(rows)) {
  if (g_.empty()) throw InvalidInput("toral map needs d >= 1");
  for (const auto& r : g_)
    if (r.size() != g_.size()) throw InvalidInput("toral map must be a square matrix");
  Integer det = bareiss_det(g_);
  if (det != 1 && det != -1) throw InvalidInput("toral map must have determinant +-1, got " + det.get_str());
  det_ = det == 1 ? 1 : -1;
}

ToralMap ToralMap::from_longs(const std::vector<std::vector<long>>& rows) {
  IntRows g;
  for (const auto& r : rows) {
    g.emplace_back();
    for (long v : r) g.back().emplace_back(v);
  }
  return ToralMap(std::move(g));
}

ToralMap ToralMap::identity(std::size_t d) {
  IntRows g(d, std::vector<Integer>(d, 0));
  for (std::size_t i = 0; i < d; ++i) g[i][i] = 1;
  return ToralMap(std::move(g));
}

ToralMap operator*(const ToralMap& a, const ToralMap& b) {
  if (a.d() != b.d()) throw InvalidInput("toral maps of different dimensions");
  ToralMap out;
  out.g_ = multiply(a.g_, b.g_);
  out.det_ = a.det_ * b.det_;
  return out;
}

std::string to_string(const ToralMap& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.d(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.d(); ++j) s += (j ? ", " : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

ToralMap inverse(const ToralMap& m) {
  const std::size_t n = m.d();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(a[p][c]) == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntRows g(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = a[i][n + j].get_num();
  return ToralMap(std::move(g));
}

ToralMap transpose(const ToralMap& m) {
  IntRows g(m.d(), std::vector<Integer>(m.d()));
  for (std::size_t i = 0; i < m.d(); ++i)
    for (std::size_t j = 0; j < m.d(); ++j) g[i][j] = m(j, i);
  return ToralMap(std::move(g));
}

ToralMap contragredient(const ToralMap& m) { return inverse(transpose(m)); }

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
Poly char_poly(const ToralMap& m) {
  const std::size_t n = m.d();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntRows mk(n, std::vector<Integer>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    IntRows next = multiply(m.rows(), mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    IntRows am = multiply(m.rows(), mk);
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::vector<Rational> q;
  for (const auto& v : c) q.emplace_back(v);
  return Poly(std::move(q));
}

std::string to_string(Hyperbolicity h) {
  switch (h) {
    case Hyperbolicity::hyperbolic:
      return "hyperbolic";
    case Hyperbolicity::not_hyperbolic:
      return "not_hyperbolic";
    case Hyperbolicity::indeterminate:
      break;
  }
  return "indeterminate";
}

Hyperbolicity hyperbolicity(const ToralMap& m) {
  Poly p = char_poly(m);
  if (p.sign_at(1) == 0 || p.sign_at(-1) == 0) return Hyperbolicity::not_hyperbolic;
  Poly r = gcd(p, p.reversed(m.d()));
  if (r.degree() <= 0) return Hyperbolicity::hyperbolic;
  Poly q = squarefree_part(palindromic_reduction(r));
  if (q.degree() <= 0) return Hyperbolicity::hyperbolic;
  bool on_circle = q.sign_at(-2) == 0 || SturmSequence(q).count(-2, 2) > 0;
  return on_circle ? Hyperbolicity::not_hyperbolic : Hyperbolicity::hyperbolic;
}

namespace {

std::vector<RootDisk> roots_off_unit_circle(const Poly& p, unsigned& bits) {
  for (;; bits *= 2) {
    if (bits > max_precision_bits()) throw Indeterminate("moduli not separated from 1 at the precision ceiling");
    std::vector<RootDisk> roots = isolate_roots(p, bits);
    bool separated = std::all_of(roots.begin(), roots.end(), [](const RootDisk& r) { return !r.modulus().contains(1); });
    if (separated) return roots;
  }
}

RationalInterval hull_min(const RationalInterval& a, const RationalInterval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
RationalInterval hull_max(const RationalInterval& a, const RationalInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace

SpectralBands spectral_bands(const ToralMap& m, unsigned bits) {
  if (hyperbolicity(m) != Hyperbolicity::hyperbolic) throw InvalidInput("spectral bands need a hyperbolic map");
  std::vector<RootDisk> roots = roots_off_unit_circle(char_poly(m), bits);
  SpectralBands b;
  bool any_stable = false, any_unstable = false;
  for (const auto& r : roots) {
    RationalInterval mod = r.modulus();
    std::size_t k = static_cast<std::size_t>(r.multiplicity);
    if (mod.hi < 1) {
      b.lambda1 = any_stable ? hull_min(b.lambda1, mod) : mod;
      b.lambda2 = any_stable ? hull_max(b.lambda2, mod) : mod;
      b.s += k;
      any_stable = true;
    } else {
      b.mu2 = any_unstable ? hull_min(b.mu2, mod) : mod;
      b.mu1 = any_unstable ? hull_max(b.mu1, mod) : mod;
      b.u += k;
      any_unstable = true;
    }
  }
  if (!any_stable || !any_unstable) throw VerificationFailure("unimodular hyperbolic map without both stable and unstable roots");
  return b;
}

namespace {

Rational pow2(long k) {
  Rational r = 1;
  if (k >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
  return r;
}

Rational snap(const Rational& v, unsigned bits, bool up) {
  mpz_class num = v.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  mpz_class q;
  if (up) mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  else mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  Rational out(q);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

// 2 atanh(z) = 2 sum z^(2j+1)/(2j+1) for 0 <= z <= 1/3, as an interval.
RationalInterval two_atanh(const Rational& z, unsigned bits) {
  const unsigned grid = bits + 16;
  Rational zl = snap(z, grid, false), zh = snap(z, grid, true);
  Rational lo = 0, hi = 0, pl = zl, ph = zh;
  Rational zl2 = snap(zl * zl, grid, false), zh2 = snap(zh * zh, grid, true);
  Rational eps = pow2(-static_cast<long>(bits) - 4);
  long j = 0;
  for (; ph > eps; ++j) {
    lo += snap(pl / (2 * j + 1), grid, false);
    hi += snap(ph / (2 * j + 1), grid, true);
    pl = snap(pl * zl2, grid, false);
    ph = snap(ph * zh2, grid, true);
  }
  // tail: sum_{i>=j} z^(2i+1)/(2i+1) <= ph / (1 - z^2)
  hi += ph / (1 - zh2);
  return {2 * lo, 2 * hi};
}

RationalInterval log2_interval(unsigned bits) { return two_atanh(Rational(1, 3), bits); }

// log y = k log 2 + 2 atanh((m-1)/(m+1)), y = 2^k m with 1 <= m < 2
RationalInterval log_bounds(const Rational& y, unsigned bits) {
  if (sgn(y) <= 0) throw InvalidInput("logarithm of a non-positive number");
  long k = static_cast<long>(mpz_sizeinbase(y.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(y.get_den().get_mpz_t(), 2));
  Rational m = y * pow2(-k);
  while (m >= 2) {
    m /= 2;
    ++k;
  }
  while (m < 1) {
    m *= 2;
    --k;
  }
  RationalInterval l2 = log2_interval(bits + 8);
  RationalInterval lm = two_atanh((m - 1) / (m + 1), bits + 8);
  RationalInterval kl = k >= 0 ? RationalInterval{l2.lo * k, l2.hi * k} : RationalInterval{l2.hi * k, l2.lo * k};
  return kl + lm;
}

}  // namespace

RationalInterval log_interval(const RationalInterval& x, unsigned bits) {
  return {log_bounds(x.lo, bits).lo, log_bounds(x.hi, bits).hi};
}

bool brin_manning(const SpectralBands& b) {
  for (unsigned bits = 64; bits <= max_precision_bits(); bits *= 2) {
    RationalInterval l1 = log_interval(b.lambda1, bits), l2 = log_interval(b.lambda2, bits);
    RationalInterval m1 = log_interval(b.mu1, bits), m2 = log_interval(b.mu2, bits);
    if (l1.contains_zero() || l2.contains_zero() || m1.contains_zero() || m2.contains_zero())
      throw Indeterminate("band enclosure touches 1");
    RationalInterval one{1, 1};
    RationalInterval first = one + m2 / m1 - l1 / l2;
    RationalInterval second = one + l2 / l1 - m1 / m2;
    if (sgn(first.lo) > 0 && sgn(second.lo) > 0) return true;
    if (sgn(first.hi) < 0 || sgn(second.hi) < 0) return false;
    Rational band_width = std::max({b.lambda1.width(), b.lambda2.width(), b.mu1.width(), b.mu2.width()});
    Rational log_width = std::max({l1.width(), l2.width(), m1.width(), m2.width()});
    if (log_width < 4 * band_width) break;
  }
  throw Indeterminate("Brin-Manning inequalities undecided at this band precision");
}

bool brin_manning(const ToralMap& m) {
  for (unsigned bits = 64;; bits *= 2) {
    try {
      return brin_manning(spectral_bands(m, bits));
    } catch (const Indeterminate&) {
      if (bits * 2 > max_precision_bits()) throw Indeterminate("Brin-Manning inequalities undecided at the precision ceiling");
    }
  }
}

bool codimension_one(const ToralMap& m) {
  if (hyperbolicity(m) != Hyperbolicity::hyperbolic) return false;
  Poly p = char_poly(m);
  return real_roots_above(p, 0) == static_cast<int>(m.d()) && real_roots_above(p, 1) == 1;
}

bool is_anosov_toral(const ToralMap& m) {
  Hyperbolicity h = hyperbolicity(m);
  if (h == Hyperbolicity::indeterminate) throw Indeterminate("hyperbolicity undecided");
  return h == Hyperbolicity::hyperbolic;
}

namespace {

// Res_t(p(t), t^d p(y/t)) as a polynomial in y; its roots are the products
// z_i z_j, among them every |z|^2.
Poly modulus_polynomial(const Poly& p) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  const std::size_t points = d * d + 1;
  std::vector<Rational> xs, ys;
  for (std::size_t y = 0; y < points; ++y) {
    // Sylvester matrix of f = p and g = sum c_k y^k t^(d-k), both of formal degree d
    std::vector<Integer> f(d + 1), g(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
      f[k] = p.coeff(k).get_num();
      Integer yk = 1;
      for (std::size_t e = 0; e < k; ++e) yk *= static_cast<unsigned long>(y);
      g[d - k] = p.coeff(k).get_num() * yk;
    }
    IntRows s(2 * d, std::vector<Integer>(2 * d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k <= d; ++k) {
        s[i][i + k] = f[d - k];
        s[d + i][i + k] = g[d - k];
      }
    xs.emplace_back(static_cast<long>(y));
    ys.emplace_back(bareiss_det(std::move(s)));
  }
  // Lagrange interpolation
  Poly out;
  for (std::size_t i = 0; i < points; ++i) {
    Poly basis = Poly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points; ++j) {
      if (j == i) continue;
      basis = basis * Poly(std::vector<Rational>{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    out = out + Rational(ys[i] / denom) * basis;
  }
  return out;
}

struct Cluster {
  RationalInterval modulus;
  std::size_t dim = 0;
};

// Distinct moduli in increasing order. Conjugate roots share a modulus
// exactly; any other overlap is settled on the modulus polynomial, whose
// isolating intervals identify equal squared moduli.
std::vector<Cluster> modulus_clusters(const Poly& p, unsigned bits) {
  std::vector<RootDisk> roots = isolate_roots(p, bits);
  const std::size_t n = roots.size();
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) rep[i] = std::min(i, roots[i].conjugate);
  auto find = [&](std::size_t i) {
    while (rep[i] != i) i = rep[i];
    return i;
  };
  auto overlaps = [](const RationalInterval& a, const RationalInterval& b) { return !(a.hi < b.lo || b.hi < a.lo); };
  bool need_exact = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (find(i) != find(j) && overlaps(roots[i].modulus(), roots[j].modulus())) need_exact = true;

  if (need_exact) {
    Poly mp = squarefree_part(modulus_polynomial(p));
    SturmSequence sturm(mp);
    for (unsigned b = bits;; b *= 2) {
      if (b > max_precision_bits()) throw Indeterminate("moduli not separated at the precision ceiling");
      if (b != bits) roots = isolate_roots(p, b);
      std::vector<RationalInterval> sq;
      for (const auto& r : roots) {
        RationalInterval m = r.modulus();
        sq.push_back({m.lo * m.lo, m.hi * m.hi});
      }
      bool settled = true;
      for (std::size_t i = 0; i < n && settled; ++i) {
        for (std::size_t j = i + 1; j < n && settled; ++j) {
          if (find(i) == find(j) || !overlaps(sq[i], sq[j])) continue;
          RationalInterval hull{std::min(sq[i].lo, sq[j].lo), std::max(sq[i].hi, sq[j].hi)};
          // one root of the modulus polynomial in the hull: both squared moduli are that root
          Rational below = hull.lo - pow2(-static_cast<long>(b));
          if (sturm.count(below, hull.hi) == 1) {
            rep[find(j)] = find(i);
          } else {
            settled = false;
          }
        }
      }
      if (settled) break;
      for (std::size_t i = 0; i < n; ++i) rep[i] = std::min(i, roots[i].conjugate);
    }
  }

  std::map<std::size_t, Cluster> by_rep;
  for (std::size_t i = 0; i < n; ++i) {
    Cluster& c = by_rep[find(i)];
    RationalInterval m = roots[i].modulus();
    if (c.dim == 0) c.modulus = m;
    else c.modulus = {std::max(c.modulus.lo, m.lo), std::min(c.modulus.hi, m.hi)};
    c.dim += static_cast<std::size_t>(roots[i].multiplicity);
  }
  std::vector<Cluster> out;
  for (auto& [k, c] : by_rep) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.modulus.hi < b.modulus.lo; });
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (!(out[i].modulus.hi < out[i + 1].modulus.lo)) throw Indeterminate("distinct moduli not ordered by their enclosures");
  return out;
}

bool diagonalizable(const ToralMap& m) {
  Poly s = squarefree_part(char_poly(m)).primitive();
  const std::size_t n = m.d();
  // Horner: s(A) = (...(c_k A + c_{k-1}) A + ...)
  IntRows acc(n, std::vector<Integer>(n, 0));
  for (int k = s.degree(); k >= 0; --k) {
    acc = multiply(acc, m.rows());
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += s.coeff(static_cast<std::size_t>(k)).get_num();
  }
  for (const auto& r : acc)
    for (const auto& v : r)
      if (v != 0) return false;
  return true;
}

}  // namespace

// Per cut the splitting E (moduli <= rho_e) + F (moduli >= rho_f) satisfies
// |A^n v| / |A^n w| <= C e^{-lambda n} for unit v in E, w in F, in a norm
// adapted to A. Diagonalizable A: eigenbasis norm, C = 1, lambda = log(rho_f/rho_e).
// Jordan blocks: scale the off-diagonal entries below eps = (rho_f - rho_e)/4,
// so |A|_E| <= rho_e + eps and |A^-1|_F|^-1 >= rho_f - eps; C = 1 and
// lambda = log((rho_e + 3 rho_f) / (3 rho_e + rho_f)).
std::vector<DominationCertificate> dominated_gaps(const ToralMap& m, unsigned bits) {
  std::vector<Cluster> clusters = modulus_clusters(char_poly(m), bits);
  bool diag = diagonalizable(m);
  std::vector<DominationCertificate> out;
  std::size_t below = 0;
  for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
    below += clusters[i].dim;
    DominationCertificate c;
    c.dim_e = below;
    c.dim_f = m.d() - below;
    c.rho_e = clusters[i].modulus;
    c.rho_f = clusters[i + 1].modulus;
    c.gap = c.rho_f / c.rho_e;
    c.c = 1;
    c.diagonalizable = diag;
    if (diag) {
      c.lambda = log_interval(c.gap, bits);
    } else {
      RationalInterval three{3, 3};
      RationalInterval ratio = (c.rho_e + three * c.rho_f) / (three * c.rho_e + c.rho_f);
      c.lambda = log_interval(ratio, bits);
    }
    out.push_back(std::move(c));
  }
  return out;
}

WordPredicate parse_word_predicate(const std::string& s) {
  if (s == "hyperbolic") return WordPredicate::hyperbolic;
  if (s == "codim_one" || s == "codim-one" || s == "codim1") return WordPredicate::codim_one;
  if (s == "brin_manning" || s == "brin-manning") return WordPredicate::brin_manning;
  if (s == "anosov") return WordPredicate::anosov;
  throw InvalidInput("unknown predicate '" + s + "'");
}

std::string to_string(WordPredicate p) {
  switch (p) {
    case WordPredicate::hyperbolic:
      return "hyperbolic";
    case WordPredicate::codim_one:
      return "codim_one";
    case WordPredicate::brin_manning:
      return "brin_manning";
    case WordPredicate::anosov:
      break;
  }
  return "anosov";
}

std::string word_to_string(const std::vector<std::size_t>& letters) {
  std::string s;
  for (std::size_t l : letters) {
    if (!s.empty()) s += ' ';
    s += "g" + std::to_string(l / 2 + 1) + (l % 2 ? "^-1" : "");
  }
  return s;
}

bool satisfies(const ToralMap& m, WordPredicate p) {
  switch (p) {
    case WordPredicate::hyperbolic:
    case WordPredicate::anosov:
      return is_anosov_toral(m);
    case WordPredicate::codim_one:
      return codimension_one(m);
    case WordPredicate::brin_manning:
      return is_anosov_toral(m) && brin_manning(m);
  }
  return false;
}

std::vector<WordHit> search_words(const std::vector<ToralMap>& generators, std::size_t max_len, WordPredicate predicate,
                                  bool semigroup, unsigned threads) {
  if (generators.empty()) throw InvalidInput("word search needs at least one generator");
  const std::size_t d = generators.front().d();
  for (const auto& g : generators)
    if (g.d() != d) throw InvalidInput("generators of different dimensions");
  std::vector<ToralMap> letters;
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(inverse(g));
  }
  const std::size_t alphabet = letters.size();

  std::vector<WordHit> candidates;
  std::set<ToralMap> seen;
  std::vector<WordHit> level{WordHit{{}, ToralMap::identity(d)}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<WordHit> next;
    for (const auto& w : level) {
      for (std::size_t l = 0; l < alphabet; ++l) {
        if (semigroup && l % 2 == 1) continue;
        if (!w.letters.empty() && (w.letters.back() ^ 1u) == l) continue;
        WordHit h{w.letters, w.matrix * letters[l]};
        h.letters.push_back(l);
        if (seen.insert(h.matrix).second) candidates.push_back(h);
        next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }

  std::vector<char> keep(candidates.size(), 0);
  std::vector<std::exception_ptr> errors(candidates.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < candidates.size(); i += stride) {
      try {
        keep[i] = satisfies(candidates[i].matrix, predicate);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, candidates.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    for (auto& th : pool) th.join();
  }
  std::vector<WordHit> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (keep[i]) out.push_back(std::move(candidates[i]));
  }
  return out;
}

std::vector<ToralMap> sp4_generators() {
  return {
      ToralMap::from_longs({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}),
      ToralMap::from_longs({{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      ToralMap::from_longs({{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      ToralMap::from_longs({{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
  };
}

}  // namespace hypform
