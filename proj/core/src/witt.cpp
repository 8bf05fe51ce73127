#include <hypform/error.hpp>
#include <hypform/witt.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace hypform {

namespace {

std::vector<Vector> concat(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Rows x^T G for each x, so that (rows * v)_i = pair(x_i, v).
Matrix pairing_rows(const FormSpace& space, const std::vector<Vector>& xs) {
  return Matrix::from_rows(xs, space.dim()) * space.gram();
}

Subspace span_of(const FormSpace& space, const std::vector<Vector>& vs) { return Subspace::span(space.dim(), vs); }

// Isotropic partners z_i of the isotropic list w inside u^perp, with
// pair(w_i, z_j) = delta_ij and pair(z_i, z_j) = 0.
std::vector<Vector> isotropic_partners(const FormSpace& space, const std::vector<Vector>& u,
                                       const std::vector<Vector>& w) {
  Matrix rows = pairing_rows(space, concat(u, w));
  std::vector<Vector> z;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Vector rhs(u.size() + w.size());
    rhs[u.size() + i] = Scalar(1);
    auto sol = solve(rows, rhs);
    if (!sol) throw VerificationFailure("no hyperbolic partner for a radical vector");
    z.push_back(std::move(*sol));
  }
  std::vector<Vector> out = z;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      Scalar c = space.pair(z[i], z[j]);
      if (!c.is_zero()) out[i] = out[i] - (c / Scalar(2)) * w[j];
    }
  }
  return out;
}

// Columns u | w | z | c of an adapted basis of V with Gram
// diag(du) + hyperbolic(w, z) + diag(dc).
struct QFrame {
  std::vector<Vector> u;
  std::vector<Scalar> du;
  std::vector<Vector> w;
  std::vector<Vector> z;
  std::vector<Vector> c;
  std::vector<Scalar> dc;

  std::vector<Vector> columns() const { return concat(concat(concat(u, w), z), c); }
};

// Square class of a nonzero rational: sign times the odd-exponent part of
// num * den, found by trial division below 1000 (a larger cofactor is kept
// whole). Level >= 1 scalars get no class.
struct SquareClass {
  bool known = false;
  int sign = 0;
  Integer kernel;
  double bits = 0;
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.known && b.known && a.sign == b.sign && a.kernel == b.kernel;
  }
};

SquareClass square_class(const Scalar& x) {
  SquareClass c;
  if (!x.is_rational() || x.is_zero()) return c;
  c.known = true;
  c.sign = sgn(x.rational());
  Integer m = abs(x.rational().get_num()) * x.rational().get_den();
  c.kernel = 1;
  for (unsigned long p = 2; p < 1000 && m > 1; p += p == 2 ? 1 : 2) {
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2) c.kernel *= p;
  }
  if (m > 1 && !mpz_perfect_square_p(m.get_mpz_t())) c.kernel *= m;
  c.bits = static_cast<double>(mpz_sizeinbase(c.kernel.get_mpz_t(), 2));
  return c;
}

// Basis of the lattice W cap Z^d from the RREF basis of W: the integer
// coefficient vectors c with c R integral, found as a left kernel.
std::vector<Vector> saturated_basis(const FormSpace& space, const std::vector<Vector>& vs) {
  const std::size_t d = space.dim();
  std::vector<Vector> r = Subspace::span(d, vs).vectors();
  const std::size_t k = r.size();
  Integer den = 1;
  for (const auto& v : r)
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den().get_mpz_t());
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < d; ++j) {
    bool pivot = false;
    for (std::size_t i = 0; i < k && !pivot; ++i) {
      std::size_t lead = 0;
      while (r[i][lead].is_zero()) ++lead;
      pivot = lead == j;
    }
    if (!pivot) free_cols.push_back(j);
  }
  const std::size_t m = free_cols.size(), rows = k + m;
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(m + rows, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < m; ++t) a[i][t] = r[i][free_cols[t]].rational().get_num() * (den / r[i][free_cols[t]].rational().get_den());
  for (std::size_t t = 0; t < m; ++t) a[k + t][t] = den;
  for (std::size_t i = 0; i < rows; ++i) a[i][m + i] = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m && top < rows; ++col) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = top; i < rows; ++i)
        if (a[i][col] != 0 && (best == rows || abs(a[i][col]) < abs(a[best][col]))) best = i;
      if (best == rows) break;
      std::swap(a[top], a[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows; ++i) {
        if (a[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[top][col].get_mpz_t());
        for (std::size_t t = col; t < m + rows; ++t) a[i][t] -= q * a[top][t];
        if (a[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (a[top][col] != 0) ++top;
  }
  std::vector<Vector> out;
  for (std::size_t i = top; i < rows; ++i) {
    Vector v(d);
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][m + t] != 0) v = v + Scalar(Rational(a[i][m + t])) * r[t];
    out.push_back(std::move(v));
  }
  return out;
}

// Lattice basis of span(vs) cap Z^d, LLL-reduced for the indefinite form
// (absolute values of the Gram-Schmidt norms); short vectors have small
// values. Vectors with irrational entries are returned unchanged.
std::vector<Vector> reduced_basis(const FormSpace& space, std::vector<Vector> vs) {
  for (const auto& v : vs)
    for (const auto& x : v)
      if (!x.is_rational()) return vs;
  if (vs.size() < 2) return vs;
  vs = saturated_basis(space, vs);
  const std::size_t k = vs.size();
  Matrix g = space.gram(vs);
  std::vector<std::vector<Integer>> u(k, std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;
  auto inner = [&](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] != 0)
        for (std::size_t j = 0; j < k; ++j)
          if (y[j] != 0) s += g(i, j).rational() * Rational(x[i] * y[j]);
    return s;
  };
  std::vector<std::vector<Rational>> mu(k, std::vector<Rational>(k));
  std::vector<Rational> q(k);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      q[i] = inner(u[i], u[i]);
      for (std::size_t j = 0; j < i; ++j) {
        Rational d = inner(u[i], u[j]);
        for (std::size_t t = 0; t < j; ++t) d -= mu[j][t] * mu[i][t] * q[t];
        mu[i][j] = d / q[j];
        q[i] -= mu[i][j] * mu[i][j] * q[j];
      }
      if (sgn(q[i]) == 0) return false;
    }
    return true;
  };
  bool ok = gram_schmidt();
  std::size_t i = 1;
  for (int guard = 0; ok && i < k && guard < 1000; ++guard) {
    for (std::size_t j = i; j-- > 0 && ok;) {
      Integer r, num = mu[i][j].get_num() * 2 + mu[i][j].get_den(), dd = mu[i][j].get_den() * 2;
      mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), dd.get_mpz_t());
      if (r == 0) continue;
      for (std::size_t t = 0; t < k; ++t) u[i][t] -= r * u[j][t];
      ok = gram_schmidt();
    }
    if (!ok) break;
    if (abs(q[i] + mu[i][i - 1] * mu[i][i - 1] * q[i - 1]) >= Rational(3, 4) * abs(q[i - 1])) {
      ++i;
    } else {
      std::swap(u[i], u[i - 1]);
      ok = gram_schmidt();
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  std::vector<Vector> out;
  for (std::size_t r = 0; r < k; ++r) {
    Vector v(space.dim());
    for (std::size_t t = 0; t < k; ++t)
      if (u[r][t] != 0) v = v + Scalar(Rational(u[r][t])) * vs[t];
    out.push_back(std::move(v));
  }
  return out;
}

struct Candidate {
  Vector v;
  Scalar value;
  SquareClass cls;
  std::size_t drop = 0;
};

// Small integer combinations of cur with nonzero value.
std::vector<Candidate> candidates(const FormSpace& space, std::vector<Vector>& cur, std::mt19937_64& rng) {
  cur = reduced_basis(space, std::move(cur));
  const std::size_t k = cur.size();
  Matrix g = space.gram(cur);
  std::vector<std::vector<int>> coeffs;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> c(k, 0);
    c[i] = 1;
    coeffs.push_back(c);
    for (std::size_t j = i + 1; j < k; ++j) {
      c[j] = 1;
      coeffs.push_back(c);
      c[j] = -1;
      coeffs.push_back(c);
      c[j] = 0;
    }
  }
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < 60 && k > 1; ++t) {
    std::vector<int> c(k);
    for (auto& x : c) x = coef(rng);
    coeffs.push_back(c);
  }
  std::vector<Candidate> out;
  for (const auto& c : coeffs) {
    Scalar val;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (c[i] && c[j]) val += Scalar(c[i] * c[j]) * g(i, j);
    if (val.is_zero()) continue;
    Candidate cand;
    cand.v = Vector(space.dim());
    cand.drop = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!c[i]) continue;
      cand.v = cand.v + Scalar(c[i]) * cur[i];
      if (cand.drop == k) cand.drop = i;
    }
    cand.value = val;
    cand.cls = square_class(val);
    out.push_back(std::move(cand));
  }
  // a diagonal basis shows every sign of the signature
  Diagonalization d = diagonalize(space, cur);
  for (std::size_t r = 0; r < d.rank; ++r) {
    Candidate cand;
    cand.v = d.vectors[r];
    cand.value = d.values[r];
    cand.cls = square_class(cand.value);
    cand.drop = k;
    for (std::size_t i = 0; i < k && cand.drop == k; ++i)
      if (!d.transform(r, i).is_zero()) cand.drop = i;
    out.push_back(std::move(cand));
  }
  if (out.empty()) throw VerificationFailure("no anisotropic vector in a non-degenerate span");
  return out;
}

// Replaces cur by a basis of the orthogonal complement of the chosen vector.
void split_off(const FormSpace& space, std::vector<Vector>& cur, const Candidate& c, std::vector<Vector>& out,
               std::vector<Scalar>& values) {
  std::vector<Vector> next;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (i == c.drop) continue;
    Scalar t = space.pair(cur[i], c.v) / c.value;
    next.push_back(t.is_zero() ? cur[i] : cur[i] - t * c.v);
  }
  out.push_back(c.v);
  values.push_back(c.value);
  cur = std::move(next);
}

// Square classes of the positive rationals whose roots a frame match will
// adjoin: a group of squarefree kernels, closed under products.
struct RootGroup {
  std::vector<Integer> kernels{Integer(1)};

  static Integer ratio(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return (a / g) * (b / g);
  }
  bool contains(const Integer& k) const { return std::find(kernels.begin(), kernels.end(), k) != kernels.end(); }
  void add(const Integer& k) {
    if (contains(k) || kernels.size() >= 256) return;
    std::size_t m = kernels.size();
    for (std::size_t i = 0; i < m; ++i) kernels.push_back(ratio(kernels[i], k));
  }
};

// Orthogonal bases of two non-degenerate spans of equal signature, chosen
// step by step. Each pair of values has equal sign; pairs whose ratio is a
// square in the roots adjoined so far are preferred, then the pair whose
// ratio has the smallest class. Collisions keep the complements isometric.
void paired_orthogonal_bases(const FormSpace& space, std::vector<Vector> cur1, std::vector<Vector> cur2,
                             std::vector<Vector>& out1, std::vector<Scalar>& val1, std::vector<Vector>& out2,
                             std::vector<Scalar>& val2, RootGroup& roots) {
  std::mt19937_64 rng(0x0b5);
  while (!cur2.empty()) {
    std::vector<Candidate> b = candidates(space, cur2, rng);
    std::vector<Candidate> a = candidates(space, cur1, rng);
    std::size_t ai = a.size(), bi = b.size();
    bool best_free = false;
    double best_bits = 1e18;
    Integer best_ratio;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (sign_of(a[i].value) != sign_of(b[j].value)) continue;
        bool known = a[i].cls.known && b[j].cls.known;
        Integer r = known ? RootGroup::ratio(a[i].cls.kernel, b[j].cls.kernel) : Integer(0);
        bool free = known && roots.contains(r);
        double bits = !known ? 1e9 : free ? std::max(a[i].cls.bits, b[j].cls.bits)
                                        : static_cast<double>(mpz_sizeinbase(r.get_mpz_t(), 2));
        if ((free && !best_free) || (free == best_free && bits < best_bits)) {
          best_free = free;
          best_bits = bits;
          best_ratio = r;
          ai = i;
          bi = j;
        }
      }
    if (ai == a.size()) throw VerificationFailure("signature parts do not match");
    if (!best_free && best_ratio != 0) roots.add(best_ratio);
    split_off(space, cur1, a[ai], out1, val1);
    split_off(space, cur2, b[bi], out2, val2);
  }
}

void add_partners(const FormSpace& space, QFrame& f) { f.z = isotropic_partners(space, f.u, f.w); }

std::vector<Vector> rest_of(const FormSpace& space, const QFrame& f) {
  Subspace core = span_of(space, concat(concat(f.u, f.w), f.z));
  Subspace rest = perp(space, core);
  if (!radical(space, rest).is_zero()) throw VerificationFailure("complement of a hyperbolic completion is degenerate");
  return rest.vectors();
}

// Fills in z and c for frames whose u and w parts are set.
void complete_frames(const FormSpace& space, QFrame& f1, QFrame& f2, RootGroup roots = {}) {
  add_partners(space, f1);
  add_partners(space, f2);
  paired_orthogonal_bases(space, rest_of(space, f1), rest_of(space, f2), f1.c, f1.dc, f2.c, f2.dc, roots);
}

std::pair<QFrame, QFrame> frame_pair(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  QFrame f1, f2;
  RootGroup roots;
  Subspace r1 = radical(space, w1), r2 = radical(space, w2);
  paired_orthogonal_bases(space, complement_in(w1, r1), complement_in(w2, r2), f1.u, f1.du, f2.u, f2.du, roots);
  f1.w = r1.vectors();
  f2.w = r2.vectors();
  complete_frames(space, f1, f2, roots);
  return {std::move(f1), std::move(f2)};
}

// Pairs each a_j with a b-entry of the same sign and returns s_j > 0 with
// s_j^2 b[perm_j] = a_j. Roots are adjoined to ctx on demand; partners whose
// ratio is already a square are preferred, the same index first.
struct Matching {
  std::vector<std::size_t> perm;
  std::vector<Scalar> scale;
};

Matching match_values(const std::vector<Scalar>& a, const std::vector<Scalar>& b, TowerContext& ctx) {
  if (a.size() != b.size()) throw VerificationFailure("frame parts of different sizes");
  Matching m;
  std::vector<bool> used(b.size(), false);
  for (std::size_t j = 0; j < a.size(); ++j) {
    int sa = sign_of(a[j]);
    std::size_t pick = b.size();
    if (j < b.size() && !used[j] && sign_of(b[j]) == sa && sqrt_in(ctx.top(), a[j] / b[j])) pick = j;
    for (std::size_t k = 0; k < b.size() && pick != j; ++k) {
      if (used[k] || sign_of(b[k]) != sa) continue;
      if (pick == b.size()) pick = k;
      if (sqrt_in(ctx.top(), a[j] / b[k])) {
        pick = k;
        break;
      }
    }
    if (pick == b.size()) throw VerificationFailure("signature parts do not match");
    used[pick] = true;
    auto [next, root] = ctx.adjoin_sqrt(a[j] / b[pick]);
    ctx = next;
    m.perm.push_back(pick);
    m.scale.push_back(root);
  }
  return m;
}

TowerContext context_of_vectors(const std::vector<Vector>& vs) {
  TowerNodePtr top;
  for (const auto& v : vs)
    for (const auto& s : v)
      if (!s.is_rational()) top = join_nodes(top, s.node());
  return TowerContext(top);
}

// h = F2' F1^-1 where F2' rescales and permutes the diagonal parts of f2.
// The scales are positive, so sign(det h) is read off the unscaled frames.
struct FrameMap {
  Matrix h;
  int det_sign = 1;
};

FrameMap frame_map(const FormSpace& space, const QFrame& f1, const QFrame& f2, bool match_u, TowerContext* shared) {
  TowerContext ctx = context_of_vectors(concat(f1.columns(), f2.columns()));
  if (shared) ctx = TowerContext::join(*shared, ctx);
  std::vector<Vector> target, unscaled;
  if (match_u) {
    Matching mu = match_values(f1.du, f2.du, ctx);
    for (std::size_t j = 0; j < f1.u.size(); ++j) {
      target.push_back(mu.scale[j] * f2.u[mu.perm[j]]);
      unscaled.push_back(f2.u[mu.perm[j]]);
    }
  } else {
    target = f2.u;
    unscaled = f2.u;
  }
  target = concat(concat(target, f2.w), f2.z);
  unscaled = concat(concat(unscaled, f2.w), f2.z);
  Matching mc = match_values(f1.dc, f2.dc, ctx);
  for (std::size_t j = 0; j < f1.c.size(); ++j) {
    target.push_back(mc.scale[j] * f2.c[mc.perm[j]]);
    unscaled.push_back(f2.c[mc.perm[j]]);
  }

  Matrix src = Matrix::from_columns(f1.columns(), space.dim());
  auto inv = inverse(src);
  if (!inv) throw VerificationFailure("adapted frame is singular");
  if (shared) *shared = ctx;
  FrameMap out;
  out.h = Matrix::from_columns(target, space.dim()) * *inv;
  out.det_sign = sign_of(determinant(Matrix::from_columns(unscaled, space.dim()))) * sign_of(determinant(src));
  return out;
}

void require_space(const FormSpace& space, FormKind kind, const Subspace& w1, const Subspace& w2) {
  if (space.kind() != kind) throw InvalidInput("operation needs a " + to_string(kind) + " space");
  if (w1.ambient() != space.dim() || w2.ambient() != space.dim())
    throw InvalidInput("subspace does not live in the space");
}

}  // namespace

Matrix SymplecticBasis::matrix() const {
  std::size_t dim = 2 * e.size();
  return Matrix::from_columns(concat(e, f), dim);
}

WittArtinDecomposition witt_artin(const FormSpace& space, const Subspace& w) {
  if (space.kind() != FormKind::sp) throw InvalidInput("Witt-Artin decomposition needs a symplectic space");
  if (w.ambient() != space.dim()) throw InvalidInput("subspace does not live in the space");
  WittArtinDecomposition d;
  Subspace wp = perp(space, w);
  d.rad = intersect(w, wp);
  d.h = span_of(space, complement_in(w, d.rad));
  d.jc = span_of(space, complement_in(wp, d.rad));
  d.rest = perp(space, sum(d.h, d.jc));

  auto trivial = [](const Subspace& a, const Subspace& b) { return intersect(a, b).is_zero(); };
  bool ok = sum(d.h, d.rad) == w && trivial(d.h, d.rad) && sum(d.jc, d.rad) == wp && trivial(d.jc, d.rad) &&
            perp(space, d.h).contains(d.jc) && perp(space, d.h).contains(d.rest) &&
            perp(space, d.jc).contains(d.rest) && d.h.dim() + d.jc.dim() + d.rest.dim() == space.dim() &&
            d.rest.contains(d.rad) && 2 * d.rad.dim() == d.rest.dim() && perp(space, d.rad).contains(d.rad);
  if (!ok) throw VerificationFailure("Witt-Artin decomposition failed its invariants");
  return d;
}

SymplecticBasis symplectic_complete(const FormSpace& space, const std::vector<Vector>& es,
                                    const std::vector<Vector>& fs) {
  if (space.kind() != FormKind::sp) throw InvalidInput("symplectic completion needs a symplectic space");
  std::size_t n = space.n();
  for (const auto& v : concat(es, fs)) {
    if (v.size() != space.dim()) throw InvalidInput("vector does not live in the space");
  }
  if (es.size() > n || fs.size() > es.size()) throw InvalidInput("too many vectors for a partial symplectic basis");
  if (rank(Matrix::from_rows(es, space.dim())) != es.size()) throw InvalidInput("partial basis vectors are dependent");
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (!space.pair(es[i], es[j]).is_zero()) throw InvalidInput("partial basis is not isotropic");
    }
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (space.pair(es[i], fs[j]) != Scalar(i == j ? 1 : 0)) throw InvalidInput("inconsistent partner vectors");
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (!space.pair(fs[i], fs[j]).is_zero()) throw InvalidInput("inconsistent partner vectors");

  SymplecticBasis b{es, fs};
  Matrix rows = pairing_rows(space, concat(es, fs));
  std::size_t first_new = fs.size();
  for (std::size_t i = first_new; i < es.size(); ++i) {
    Vector rhs(es.size() + fs.size());
    rhs[i] = Scalar(1);
    auto sol = solve(rows, rhs);
    if (!sol) throw InvalidInput("inconsistent partial symplectic data");
    b.f.push_back(std::move(*sol));
  }
  for (std::size_t j = first_new; j < es.size(); ++j) {
    for (std::size_t i = first_new; i < j; ++i) {
      Scalar c = space.pair(b.f[i], b.f[j]);
      if (!c.is_zero()) b.f[j] = b.f[j] + c * b.e[i];
    }
  }

  std::vector<Vector> pool = perp(space, span_of(space, concat(b.e, b.f))).vectors();
  while (!pool.empty()) {
    Vector e = pool.front();
    std::size_t k = 1;
    while (k < pool.size() && space.pair(e, pool[k]).is_zero()) ++k;
    if (k == pool.size()) throw VerificationFailure("symplectic complement is degenerate");
    Vector f = inverse(space.pair(e, pool[k])) * pool[k];
    std::vector<Vector> next;
    for (std::size_t t = 1; t < pool.size(); ++t) {
      if (t == k) continue;
      Vector v = pool[t] - space.pair(pool[t], f) * e + space.pair(pool[t], e) * f;
      if (!is_zero(v)) next.push_back(std::move(v));
    }
    b.e.push_back(std::move(e));
    b.f.push_back(std::move(f));
    pool = std::move(next);
  }
  if (b.e.size() != n || b.matrix().transpose() * space.gram() * b.matrix() != space.gram())
    throw VerificationFailure("symplectic completion failed its own check");
  return b;
}

HyperbolicCompletion hyperbolic_complete(const FormSpace& space, const Subspace& w) {
  if (space.kind() != FormKind::so) throw InvalidInput("hyperbolic completion needs a quadratic space");
  if (w.ambient() != space.dim()) throw InvalidInput("subspace does not live in the space");
  Subspace rad = radical(space, w);
  std::vector<Vector> rest = complement_in(w, rad);
  std::vector<Vector> ws = rad.vectors();
  std::vector<Vector> zs = isotropic_partners(space, rest, ws);
  HyperbolicCompletion hc;
  hc.u = span_of(space, zs);
  for (std::size_t i = 0; i < ws.size(); ++i) hc.pairs.emplace_back(ws[i], zs[i]);
  Subspace total = sum(w, hc.u);
  if (total.dim() != w.dim() + ws.size() || !radical(space, total).is_zero())
    throw VerificationFailure("hyperbolic completion is degenerate");
  return hc;
}

Matrix reflection(const FormSpace& space, const Vector& v) {
  Scalar bvv = space.pair(v, v);
  if (bvv.is_zero()) throw InvalidInput("reflection in an isotropic vector");
  Vector gv = pairing_rows(space, {v}).row(0);
  Matrix s = Matrix::identity(space.dim());
  Scalar c = Scalar(2) / bvv;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < space.dim(); ++j) {
      if (!gv[j].is_zero()) s(i, j) -= c * v[i] * gv[j];
    }
  }
  return s;
}

bool verify_certificate(const IsometryCertificate& cert) {
  const FormSpace& space = cert.space;
  const std::size_t d = space.dim();
  if (cert.h.rows() != d || cert.h.cols() != d || cert.w1.ambient() != d || cert.w2.ambient() != d) return false;
  if (!is_isometry(space, cert.h)) return false;
  if (cert.claim == "maps") {
    if (cert.w1.dim() != cert.w2.dim()) return false;
    for (std::size_t i = 0; i < cert.w1.dim(); ++i) {
      if (!cert.w2.contains(cert.h * cert.w1.vector(i))) return false;
    }
    return true;
  }
  if (cert.claim == "general_position") {
    Subspace moved = image(cert.h, cert.w1);
    if (moved.dim() != cert.w1.dim()) return false;
    std::size_t total = moved.dim() + cert.w2.dim();
    std::size_t expect = total > d ? total - d : 0;
    return intersect(moved, cert.w2).dim() == expect;
  }
  return false;
}

void seal(IsometryCertificate& cert) {
  cert.verified = verify_certificate(cert);
  if (!cert.verified) throw VerificationFailure("certificate failed exact verification");
}

IsometryCertificate transport_sp(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  require_space(space, FormKind::sp, w1, w2);
  if (w1.dim() != w2.dim()) throw Infeasible("dimension mismatch", std::to_string(w1.dim()) + " vs " + std::to_string(w2.dim()));
  RankProfile r1 = symplectic_rank(space, w1), r2 = symplectic_rank(space, w2);
  if (r1.two_r != r2.two_r)
    throw Infeasible("rank mismatch", std::to_string(r1.two_r) + " vs " + std::to_string(r2.two_r));

  auto basis_for = [&](const Subspace& w) {
    Subspace rad = radical(space, w);
    std::vector<Vector> pool = complement_in(w, rad);
    std::vector<Vector> es, fs;
    while (!pool.empty()) {
      Vector e = pool.front();
      std::size_t k = 1;
      while (k < pool.size() && space.pair(e, pool[k]).is_zero()) ++k;
      if (k == pool.size()) throw VerificationFailure("symplectic part of W is degenerate");
      Vector f = inverse(space.pair(e, pool[k])) * pool[k];
      std::vector<Vector> next;
      for (std::size_t t = 1; t < pool.size(); ++t) {
        if (t == k) continue;
        Vector v = pool[t] - space.pair(pool[t], f) * e + space.pair(pool[t], e) * f;
        if (!is_zero(v)) next.push_back(std::move(v));
      }
      es.push_back(std::move(e));
      fs.push_back(std::move(f));
      pool = std::move(next);
    }
    for (auto& r : rad.vectors()) es.push_back(r);
    return symplectic_complete(space, es, fs).matrix();
  };
  Matrix f1 = basis_for(w1), f2 = basis_for(w2);
  // F^-1 = -J F^T J for F in Sp
  const Matrix& j = space.gram();
  Matrix f1inv = Scalar(-1) * (j * f1.transpose() * j);
  IsometryCertificate cert{space, f2 * f1inv, w1, w2, "maps", false};
  seal(cert);
  return cert;
}

Matrix orthogonal_transport(const FormSpace& space, const Subspace& w1, const Subspace& w2, TowerContext* ctx) {
  require_space(space, FormKind::so, w1, w2);
  SignatureTriple s1 = signature(space, w1), s2 = signature(space, w2);
  if (s1 != s2) throw Infeasible("signature mismatch", to_string(s1) + " vs " + to_string(s2));
  auto [f1, f2] = frame_pair(space, w1, w2);
  return frame_map(space, f1, f2, true, ctx).h;
}

std::optional<Vector> anisotropic_vector(const FormSpace& space, const Subspace& w) {
  for (const Subspace& part : {w, perp(space, w)}) {
    Diagonalization d = diagonalize(space, part.vectors());
    if (d.rank > 0) return d.vectors.front();
  }
  return std::nullopt;
}

IsometryCertificate transport_so(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  require_space(space, FormKind::so, w1, w2);
  SignatureTriple s1 = signature(space, w1), s2 = signature(space, w2);
  if (s1 != s2) throw Infeasible("signature mismatch", to_string(s1) + " vs " + to_string(s2));
  auto [f1, f2] = frame_pair(space, w1, w2);
  FrameMap m = frame_map(space, f1, f2, true, nullptr);
  Matrix h = std::move(m.h);
  if (m.det_sign != 1) {
    auto v = anisotropic_vector(space, w1);
    if (!v)
      throw Obstruction("W1 and W2 are Lagrangians in opposite families; only det -1 isometries map one to the other");
    h = h * reflection(space, *v);
  }
  IsometryCertificate cert{space, std::move(h), w1, w2, "maps", false};
  seal(cert);
  return cert;
}

IsometryCertificate witt_extend(const FormSpace& space, const std::vector<Vector>& sources,
                                const std::vector<Vector>& images) {
  if (space.kind() != FormKind::so) throw InvalidInput("Witt extension needs a quadratic space");
  if (sources.size() != images.size()) throw InvalidInput("phi must give one image per source vector");
  for (const auto& v : concat(sources, images))
    if (v.size() != space.dim()) throw InvalidInput("vector does not live in the space");
  if (rank(Matrix::from_rows(sources, space.dim())) != sources.size())
    throw InvalidInput("source vectors are dependent");
  if (space.gram(sources) != space.gram(images) || rank(Matrix::from_rows(images, space.dim())) != images.size())
    throw Infeasible("not a partial isometry");

  Diagonalization d = diagonalize(space, sources);
  auto moved = [&](const std::vector<Vector>& vs, std::size_t from, std::size_t to) {
    std::vector<Vector> out;
    for (std::size_t k = from; k < to; ++k) {
      Vector v(space.dim());
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (!d.transform(k, j).is_zero()) v = v + d.transform(k, j) * vs[j];
      out.push_back(std::move(v));
    }
    return out;
  };
  std::size_t k = sources.size();
  std::vector<Scalar> du(d.values.begin(), d.values.begin() + static_cast<long>(d.rank));
  QFrame f1, f2;
  f1.u = moved(sources, 0, d.rank);
  f2.u = moved(images, 0, d.rank);
  f1.du = f2.du = du;
  f1.w = moved(sources, d.rank, k);
  f2.w = moved(images, d.rank, k);
  complete_frames(space, f1, f2);
  FrameMap m = frame_map(space, f1, f2, false, nullptr);
  Matrix h = std::move(m.h);
  if (m.det_sign != 1) {
    if (f2.c.empty()) throw Obstruction("the image is coisotropic; every extension of phi has det -1");
    h = reflection(space, f2.c.front()) * h;
  }
  Subspace w1 = Subspace::span(space.dim(), sources), w2 = Subspace::span(space.dim(), images);
  for (std::size_t i = 0; i < k; ++i)
    if (h * sources[i] != images[i]) throw VerificationFailure("extension does not restrict to phi");
  IsometryCertificate cert{space, std::move(h), w1, w2, "maps", false};
  seal(cert);
  return cert;
}

IsometryCertificate witt_extend(const FormSpace& space, const Subspace& w1, const Subspace& w2, const Matrix& phi) {
  if (phi.rows() != w1.dim() || phi.cols() != space.dim()) throw InvalidInput("phi must have one row per basis vector of W1");
  std::vector<Vector> images = phi.row_list();
  if (Subspace::span(space.dim(), images) != w2) throw Infeasible("not a partial isometry", "phi(W1) differs from W2");
  return witt_extend(space, w1.vectors(), images);
}

IsometryCertificate transport(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  switch (space.kind()) {
    case FormKind::sp:
      return transport_sp(space, w1, w2);
    case FormKind::so:
      return transport_so(space, w1, w2);
    case FormKind::sl:
      break;
  }
  require_space(space, FormKind::sl, w1, w2);
  if (w1.dim() != w2.dim()) throw Infeasible("dimension mismatch", std::to_string(w1.dim()) + " vs " + std::to_string(w2.dim()));
  Subspace all = Subspace::whole(space.dim());
  std::vector<Vector> c1 = concat(w1.vectors(), complement_in(all, w1));
  std::vector<Vector> c2 = concat(w2.vectors(), complement_in(all, w2));
  Matrix f1 = Matrix::from_columns(c1, space.dim()), f2 = Matrix::from_columns(c2, space.dim());
  Matrix h = f2 * *inverse(f1);
  Scalar det = determinant(h);
  if (det != Scalar(1) && space.dim() > 0) {
    f2.set_col(space.dim() - 1, inverse(det) * f2.col(space.dim() - 1));
    h = f2 * *inverse(f1);
  }
  IsometryCertificate cert{space, std::move(h), w1, w2, "maps", false};
  seal(cert);
  return cert;
}

}  // namespace hypform
