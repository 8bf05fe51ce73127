#include <hypform/error.hpp>
#include <hypform/general_position.hpp>

#include <random>

namespace hypform {

namespace {

struct SpPair {
  std::vector<Vector> y1, y2;
  std::string entry;
  std::vector<std::string> steps;
};

// e_i and f_i of the standard symplectic basis of K^{2n}, 1-based.
Vector e(std::size_t n, std::size_t i) { return unit_vector(2 * n, i - 1); }
Vector f(std::size_t n, std::size_t i) { return unit_vector(2 * n, n + i - 1); }

// K^{2(n-1)} -> K^{2n}, keeping e_i and f_i.
Vector lift(const Vector& v, std::size_t n) {
  Vector out(2 * n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = v[i];
    out[n + i] = v[n - 1 + i];
  }
  return out;
}

std::vector<Vector> lift_all(const std::vector<Vector>& vs, std::size_t n) {
  std::vector<Vector> out;
  for (const auto& v : vs) out.push_back(lift(v, n));
  return out;
}

SpPair swapped(SpPair s) {
  std::swap(s.y1, s.y2);
  return s;
}

std::string profile_text(std::size_t n, std::size_t p, std::size_t r, std::size_t q, std::size_t s) {
  return "n=" + std::to_string(n) + " (p,2r)=(" + std::to_string(p) + "," + std::to_string(2 * r) + ") (q,2s)=(" +
         std::to_string(q) + "," + std::to_string(2 * s) + ")";
}

// Y1 = span{e_1..e_r, f_1..f_r}; Y2 pairs the remaining planes crosswise
// with the first ones: e_{r+i} - e_i, f_{r+i} + f_i.
SpPair isotropic_against_symplectic(std::size_t n, std::size_t r) {
  SpPair out;
  for (std::size_t i = 1; i <= r; ++i) out.y1.push_back(e(n, i));
  for (std::size_t i = 1; i <= r; ++i) out.y1.push_back(f(n, i));
  for (std::size_t i = 1; i <= n - r; ++i) out.y2.push_back(e(n, r + i) - e(n, i));
  for (std::size_t i = 1; i <= n - r; ++i) out.y2.push_back(f(n, r + i) + f(n, i));
  return out;
}

SpPair genpos_sp_rec(std::size_t n, std::size_t p, std::size_t r, std::size_t q, std::size_t s) {
  SpPair out;
  if (q == 0 || p == 0) {
    for (std::size_t i = 1; i <= n; ++i) out.y1.push_back(e(n, i));
    for (std::size_t i = 1; i <= n; ++i) out.y1.push_back(f(n, i));
    out.entry = "whole and zero";
    return p == 0 ? swapped(out) : out;
  }
  if (n == 1) {
    out.y1 = {e(1, 1)};
    out.y2 = {f(1, 1)};
    out.entry = "n=1";
    return out;
  }
  if (n == 2) {
    if (p == 3 || (p == 2 && r == 0 && s == 1)) {
      out = swapped(genpos_sp_rec(n, q, s, p, r));
      out.entry += " swapped";
      return out;
    }
    if (p == 1) {
      out.y1 = {e(2, 1)};
      out.y2 = {f(2, 1), e(2, 2), f(2, 2)};
      out.entry = "base (1)";
    } else if (r == 1 && s == 1) {
      out.y1 = {e(2, 1), f(2, 1)};
      out.y2 = {e(2, 2), f(2, 2)};
      out.entry = "base (2)";
    } else if (r == 1 && s == 0) {
      out.y1 = {e(2, 1), f(2, 1)};
      out.y2 = {e(2, 2) - e(2, 1), f(2, 2) + f(2, 1)};
      out.entry = "base (3)";
    } else {
      out.y1 = {e(2, 1), e(2, 2)};
      out.y2 = {f(2, 1), f(2, 2)};
      out.entry = "base (4)";
    }
    return out;
  }

  if (p > 2 * r && q > 2 * s) {
    SpPair sub = genpos_sp_rec(n - 1, p - 1, r, q - 1, s);
    out.y1 = lift_all(sub.y1, n);
    out.y2 = lift_all(sub.y2, n);
    out.y1.push_back(e(n, n));
    out.y2.push_back(f(n, n));
    out.entry = sub.entry;
    out.steps = {"p>2r and q>2s: " + profile_text(n, p, r, q, s)};
    out.steps.insert(out.steps.end(), sub.steps.begin(), sub.steps.end());
    return out;
  }
  if (p == 2 * r && q == 2 * s) {
    for (std::size_t i = 1; i <= r; ++i) out.y1.push_back(e(n, i));
    for (std::size_t i = 1; i <= r; ++i) out.y1.push_back(f(n, i));
    for (std::size_t i = r + 1; i <= n; ++i) out.y2.push_back(e(n, i));
    for (std::size_t i = r + 1; i <= n; ++i) out.y2.push_back(f(n, i));
    out.entry = "p=2r and q=2s";
    return out;
  }
  if (p != 2 * r) {
    out = swapped(genpos_sp_rec(n, q, s, p, r));
    return out;
  }
  if (s == 0) {
    out = isotropic_against_symplectic(n, r);
    out.entry = "p=2r, q>0 and 2s=0";
    return out;
  }
  SpPair sub = genpos_sp_rec(n - 1, p, r, q - 2, s - 1);
  out.y1 = lift_all(sub.y1, n);
  out.y2 = lift_all(sub.y2, n);
  out.y2.push_back(e(n, n));
  out.y2.push_back(f(n, n));
  out.entry = sub.entry;
  out.steps = {"p=2r and q>2s>0: " + profile_text(n, p, r, q, s)};
  out.steps.insert(out.steps.end(), sub.steps.begin(), sub.steps.end());
  return out;
}

void check_ambient(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  if (w1.ambient() != space.dim() || w2.ambient() != space.dim())
    throw InvalidInput("subspaces must live in the ambient space of dimension " + std::to_string(space.dim()));
}

IsometryCertificate identity_certificate(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  IsometryCertificate cert{space, Matrix::identity(space.dim()), w1, w2, "general_position", false};
  seal(cert);
  return cert;
}

// Half-dimension stand-ins for W1 and W2 (dimensions a and d - a): padded
// with standard basis vectors when the dimensions sum to at most d, else
// truncated to leading RREF rows.
std::pair<Subspace, Subspace> stand_ins(const Subspace& w1, const Subspace& w2, std::size_t d) {
  std::size_t s = w1.dim(), k = w2.dim(), half = d / 2;
  auto clamp = [&](std::size_t lo, std::size_t hi) { return std::min(std::max(half, lo), hi); };
  auto pad = [&](const Subspace& w, std::size_t target) {
    std::vector<Vector> vs = w.vectors();
    for (const auto& v : complement_in(Subspace::whole(d), w)) {
      if (vs.size() == target) break;
      vs.push_back(v);
    }
    return Subspace::span(d, vs);
  };
  auto truncate = [&](const Subspace& w, std::size_t target) {
    std::vector<Vector> vs = w.vectors();
    vs.resize(target);
    return Subspace::span(d, vs);
  };
  if (s + k <= d) {
    std::size_t a = clamp(s, d - k);
    return {pad(w1, a), pad(w2, d - a)};
  }
  std::size_t a = clamp(d - k, s);
  return {truncate(w1, a), truncate(w2, d - a)};
}

}  // namespace

bool in_general_position(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient() != w2.ambient()) throw InvalidInput("subspaces live in different ambient spaces");
  std::size_t d = w1.ambient(), total = w1.dim() + w2.dim();
  std::size_t expect = total > d ? total - d : 0;
  return intersect(w1, w2).dim() == expect;
}

GeneralPositionWitness genpos_sp(std::size_t n, const RankProfile& profile1, const RankProfile& profile2) {
  if (!admissible_rank(profile1.p, profile1.two_r, n) || !admissible_rank(profile2.p, profile2.two_r, n))
    throw InvalidInput("inadmissible rank profile for n=" + std::to_string(n));
  if (profile1.p + profile2.p != 2 * n) throw InvalidInput("profiles must satisfy p + q = 2n");
  SpPair pair = genpos_sp_rec(n, profile1.p, profile1.two_r / 2, profile2.p, profile2.two_r / 2);

  FormSpace space = FormSpace::symplectic(n);
  GeneralPositionWitness w;
  w.kind = FormKind::sp;
  w.n = n;
  w.y1 = Subspace::span(2 * n, pair.y1);
  w.y2 = Subspace::span(2 * n, pair.y2);
  w.spanning1 = pair.y1;
  w.spanning2 = pair.y2;
  w.entry = std::move(pair.entry);
  w.steps = std::move(pair.steps);
  RankProfile got1 = symplectic_rank(space, w.y1), got2 = symplectic_rank(space, w.y2);
  if (w.y1.dim() != pair.y1.size() || w.y2.dim() != pair.y2.size() || !(got1 == profile1) || !(got2 == profile2) ||
      !in_general_position(w.y1, w.y2))
    throw VerificationFailure("symplectic general position witness failed its check (" + w.entry + ")");
  return w;
}

IsometryCertificate arrange_sp(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  if (space.kind() != FormKind::sp) throw InvalidInput("arrange_sp needs a symplectic space");
  check_ambient(space, w1, w2);
  if (in_general_position(w1, w2)) return identity_certificate(space, w1, w2);
  auto [x1, x2] = stand_ins(w1, w2, space.dim());
  GeneralPositionWitness gp = genpos_sp(space.n(), symplectic_rank(space, x1), symplectic_rank(space, x2));
  Matrix g1 = transport_sp(space, x1, gp.y1).h;
  Matrix g2 = transport_sp(space, x2, gp.y2).h;
  const Matrix& j = space.gram();
  Matrix g2inv = Scalar(-1) * (j * g2.transpose() * j);
  IsometryCertificate cert{space, g2inv * g1, w1, w2, "general_position", false};
  seal(cert);
  return cert;
}

IsometryCertificate arrange_so(const FormSpace& space, const Subspace& w1, const Subspace& w2, std::uint64_t seed) {
  if (space.kind() != FormKind::so) throw InvalidInput("arrange_so needs a quadratic space");
  check_ambient(space, w1, w2);
  if (in_general_position(w1, w2)) return identity_certificate(space, w1, w2);

  if (!anisotropic_vector(space, w1) && !anisotropic_vector(space, w2)) {
    // Both Lagrangian: move W1 onto a Lagrangian complement of W2.
    Subspace u2 = hyperbolic_complete(space, w2).u;
    Matrix h;
    try {
      h = transport_so(space, w1, u2).h;
    } catch (const Obstruction&) {
      throw Obstruction(
          "W1 and W2 are Lagrangians with odd-dimensional intersection; every h in SO(V,Q) has hW1 cap W2 != 0");
    }
    IsometryCertificate cert{space, std::move(h), w1, w2, "general_position", false};
    seal(cert);
    return cert;
  }

  // Rational Cayley transforms h = (I - A)^-1 (I + A), A = G^-1 K with K
  // skew, drawn from a fixed-seed stream. They lie in SO(V, Q) and are
  // generic, so the first few put W1 and W2 in general position.
  const std::size_t d = space.dim();
  const Matrix& g = space.gram();
  Matrix ginv = *inverse(g);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::uniform_int_distribution<int> entry(-2 - attempt / 16, 2 + attempt / 16);
    Matrix k(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        k(i, j) = Scalar(entry(rng));
        k(j, i) = -k(i, j);
      }
    }
    Matrix a = ginv * k;
    auto back = inverse(Matrix::identity(d) - a);
    if (!back) continue;
    Matrix h = *back * (Matrix::identity(d) + a);
    if (!in_general_position(image(h, w1), w2)) continue;
    IsometryCertificate cert{space, std::move(h), w1, w2, "general_position", false};
    seal(cert);
    return cert;
  }
  throw VerificationFailure("no Cayley transform put the subspaces in general position");
}

IsometryCertificate arrange_sl(const FormSpace& space, const Subspace& w1, const Subspace& w2) {
  if (space.kind() != FormKind::sl) throw InvalidInput("arrange_sl needs a plain vector space");
  check_ambient(space, w1, w2);
  if (in_general_position(w1, w2)) return identity_certificate(space, w1, w2);
  std::size_t d = space.dim(), s = w1.dim(), k = w2.dim();
  std::vector<Vector> c = complement_in(Subspace::whole(d), w2);
  std::vector<Vector> target;
  if (s + k <= d) {
    target.assign(c.begin(), c.begin() + static_cast<long>(s));
  } else {
    target = c;
    for (std::size_t i = 0; target.size() < s; ++i) target.push_back(w2.vector(i));
  }
  IsometryCertificate cert = transport(space, w1, Subspace::span(d, target));
  cert.w2 = w2;
  cert.claim = "general_position";
  seal(cert);
  return cert;
}

IsometryCertificate arrange(const FormSpace& space, const Subspace& w1, const Subspace& w2, std::uint64_t seed) {
  switch (space.kind()) {
    case FormKind::sp:
      return arrange_sp(space, w1, w2);
    case FormKind::so:
      return arrange_so(space, w1, w2, seed);
    case FormKind::sl:
      return arrange_sl(space, w1, w2);
  }
  throw InvalidInput("unknown form kind");
}

}  // namespace hypform
