// Quadratic general position pairs.
//
// The case tables below are transcribed entry by entry. A transcribed entry
// can fail (an index leaves 1..n, a paired range has two different lengths,
// or the spans miss the requested signatures); the pair is then rebuilt by
// plane allocation, which always works:
//
//   V is the orthogonal sum of the planes P_i = span{x_i, y_i}. When
//   d1 = dim Y1 exceeds n, Y1 takes d1 - n whole planes (adding one positive
//   and one negative direction each), and symmetrically for Y2. Every other
//   plane is split, one vector to each side, chosen from
//     isotropic: x+y (or x-y), positive: x (or sqrt2 x + y),
//     negative: y (or x + sqrt2 y),
//   so that the two vectors of a plane are independent. Whole planes never
//   exceed min(p, q) because l + q <= n and l + p <= n.

#include <hypform/error.hpp>
#include <hypform/general_position.hpp>

#include <functional>

namespace hypform {

namespace {

struct TableFailure {
  std::string reason;
};

using Index = long;

Scalar sqrt2() { return Scalar::make(TowerContext::sqrt2().top(), Scalar(), Scalar(1)); }

class Spans {
 public:
  explicit Spans(Index n) : n_(n) {}

  Vector x(Index i, const Scalar& c = Scalar(1)) const { return c * unit(i - 1); }
  Vector y(Index i, const Scalar& c = Scalar(1)) const { return c * unit(n_ + i - 1); }

  // x_{xa+k}*cx + y_{ya+k}*cy for k over the common range
  Spans& pairs(Index xa, Index xb, Index ya, Index yb, const Scalar& cx = Scalar(1), const Scalar& cy = Scalar(1)) {
    Index len = xb - xa + 1;
    if (len != yb - ya + 1) throw TableFailure{"paired index ranges differ in length"};
    for (Index k = 0; k < len; ++k) out_.push_back(x(xa + k, cx) + y(ya + k, cy));
    return *this;
  }
  Spans& xs(Index a, Index b) {
    for (Index i = a; i <= b; ++i) out_.push_back(x(i));
    return *this;
  }
  Spans& ys(Index a, Index b) {
    for (Index i = a; i <= b; ++i) out_.push_back(y(i));
    return *this;
  }

  std::vector<Vector> take() { return std::move(out_); }

 private:
  Vector unit(Index k) const {
    bool first = k < n_;
    Index i = first ? k : k - n_;
    if (k < 0 || i < 0 || i >= n_ || k >= 2 * n_) throw TableFailure{"index outside 1..n"};
    return unit_vector(static_cast<std::size_t>(2 * n_), static_cast<std::size_t>(k));
  }

  Index n_;
  std::vector<Vector> out_;
};

struct Sig {
  Index l, p, q;
};

struct Built {
  std::string entry;
  std::vector<Vector> y1, y2;
};

using Entry = std::function<void(Index n, Sig a, Sig b, Spans& s1, Spans& s2)>;

Built run(const std::string& name, Index n, Sig a, Sig b, const Entry& e) {
  Spans s1(n), s2(n);
  e(n, a, b, s1, s2);
  return {name, s1.take(), s2.take()};
}

void entry_I1_1(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  Y1.pairs(p1 + p2 + 1, n - l2, q1 + 1, 2 * q1 + l1 - n + q2)
      .pairs(q1 + q2 + 1, n, q1 + q2 + 1, n)
      .xs(1, q1)
      .xs(q1 + p2 + 1, p2 + p1)
      .ys(1, q1);
  Y2.pairs(n - l2 + 1, q1 + q2, 1, q1 + q2 + l2 - n)
      .pairs(q1 + q2 + 1, n, q1 + q2 + 1, n, Scalar(1), Scalar(-1))
      .ys(q1 + 1, p2 + q2)
      .xs(q1 + 1, q1 + p2);
}

void entry_I1_2(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  (void)l2;
  Y1.pairs(n - (l1 - 1), n, n - (l1 - 1), n).xs(q1 + p2 + 1, p1 + p2).xs(1, q1).ys(1, q1);
  Y2.pairs(p1 + p2 + 1, n - l1, 1, n - (l1 + p1 + p2))
      .pairs(1, n - (l1 + q1 + q2), q1 + q2 + 1, n - l1)
      .pairs(n - (l1 - 1), n, n - (l1 - 1), n, Scalar(1), Scalar(-1))
      .xs(q1 + 1, q1 + p2)
      .ys(q1 + 1, q1 + p2);
}

void entry_I1_3(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  (void)l1;
  Y1.pairs(n - (l2 - 1), n, n - (l2 - 1), n)
      .pairs(p1 + p2 + 1, n - l2, q1 + 1, n - l2 - p2 - p1)
      .pairs(q1 + 1, n - l2 - q2, q1 + q2 + 1, n - l2)
      .xs(q1 + p2 + 1, p1 + p2)
      .xs(1, q1)
      .ys(1, q1);
  Y2.pairs(n - (l2 - 1), n, n - (l2 - 1), n, Scalar(1), Scalar(-1)).xs(q1 + 1, q1 + p2).ys(q1 + 1, q1 + q2);
}

void entry_I2(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  Index s = p1 + p2 + q1 + q2;
  Y1.pairs(s + l2 - n + 1, n, q1 + 1, q1 + l1).xs(1, q1).xs(q1 + p2 + 1, p1 + q2).ys(1, q1);
  Y2.pairs(s - n + 1, s - n + l2, q1 + q2 - n + 1, q1 + q2 + l2 - n)
      .xs(q1 + 1, q1 + p2)
      .pairs(p1 + q2 + 1, s - n, 1, q1 + q2 - n, Scalar(1), sqrt2())
      .ys(q1 + 1, n);
}

void entry_II1_1(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  Index P = p1 + p2, Q = q1 + q2;
  Y1.pairs(P + 1, n, P + 1, n).pairs(p1 + 1, p1 + l1 - n + P, Q + 1, Q + l1 - n + P).xs(1, p1).ys(1, q1);
  Y2.pairs(P + 1, n, P + 1, n, Scalar(1), Scalar(-1))
      .pairs(1, l2 - n + P, Q + l1 - n + P + 1, P)
      .xs(p1 + 1, P)
      .ys(q1 + 1, Q);
}

void entry_II1_2(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  (void)l2;
  Index P = p1 + p2, Q = q1 + q2;
  Y1.pairs(n - (l1 - 1), n, n - (l1 - 1), n).xs(1, p1).ys(1, q1);
  Y2.pairs(n - (l1 - 1), n, n - (l1 - 1), n, Scalar(1), Scalar(-1))
      .pairs(P + 1, n - l1, 1, n - l1 - P)
      .pairs(1, n - l1 - Q, Q + 1, n - l1)
      .xs(p1 + 1, P)
      .ys(q1 + 1, Q);
}

void entry_II2(Index n, Sig a, Sig b, Spans& Y1, Spans& Y2) {
  auto [l1, p1, q1] = a;
  auto [l2, p2, q2] = b;
  Index s = p1 + p2 + q1 + q2;
  Y1.pairs(p1 + 1, l1 + p1, s - n + 1, l1 + s - n).xs(1, p1).ys(1, q1);
  Y2.pairs(1, l2, l1 + s - n + 1, n).xs(p1 + 1, n).pairs(1, p1 + p2 - n, q1 + q2 + 1, s - n, sqrt2(), Scalar(1)).ys(q1 + 1, q1 + q2);
}

std::vector<Vector> swap_xy(const std::vector<Vector>& vs, Index n) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    Vector w(v.size());
    for (Index i = 0; i < n; ++i) {
      w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(n + i)];
      w[static_cast<std::size_t>(n + i)] = v[static_cast<std::size_t>(i)];
    }
    out.push_back(std::move(w));
  }
  return out;
}

Built flip_xy(Built b, Index n) {
  b.y1 = swap_xy(b.y1, n);
  b.y2 = swap_xy(b.y2, n);
  return b;
}

Built flip_sides(Built b) {
  std::swap(b.y1, b.y2);
  return b;
}

Sig dual(Sig s) { return {s.l, s.q, s.p}; }

Built case_I(Index n, Sig a, Sig b);

Built case_I3(Index n, Sig a, Sig b) {
  // I-2 with x and y exchanged, applied to (dual b, dual a)
  Built r = run("I-3", n, dual(b), dual(a), entry_I2);
  return flip_sides(flip_xy(std::move(r), n));
}

Built case_I(Index n, Sig a, Sig b) {
  if (a.p - a.q > b.q - b.p) return flip_sides(flip_xy(case_I(n, dual(b), dual(a)), n));
  Index P = a.p + b.p, Q = a.q + b.q;
  if (P <= n && Q <= n) {
    Index s1 = a.l - n + Q, s2 = b.l - n + Q;
    if (s1 >= 0 && s2 >= 0) return run("I-1(1)", n, a, b, entry_I1_1);
    if (s1 <= 0 && 0 <= s2) return run("I-1(2)", n, a, b, entry_I1_2);
    if (s2 <= 0 && 0 <= s1) return run("I-1(3)", n, a, b, entry_I1_3);
    throw TableFailure{"no I-1 sub-case applies"};
  }
  if (Q <= n && n <= P) return run("I-2", n, a, b, entry_I2);
  return case_I3(n, a, b);
}

Built case_II(Index n, Sig a, Sig b) {
  if (a.l > b.l) return flip_sides(case_II(n, b, a));
  Index P = a.p + b.p;
  if (P <= n) {
    if (n - P <= a.l && n - P <= b.l) return run("II-1(1)", n, a, b, entry_II1_1);
    if (a.l <= n - P && n - P <= b.l) return run("II-1(2)", n, a, b, entry_II1_2);
    throw TableFailure{"no II-1 sub-case applies"};
  }
  return run("II-2", n, a, b, entry_II2);
}

std::string classify(Index n, Sig a, Sig b) {
  auto name_I = [&](Sig x, Sig y) {
    if (x.p - x.q > y.q - y.p) std::swap(x, y), x = dual(x), y = dual(y);
    Index P = x.p + y.p, Q = x.q + y.q;
    if (P <= n && Q <= n) {
      Index s1 = x.l - n + Q, s2 = y.l - n + Q;
      if (s1 >= 0 && s2 >= 0) return std::string("I-1(1)");
      if (s1 <= 0 && 0 <= s2) return std::string("I-1(2)");
      if (s2 <= 0 && 0 <= s1) return std::string("I-1(3)");
      return std::string("I-1");
    }
    return std::string(Q <= n && n <= P ? "I-2" : "I-3");
  };
  auto name_II = [&](Sig x, Sig y) {
    if (x.l > y.l) std::swap(x, y);
    Index P = x.p + y.p;
    if (P > n) return std::string("II-2");
    if (n - P <= x.l && n - P <= y.l) return std::string("II-1(1)");
    if (x.l <= n - P && n - P <= y.l) return std::string("II-1(2)");
    return std::string("II-1");
  };
  if (a.p >= a.q && b.p <= b.q) return name_I(a, b);
  if (a.p <= a.q && b.p >= b.q) return name_I(b, a);
  if (a.p <= a.q && b.p <= b.q) return name_II(a, b);
  return name_II(dual(a), dual(b));
}

Built dispatch(Index n, Sig a, Sig b) {
  if (a.p >= a.q && b.p <= b.q) return case_I(n, a, b);
  if (a.p <= a.q && b.p >= b.q) return flip_sides(case_I(n, b, a));
  if (a.p <= a.q && b.p <= b.q) return case_II(n, a, b);
  return flip_xy(case_II(n, dual(a), dual(b)), n);
}

std::vector<std::vector<Vector>> plane_allocation(Index n, Sig a, Sig b) {
  Index d1 = a.l + a.p + a.q, d2 = b.l + b.p + b.q;
  Index m1 = std::max<Index>(0, d1 - n), m2 = std::max<Index>(0, d2 - n);
  Spans s(n);
  std::vector<Vector> y1, y2;
  Index plane = 1;
  for (Index i = 0; i < m1; ++i, ++plane) {
    y1.push_back(s.x(plane));
    y1.push_back(s.y(plane));
  }
  for (Index i = 0; i < m2; ++i, ++plane) {
    y2.push_back(s.x(plane));
    y2.push_back(s.y(plane));
  }
  auto kinds = [](Sig g, Index whole) {
    std::string k;
    k.append(static_cast<std::size_t>(g.l), 'l');
    k.append(static_cast<std::size_t>(g.p - whole), 'p');
    k.append(static_cast<std::size_t>(g.q - whole), 'q');
    return k;
  };
  std::string k1 = kinds(a, m1), k2 = kinds(b, m2);
  Scalar r2 = sqrt2();
  auto first = [&](char t, Index i) {
    if (t == 'l') return s.x(i) + s.y(i);
    return t == 'p' ? s.x(i) : s.y(i);
  };
  auto second = [&](char t, Index i) {
    if (t == 'l') return s.x(i) - s.y(i);
    return t == 'p' ? s.x(i, r2) + s.y(i) : s.x(i) + s.y(i, r2);
  };
  for (std::size_t j = 0; j < k1.size(); ++j, ++plane) {
    y1.push_back(first(k1[j], plane));
    y2.push_back(k1[j] == k2[j] ? second(k2[j], plane) : first(k2[j], plane));
  }
  return {y1, y2};
}

}  // namespace

GeneralPositionWitness genpos_so(std::size_t n, const SignatureTriple& sig1, const SignatureTriple& sig2) {
  if (!admissible_signature(sig1.l, sig1.p, sig1.q, n) || !admissible_signature(sig2.l, sig2.p, sig2.q, n))
    throw InvalidInput("inadmissible signature " + to_string(admissible_signature(sig1.l, sig1.p, sig1.q, n) ? sig2 : sig1) +
                       " for n=" + std::to_string(n));
  if (sig1.dim() + sig2.dim() != 2 * n) throw InvalidInput("signatures must total 2n");
  FormSpace space = FormSpace::quadratic(n);
  auto N = static_cast<Index>(n);
  auto as_sig = [](const SignatureTriple& s) {
    return Sig{static_cast<Index>(s.l), static_cast<Index>(s.p), static_cast<Index>(s.q)};
  };
  Sig a = as_sig(sig1), b = as_sig(sig2);

  GeneralPositionWitness w;
  w.kind = FormKind::so;
  w.n = n;
  auto accept = [&](const std::vector<Vector>& v1, const std::vector<Vector>& v2) -> std::string {
    if (v1.size() != sig1.dim() || v2.size() != sig2.dim()) return "span has the wrong number of vectors";
    w.y1 = Subspace::span(2 * n, v1);
    w.y2 = Subspace::span(2 * n, v2);
    w.spanning1 = v1;
    w.spanning2 = v2;
    if (w.y1.dim() != v1.size() || w.y2.dim() != v2.size()) return "spanning vectors are dependent";
    if (signature(space, w.y1) != sig1 || signature(space, w.y2) != sig2) return "signature check failed";
    if (!in_general_position(w.y1, w.y2)) return "general position check failed";
    return "";
  };

  std::string failure;
  w.entry = classify(N, a, b);
  try {
    Built built = dispatch(N, a, b);
    w.entry = built.entry;
    failure = accept(built.y1, built.y2);
  } catch (const TableFailure& f) {
    failure = f.reason;
  }
  if (failure.empty()) return w;

  w.repaired = true;
  w.repair_reason = failure;
  auto planes = plane_allocation(N, a, b);
  std::string again = accept(planes[0], planes[1]);
  if (!again.empty()) throw VerificationFailure("plane allocation failed: " + again);
  return w;
}

}  // namespace hypform
