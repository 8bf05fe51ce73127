#include <hypform/error.hpp>
#include <hypform/polynomial.hpp>

namespace hypform {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::reversed(std::size_t d) const {
  if (degree() > static_cast<int>(d)) throw InvalidInput("reversal degree below the polynomial degree");
  std::vector<Rational> r(d + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) r[d - k] = c_[k];
  return Poly(std::move(r));
}

Poly Poly::negated_variable() const {
  std::vector<Rational> r = c_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return Rational(1 / leading()) * *this;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1, content = 0;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Rational> r;
  for (const auto& c : c_) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    r.emplace_back(v);
  }
  if (sgn(leading()) < 0) content = -content;
  for (auto& c : r) c /= Rational(content);
  return Poly(std::move(r));
}

bool Poly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& c, const Poly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x *= c;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / lead;
    quo[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  Poly f = p.monic();
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = divmod(f, a).first;
  Poly c = divmod(d, a).first;
  Poly e = c - b.derivative();
  for (int k = 1; b.degree() > 0; ++k) {
    Poly g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g.monic(), k);
    b = divmod(b, g).first;
    c = divmod(e, g).first;
    e = c - b.derivative();
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
  seq_.push_back(p);
  seq_.push_back(p.derivative());
  while (!seq_.back().is_zero()) {
    Poly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    // keep the sign of -r while shrinking coefficients
    seq_.push_back(r.is_zero() ? r : Rational(-1) * r.primitive() * Poly::constant(sgn(r.leading()) > 0 ? 1 : -1));
  }
  seq_.pop_back();
}

int SturmSequence::variations(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int count = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (b < a) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_above(const Rational& a) const { return variations(a) - variations_at_infinity(true); }

int SturmSequence::count_real() const { return variations_at_infinity(false) - variations_at_infinity(true); }

int real_roots_above(const Poly& p, const Rational& a) {
  int total = 0;
  for (const auto& [f, k] : squarefree_factors(p)) total += k * SturmSequence(f).count_above(a);
  return total;
}

int real_roots_in(const Poly& p, const Rational& a, const Rational& b) {
  int total = 0;
  for (const auto& [f, k] : squarefree_factors(p)) total += k * SturmSequence(f).count(a, b);
  return total;
}

Poly palindromic_reduction(const Poly& r) {
  int deg = r.degree();
  if (deg < 0 || deg % 2 != 0 || r.reversed(static_cast<std::size_t>(deg)) != r)
    throw InvalidInput("palindromic reduction needs a palindromic polynomial of even degree");
  std::size_t m = static_cast<std::size_t>(deg) / 2;
  // P_k(x) = t^k + t^-k: P_0 = 2, P_1 = x, P_{k+1} = x P_k - P_{k-1}
  Poly x = Poly::monomial(1, 1);
  Poly prev = Poly::constant(2), cur = x;
  Poly q = Poly::constant(r.coeff(m));
  for (std::size_t k = 1; k <= m; ++k) {
    q = q + r.coeff(m + k) * cur;
    Poly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    bool unit = mag == 1 && k > 0;
    if (!unit) s += to_string(mag) + (k > 0 ? "*" : "");
    if (k > 0) s += var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

}  // namespace hypform
