#include <hypform/error.hpp>
#include <hypform/rational.hpp>

#include <algorithm>
#include <cctype>

namespace hypform {

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

RationalInterval sqrt_bounds(const Rational& x, unsigned bits) {
  if (sgn(x) < 0) throw InvalidInput("sqrt_bounds of a negative rational");
  if (auto e = exact_sqrt(x)) return {*e, *e};
  // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits before the integer root.
  mpz_class scaled = x.get_num() * x.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class denom = x.get_den();
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits);
  Rational lo(root, denom);
  Rational hi(root + 1, denom);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Rational round_dyadic(const Rational& x, unsigned bits) {
  mpz_class scaled_num = x.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
  // nearest integer to scaled_num / den
  mpz_class twice = 2 * scaled_num + x.get_den();
  mpz_class den2 = 2 * x.get_den();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  mpz_class d = 1;
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
  Rational r(q, d);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& x, unsigned digits, Round mode) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = x.get_num() * scale;
  const mpz_class& den = x.get_den();
  mpz_class q;
  switch (mode) {
    case Round::down:
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Round::up:
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      break;
    case Round::nearest: {
      mpz_class twice = 2 * num + den;
      mpz_class den2 = 2 * den;
      mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
      break;
    }
  }
  bool negative = sgn(q) < 0;
  mpz_class mag = abs(q);
  std::string s = mag.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

Rational parse_rational(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) throw InvalidInput("empty rational literal");
  auto bad = [&] { return InvalidInput("malformed rational literal '" + raw + "'"); };
  auto digits_only = [](const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(from), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  size_t sign_len = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!digits_only(p, sign_len) || !digits_only(q, 0)) throw bad();
    mpz_class den(q);
    if (den == 0) throw DivisionByZero();
    Rational r(mpz_class(p[0] == '+' ? p.substr(1) : p), den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
    bool negative = !ip.empty() && ip[0] == '-';
    std::string ipd = ip.substr(sign_len);
    if ((!ipd.empty() && !digits_only(ipd, 0)) || (!fp.empty() && !digits_only(fp, 0)) || (ipd.empty() && fp.empty()))
      throw bad();
    mpz_class whole(ipd.empty() ? "0" : ipd);
    mpz_class frac(fp.empty() ? "0" : fp);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (!digits_only(text, sign_len)) throw bad();
  return Rational(mpz_class(text[0] == '+' ? text.substr(1) : text));
}

std::string to_string(const Rational& x) { return x.get_str(); }

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.contains_zero()) throw DivisionByZero();
  RationalInterval inv{1 / b.hi, 1 / b.lo};
  return a * inv;
}

}  // namespace hypform
