#include <hypform/error.hpp>
#include <hypform/scalar.hpp>

#include <map>

#include <algorithm>

namespace hypform {

struct Scalar::Ext {
  TowerNodePtr node;
  Scalar a;
  Scalar b;
};

namespace {

// (a, b) with x = a + b*sqrt(rho_node); node must be at or above x's node.
std::pair<Scalar, Scalar> split_at(const Scalar& x, const TowerNodePtr& node) {
  if (x.level() == node->level) return {x.a(), x.b()};
  return {x, Scalar()};
}

const TowerNodePtr& node_of(const Scalar& x) {
  static const TowerNodePtr none;
  return x.is_rational() ? none : x.node();
}

TowerNodePtr ancestor_at(TowerNodePtr node, int level) {
  while (node && node->level > level) node = node->parent;
  return node;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = Rational(num, den);
  q_.canonicalize();
}

Scalar Scalar::make(const TowerNodePtr& node, Scalar a, Scalar b) {
  if (!node || b.is_zero()) return a;
  Scalar s;
  s.ext_ = std::make_shared<const Ext>(Ext{node, std::move(a), std::move(b)});
  return s;
}

int Scalar::level() const noexcept { return ext_ ? ext_->node->level : 0; }

const Rational& Scalar::rational() const {
  if (ext_) throw InvalidInput("scalar is not rational");
  return q_;
}

const Scalar& Scalar::a() const {
  if (!ext_) throw InvalidInput("rational scalar has no tower components");
  return ext_->a;
}

const Scalar& Scalar::b() const {
  if (!ext_) throw InvalidInput("rational scalar has no tower components");
  return ext_->b;
}

const TowerNodePtr& Scalar::node() const {
  if (!ext_) throw InvalidInput("rational scalar has no tower node");
  return ext_->node;
}

namespace {

using RootMemo = std::map<const TowerNode*, RationalInterval>;

// Widens [lo, hi] to endpoints on the grid 2^-work, keeping numbers short.
RationalInterval outward(const RationalInterval& x, unsigned work) {
  auto snap = [work](const Rational& v, bool up) {
    mpz_class num = v.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), work);
    mpz_class q;
    if (up) mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    else mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    Rational out(q);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), work);
    return out;
  };
  return {snap(x.lo, false), snap(x.hi, true)};
}

RationalInterval enclose(const Scalar& x, unsigned work, RootMemo& memo) {
  if (x.is_rational()) return {x.rational(), x.rational()};
  const TowerNode* node = x.node().get();
  auto it = memo.find(node);
  if (it == memo.end()) {
    RationalInterval rho = outward(enclose(node->radicand, work, memo), work);
    if (sgn(rho.lo) < 0) rho.lo = 0;
    it = memo.emplace(node, RationalInterval{sqrt_bounds(rho.lo, work).lo, sqrt_bounds(rho.hi, work).hi}).first;
  }
  RationalInterval root = it->second;
  return outward(enclose(x.a(), work, memo) + enclose(x.b(), work, memo) * root, work);
}

}  // namespace

RationalInterval Scalar::enclosure(unsigned bits) const {
  if (!ext_) return {q_, q_};
  Rational target(1);
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  target /= den;
  for (unsigned work = bits + 8;; work += 32) {
    RootMemo memo;
    RationalInterval out = enclose(*this, work, memo);
    if (out.width() <= target) return out;
  }
}

double Scalar::to_double() const {
  if (!ext_) return q_.get_d();
  return enclosure(64).midpoint().get_d();
}

Scalar Scalar::operator-() const {
  if (!ext_) return Scalar(Rational(-q_));
  return make(ext_->node, -ext_->a, -ext_->b);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!ext_ && !o.ext_) {
    q_ += o.q_;
    return *this;
  }
  TowerNodePtr node = join_nodes(node_of(*this), node_of(o));
  auto [a1, b1] = split_at(*this, node);
  auto [a2, b2] = split_at(o, node);
  *this = make(node, a1 + a2, b1 + b2);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!ext_ && !o.ext_) {
    q_ -= o.q_;
    return *this;
  }
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!ext_ && !o.ext_) {
    q_ *= o.q_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = Scalar();
  TowerNodePtr node = join_nodes(node_of(*this), node_of(o));
  auto [a1, b1] = split_at(*this, node);
  auto [a2, b2] = split_at(o, node);
  if (b1.is_zero()) {
    *this = make(node, a1 * a2, a1 * b2);
  } else if (b2.is_zero()) {
    *this = make(node, a1 * a2, b1 * a2);
  } else {
    *this = make(node, a1 * a2 + b1 * b2 * node->radicand, a1 * b2 + a2 * b1);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (!ext_ && !o.ext_) {
    q_ /= o.q_;
    return *this;
  }
  if (!o.ext_) {
    Rational inv = 1 / o.q_;
    return *this *= Scalar(inv);
  }
  return *this *= inverse(o);
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (!x.ext_ || !y.ext_) return !x.ext_ && !y.ext_ && x.q_ == y.q_;
  if (x.ext_ == y.ext_) return true;
  return same_node(x.ext_->node, y.ext_->node) && x.ext_->a == y.ext_->a && x.ext_->b == y.ext_->b;
}

bool same_node(const TowerNodePtr& x, const TowerNodePtr& y) {
  if (x == y) return true;
  if (!x || !y || x->level != y->level) return false;
  return x->radicand == y->radicand && same_node(x->parent, y->parent);
}

TowerNodePtr join_nodes(const TowerNodePtr& x, const TowerNodePtr& y) {
  if (!x) return y;
  if (!y) return x;
  const TowerNodePtr& deep = x->level >= y->level ? x : y;
  const TowerNodePtr& shallow = x->level >= y->level ? y : x;
  if (!same_node(ancestor_at(deep, shallow->level), shallow)) throw IncompatibleTower();
  return deep;
}

Scalar inverse(const Scalar& x) {
  if (x.is_zero()) throw DivisionByZero();
  if (x.is_rational()) return Scalar(Rational(1 / x.rational()));
  const Scalar& a = x.a();
  const Scalar& b = x.b();
  Scalar norm = a * a - b * b * x.node()->radicand;
  Scalar inv = inverse(norm);
  return Scalar::make(x.node(), a * inv, -(b * inv));
}

int sign_of(const Scalar& x) {
  if (x.is_rational()) return sgn(x.rational());
  int sa = sign_of(x.a());
  int sb = sign_of(x.b());
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  const Scalar& a = x.a();
  const Scalar& b = x.b();
  return sa * sign_of(a * a - b * b * x.node()->radicand);
}

Scalar abs(const Scalar& x) { return sign_of(x) < 0 ? -x : x; }

std::optional<Scalar> sqrt_in(const TowerNodePtr& node, const Scalar& x) {
  if (!x.is_rational() && !same_node(ancestor_at(node, x.level()), x.node())) throw IncompatibleTower();
  int s = sign_of(x);
  if (s < 0) return std::nullopt;
  if (s == 0) return Scalar();
  if (!node) {
    auto r = exact_sqrt(x.rational());
    if (!r) return std::nullopt;
    return Scalar(*r);
  }
  const TowerNodePtr& parent = node->parent;
  const Scalar& rho = node->radicand;
  auto [a, b] = split_at(x, node);
  if (b.is_zero()) {
    if (auto r = sqrt_in(parent, a)) return r;
    if (auto r = sqrt_in(parent, a / rho)) return Scalar::make(node, Scalar(), *r);
    return std::nullopt;
  }
  auto t = sqrt_in(parent, a * a - b * b * rho);
  if (!t) return std::nullopt;
  for (const Scalar& c2 : {(a + *t) / Scalar(2), (a - *t) / Scalar(2)}) {
    auto c = sqrt_in(parent, c2);
    if (!c || c->is_zero()) continue;
    Scalar d = b / (Scalar(2) * *c);
    Scalar root = Scalar::make(node, *c, d);
    if (root * root == x) return abs(root);
  }
  return std::nullopt;
}

std::string to_string(const Scalar& x) {
  if (x.is_rational()) return to_string(x.rational());
  return "(" + to_string(x.a()) + ") + (" + to_string(x.b()) + ")*sqrt(" + to_string(x.node()->radicand) + ")";
}

const TowerContext& TowerContext::sqrt2() {
  static const TowerContext ctx(std::make_shared<const TowerNode>(TowerNode{nullptr, Scalar(2), 1}));
  return ctx;
}

std::vector<Scalar> TowerContext::radicands() const {
  std::vector<Scalar> out;
  for (TowerNodePtr n = top_; n; n = n->parent) out.push_back(n->radicand);
  std::reverse(out.begin(), out.end());
  return out;
}

TowerNodePtr TowerContext::node_at(int level) const {
  if (level <= 0) return nullptr;
  if (level > this->level()) throw InvalidInput("tower level out of range");
  return ancestor_at(top_, level);
}

bool TowerContext::contains(const Scalar& x) const {
  if (x.is_rational()) return true;
  if (x.level() > level()) return false;
  return same_node(ancestor_at(top_, x.level()), x.node());
}

std::pair<TowerContext, Scalar> TowerContext::adjoin_sqrt(const Scalar& rho) const {
  if (!contains(rho)) throw IncompatibleTower();
  if (sign_of(rho) <= 0) throw InvalidInput("square root of a non-positive scalar");
  if (auto r = sqrt_in(top_, rho)) return {*this, *r};
  auto node = std::make_shared<const TowerNode>(TowerNode{top_, rho, level() + 1});
  return {TowerContext(node), Scalar::make(node, Scalar(), Scalar(1))};
}

TowerContext TowerContext::join(const TowerContext& x, const TowerContext& y) {
  return TowerContext(join_nodes(x.top_, y.top_));
}

TowerContext context_of(const Scalar& x) { return TowerContext(x.is_rational() ? nullptr : x.node()); }

}  // namespace hypform
