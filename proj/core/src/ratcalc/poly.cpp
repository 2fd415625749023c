#include "curvcert/ratcalc/poly.hpp"

#include "curvcert/errors.hpp"

namespace curvcert::ratcalc {

Poly::Poly(TowerContext ctx) : ctx_(std::move(ctx)) {}

Poly::Poly(TowerContext ctx, std::vector<TowerScalar> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.context() == ctx_)) throw ContextMismatch("polynomial coefficient from another context");
  trim();
}

Poly Poly::constant(const TowerScalar& c) { return Poly(c.context(), {c}); }

Poly Poly::constant(const TowerContext& ctx, const GaussRational& c) {
  return Poly(ctx, {TowerScalar(ctx, c)});
}

Poly Poly::z(const TowerContext& ctx) { return Poly(ctx, {TowerScalar(ctx), TowerScalar(ctx, 1)}); }

Poly Poly::linear(const TowerScalar& root) {
  return Poly(root.context(), {-root, TowerScalar(root.context(), 1)});
}

Poly Poly::monomial(const TowerScalar& c, int k) {
  std::vector<TowerScalar> v(k + 1, TowerScalar(c.context()));
  v[k] = c;
  return Poly(c.context(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TowerScalar Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return TowerScalar(ctx_);
  return c_[k];
}

const TowerScalar& Poly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ctx_);
  std::vector<TowerScalar> d;
  d.reserve(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussRational(static_cast<long>(k)));
  return Poly(ctx_, std::move(d));
}

TowerScalar Poly::evaluate(const TowerScalar& x) const {
  TowerScalar acc(ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::shifted(const TowerScalar& c) const {
  // Repeated synthetic division (Horner form of the Taylor shift).
  std::vector<TowerScalar> a = c_;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n - 1; ++i)
    for (int j = n - 2; j >= i; --j) a[j] += c * a[j + 1];
  return Poly(ctx_, std::move(a));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  if (leading().is_one()) return *this;
  return *this * leading().inverse();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!(ctx_ == d.ctx_)) throw ContextMismatch("polynomials from different contexts");
  if (degree() < d.degree()) return {Poly(ctx_), *this};
  TowerScalar inv = d.leading().inverse();
  bool unit_lc = d.leading().is_one();
  std::vector<TowerScalar> r = c_;
  int dd = d.degree();
  std::vector<TowerScalar> q(degree() - dd + 1, TowerScalar(ctx_));
  for (int k = degree() - dd; k >= 0; --k) {
    const TowerScalar& top = r[k + dd];
    if (top.is_zero()) continue;
    TowerScalar f = unit_lc ? top : top * inv;
    for (int j = 0; j <= dd; ++j)
      if (!d.c_[j].is_zero()) r[k + j] -= f * d.c_[j];
    q[k] = std::move(f);
  }
  r.resize(dd, TowerScalar(ctx_));
  return {Poly(ctx_, std::move(q)), Poly(ctx_, std::move(r))};
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("polynomials from different contexts");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), TowerScalar(ctx_));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("polynomials from different contexts");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), TowerScalar(ctx_));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("polynomials from different contexts");
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::vector<TowerScalar> r(a.c_.size() + b.c_.size() - 1, TowerScalar(a.ctx_));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(a.ctx_, std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const TowerScalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("polynomials from different contexts");
  return a.c_ == b.c_;
}

std::string scalar_to_string(const TowerScalar& s) {
  if (auto g = s.as_gauss()) return g->to_string();
  return "[" + s.to_string() + "]";
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += scalar_to_string(c_[k]);
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

Poly pow(const Poly& p, int k) {
  if (k < 0) throw Error("negative polynomial power");
  Poly r = Poly::constant(p.context(), 1), b = p;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error("gcd of two zero polynomials");
  Poly a = p, b = q;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (!b.leading().is_unit())
      throw NotInvertible("Euclidean step with zero-divisor leading coefficient");
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = (!r.is_zero() && r.leading().is_unit()) ? r.monic() : std::move(r);
  }
  if (!a.leading().is_unit()) throw NotInvertible("gcd with zero-divisor leading coefficient");
  return a.monic();
}

Poly divide_exact(const Poly& p, const Poly& d) {
  auto [q, r] = p.divmod(d);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
  return q;
}

}  // namespace curvcert::ratcalc
