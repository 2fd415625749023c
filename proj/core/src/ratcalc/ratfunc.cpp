#include "curvcert/ratcalc/ratfunc.hpp"

#include "curvcert/errors.hpp"

namespace curvcert::ratcalc {

RatFunc::RatFunc(TowerContext ctx) : num_(ctx), den_(Poly::constant(ctx, 1)) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.context(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.context() == den_.context())) throw ContextMismatch("rational function parts from different contexts");
  normalize();
}

RatFunc RatFunc::constant(const TowerScalar& c) { return RatFunc(Poly::constant(c)); }

RatFunc RatFunc::constant(const TowerContext& ctx, const GaussRational& c) {
  return RatFunc(Poly::constant(ctx, c));
}

RatFunc RatFunc::z(const TowerContext& ctx) { return RatFunc(Poly::z(ctx)); }

RatFunc RatFunc::pole(const TowerScalar& at, int order, const TowerScalar& c) {
  return RatFunc(Poly::constant(c), pow(Poly::linear(at), order));
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  const TowerContext& ctx = den_.context();
  if (num_.is_zero()) {
    den_ = Poly::constant(ctx, 1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  if (!den_.leading().is_one()) {
    TowerScalar inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFunc::is_normalized() const {
  if (den_.is_zero() || !den_.leading().is_one()) return false;
  if (num_.is_zero()) return den_.is_one();
  return poly_gcd(num_, den_).is_one();
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
    return *this;
  }
  if (den_.is_one()) {
    *this = RatFunc(num_ * o.den_ + o.num_, o.den_);
    return *this;
  }
  if (o.den_.is_one()) {
    *this = RatFunc(num_ + o.num_ * den_, den_);
    return *this;
  }
  Poly g = poly_gcd(den_, o.den_);
  Poly a = divide_exact(o.den_, g);
  Poly b = divide_exact(den_, g);
  *this = RatFunc(num_ * a + o.num_ * b, den_ * a);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc(context());
  // Cross-cancel before multiplying so the product stays small.
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant()) {
    Poly g = poly_gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = divide_exact(n1, g);
      d2 = divide_exact(d2, g);
    }
  }
  if (!d1.is_constant()) {
    Poly g = poly_gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = divide_exact(n2, g);
      d1 = divide_exact(d1, g);
    }
  }
  *this = RatFunc(n1 * n2, d1 * d2, Raw{});
  if (!den_.leading().is_one()) normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator*(const TowerScalar& s, const RatFunc& f) {
  if (s.is_zero()) return RatFunc(f.context());
  if (s.is_unit()) return RatFunc(f.num_ * s, f.den_, RatFunc::Raw{});
  return RatFunc(f.num_ * s, f.den_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc differentiate(const RatFunc& f) {
  if (f.den().is_one()) return RatFunc(f.num().derivative());
  // (n/d)' = (n' d - n d') / d^2, with g = gcd(d, d') removed early.
  const Poly& n = f.num();
  const Poly& d = f.den();
  Poly dd = d.derivative();
  Poly g = poly_gcd(d, dd);
  Poly d_over_g = divide_exact(d, g);
  Poly dd_over_g = divide_exact(dd, g);
  return RatFunc(n.derivative() * d_over_g - n * dd_over_g, d * d_over_g);
}

RatFunc pow(const RatFunc& f, int k) {
  if (k < 0) return pow(f.inverse(), -k);
  RatFunc r = RatFunc::constant(f.context(), 1), b = f;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

TowerScalar evaluate(const RatFunc& f, const TowerScalar& z) {
  TowerScalar d = f.den().evaluate(z);
  if (d.is_zero()) throw PoleEvaluation("evaluation at a pole: " + z.to_string());
  return f.num().evaluate(z) / d;
}

}  // namespace curvcert::ratcalc
