#include "curvcert/linode/linode.hpp"

#include "curvcert/errors.hpp"
#include "curvcert/ratcalc/partial_fraction.hpp"

namespace curvcert::linode {

using exact::GaussRational;
using ratcalc::differentiate;

std::optional<std::pair<Rational, Rational>> SingularPoint::rational_exponents() const {
  if (!delta_rational) return std::nullopt;
  Rational half = *delta_rational / Rational(2);
  return std::make_pair(exponent_center() - half, exponent_center() + half);
}

std::string SingularPoint::exponents_string() const {
  if (auto e = rational_exponents()) return "{" + e->first.to_string() + ", " + e->second.to_string() + "}";
  std::string c = exponent_center().to_string();
  return "{" + c + " - sqrt(D)/2, " + c + " + sqrt(D)/2}, D = " + ratcalc::scalar_to_string(delta_squared);
}

std::vector<const SingularPoint*> SingularitySpectrum::finite() const {
  std::vector<const SingularPoint*> out;
  for (const auto& p : points)
    if (!p.at_infinity()) out.push_back(&p);
  return out;
}

const SingularPoint* SingularitySpectrum::find(const std::string& label) const {
  for (const auto& p : points)
    if (p.label == label) return &p;
  return nullptr;
}

namespace {

RatFunc log_derivative(const RatFunc& f) { return differentiate(f) / f; }

}  // namespace

RatFunc gauge_log_derivative(const FirstOrderSystem& s) {
  if (s.C.is_zero()) throw ZeroCoefficient("C vanishes identically");
  const auto& ctx = s.C.context();
  RatFunc h = RatFunc::constant(ctx, GaussRational(Rational(1, 2))) * log_derivative(s.C);
  if (s.weight) {
    if (s.weight->is_zero()) throw ZeroCoefficient("weight f vanishes identically");
    h += RatFunc::constant(ctx, GaussRational(Rational(1, 4))) * log_derivative(*s.weight);
  }
  return h;
}

SecondOrderODE reduce_to_second_order(const FirstOrderSystem& s) {
  if (s.C.is_zero()) throw ZeroCoefficient("C vanishes identically");
  RatFunc L = log_derivative(s.C);
  RatFunc cb = s.C * s.B;
  if (s.weight) {
    if (s.weight->is_zero()) throw ZeroCoefficient("weight f vanishes identically");
    L += RatFunc::constant(s.C.context(), GaussRational(Rational(1, 2))) * log_derivative(*s.weight);
    cb *= *s.weight;
  }
  RatFunc q = -(L * s.A + s.A * s.A + cb - differentiate(s.A));
  return {-L, q};
}

NormalFormODE to_normal_form(const SecondOrderODE& ode) {
  const auto& ctx = ode.p.context();
  RatFunc half = RatFunc::constant(ctx, GaussRational(Rational(1, 2)));
  RatFunc quarter = RatFunc::constant(ctx, GaussRational(Rational(1, 4)));
  return {-ode.q + half * differentiate(ode.p) + quarter * ode.p * ode.p};
}

bool verify_gauge_transform(const NormalFormODE& r, const SecondOrderODE& ode, const RatFunc& h) {
  // u = g y with g'/g = h, y'' = r y:
  // u'' + p u' + q u = g [ (r + h' + h^2 + p h + q) y + (2h + p) y' ].
  RatFunc y_part = r.r + differentiate(h) + h * h + ode.p * h + ode.q;
  RatFunc dy_part = h + h + ode.p;
  return y_part.is_zero() && dy_part.is_zero();
}

std::vector<Pole> locate_poles(const RatFunc& r, const std::vector<Pole>& candidates) {
  std::vector<Pole> out;
  for (const auto& c : candidates) {
    Poly d = r.den();
    Poly lin = Poly::linear(c.location);
    int m = 0;
    while (d.degree() > 0) {
      auto [q, rem] = d.divmod(lin);
      if (!rem.is_zero()) break;
      d = std::move(q);
      ++m;
    }
    if (m > 0) out.push_back({c.location, m, c.label});
  }
  return out;
}

namespace {

SingularPoint make_point(std::string label, std::optional<TowerScalar> loc, int order, TowerScalar alpha) {
  const auto& ctx = alpha.context();
  TowerScalar d2 = TowerScalar(ctx, 1) + alpha * GaussRational(4);
  std::optional<Rational> dr;
  if (auto q = exact::is_real_rational(d2)) dr = q->sqrt();
  return SingularPoint{std::move(label), std::move(loc), order, alpha, d2, dr};
}

}  // namespace

SingularitySpectrum singularity_spectrum(const NormalFormODE& nf, const std::vector<Pole>& poles) {
  const RatFunc& r = nf.r;
  const auto& ctx = r.context();
  std::vector<ratcalc::Root> roots;
  for (const auto& p : poles) roots.push_back({p.location, p.multiplicity});
  Poly product = Poly::constant(ctx, 1);
  for (const auto& p : poles) product *= pow(Poly::linear(p.location), p.multiplicity);
  if (!(product == r.den())) throw BadFactorization("poles do not factor den(r) = " + r.den().to_string());

  SingularitySpectrum spec;
  for (const auto& p : poles) {
    if (p.multiplicity > 2)
      throw NonFuchsian("pole of order " + std::to_string(p.multiplicity) + " at " + p.label);
    TowerScalar alpha(ctx);
    if (p.multiplicity == 2) {
      Poly cofactor = ratcalc::divide_exact(r.den(), pow(Poly::linear(p.location), 2));
      alpha = r.num().evaluate(p.location) / cofactor.evaluate(p.location);
    }
    spec.points.push_back(make_point(p.label, p.location, p.multiplicity, alpha));
  }

  int gap = r.is_zero() ? 1000 : r.den().degree() - r.num().degree();
  int ord_inf = std::max(0, 4 - gap);
  if (ord_inf > 2) throw NonFuchsian("order at infinity is " + std::to_string(ord_inf));
  TowerScalar alpha_inf(ctx);
  if (gap == 2) alpha_inf = r.num().leading() / r.den().leading();
  spec.points.push_back(make_point("inf", std::nullopt, r.is_zero() ? 0 : ord_inf, alpha_inf));
  return spec;
}

RatFunc symmetric_power_residual(const NormalFormODE& nf, const RatFunc& v) {
  const auto& ctx = v.context();
  RatFunc v1 = differentiate(v);
  RatFunc v3 = differentiate(differentiate(v1));
  return v3 - RatFunc::constant(ctx, 4) * nf.r * v1 - RatFunc::constant(ctx, 2) * differentiate(nf.r) * v;
}

RatFunc riccati_residual(const NormalFormODE& nf, const RatFunc& omega) {
  return differentiate(omega) + omega * omega - nf.r;
}

}  // namespace curvcert::linode
