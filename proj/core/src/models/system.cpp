#include "curvcert/models/system.hpp"

#include "curvcert/errors.hpp"

namespace curvcert::models {

namespace {

RatFunc cst(const TowerContext& ctx, const GaussRational& g) { return RatFunc::constant(ctx, g); }

}  // namespace

Poly gamma_f(const ModelParams& prm) {
  const auto& ctx = prm.ctx;
  auto z2 = Poly::monomial(TowerScalar(ctx, 1), 2);
  if (prm.potential == Potential::Newton) {
    // alpha z^2 / (2 mu) - eps
    return TowerScalar(ctx, GaussRational(prm.strength / (2 * prm.mu))) * z2 - Poly::constant(ctx, prm.eps);
  }
  // -beta z^2 / mu + 2 eps
  return TowerScalar(ctx, GaussRational(-prm.strength / prm.mu)) * z2 + Poly::constant(ctx, 2 * prm.eps);
}

Poly system_denominator(const ModelParams& prm) {
  const auto& ctx = prm.ctx;
  Poly f = gamma_f(prm);
  Poly one = Poly::constant(ctx, 1);
  if (prm.potential == Potential::Newton) {
    return prm.space == Space::Sphere ? f * f + one : f * f - one;
  }
  return prm.space == Space::Sphere ? f * (f + one) : f * (one - f);
}

Poly factored_denominator(const ModelParams& prm) {
  const auto& ctx = prm.ctx;
  GaussRational d = prm.kappa_sq - prm.lambda_sq;
  GaussRational c;
  if (prm.potential == Potential::Newton) {
    c = GaussRational(prm.space == Space::Sphere ? -4 : 4) / (d * d);
  } else {
    c = GaussRational(prm.space == Space::Sphere ? 1 : -1) / (d * d);
  }
  auto z2 = Poly::monomial(TowerScalar(ctx, 1), 2);
  return TowerScalar(ctx, c) * (z2 - Poly::constant(ctx, prm.kappa_sq)) * (z2 - Poly::constant(ctx, prm.lambda_sq));
}

linode::FirstOrderSystem build_system(const ModelParams& prm) {
  const auto& ctx = prm.ctx;
  const RatFunc z = RatFunc::z(ctx);
  const RatFunc f(gamma_f(prm));
  const RatFunc den(system_denominator(prm));
  const RatFunc p = cst(ctx, prm.p);
  const RatFunc mu = cst(ctx, prm.mu);
  const RatFunc s = cst(ctx, prm.strength);
  const RatFunc two_minus_mu = cst(ctx, 2 - prm.mu);
  // +1 where B has "+ (...)/den" (hyperbolic plane), -1 on the sphere.
  const TowerScalar sgn(ctx, prm.space == Space::Sphere ? -1 : 1);

  linode::FirstOrderSystem sys{RatFunc(ctx), RatFunc(ctx), RatFunc(ctx), std::nullopt};
  if (prm.potential == Potential::Newton) {
    sys.A = p * f / den;
    sys.B = p / mu + sgn * ((s * z + two_minus_mu * p) / den);
  } else {
    sys.A = p / den;
    sys.B = p / (mu * f * f) + sgn * ((s * z + two_minus_mu * p) / den);
    sys.weight = f;
  }
  sys.C = (s * z - mu * p) / den;
  return sys;
}

linode::NormalFormODE pipeline_r(const ModelParams& prm) {
  return linode::to_normal_form(linode::reduce_to_second_order(build_system(prm)));
}

RatFunc CoefficientTable::reconstruct() const {
  if (entries.empty()) throw InvariantViolation("empty coefficient table");
  const auto& ctx = entries.front().location.context();
  RatFunc r(ctx);
  for (const auto& e : entries) {
    if (!e.alpha.is_zero()) r += RatFunc::pole(e.location, 2, e.alpha);
    if (!e.beta.is_zero()) r += RatFunc::pole(e.location, 1, e.beta);
  }
  return r;
}

const TableEntry& CoefficientTable::at(const std::string& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return e;
  }
  throw InvariantViolation("no table entry '" + label + "'");
}

namespace {

// Shorthand for transcribing the tables: k = kappa, l = lambda, m = mu, P = p, d = k^2 - l^2.
struct Sym {
  TowerContext ctx;
  TowerScalar k, l, k2, l2, d, m, P, I;
  explicit Sym(const ModelParams& prm)
      : ctx(prm.ctx),
        k(prm.kappa()),
        l(prm.lambda()),
        k2(k * k),
        l2(l * l),
        d(k2 - l2),
        m(ctx, prm.mu),
        P(ctx, prm.p),
        I(ctx, GaussRational::i()) {}
  TowerScalar c(long n, long den = 1) const { return TowerScalar(ctx, GaussRational(Rational(n, den))); }
};

CoefficientTable newton_sphere(const ModelParams& prm) {
  Sym s(prm);
  const auto& [ctx, k, l, k2, l2, d, m, P, I] = s;
  auto one = s.c(1);
  auto k3 = k2 * k;
  auto l3 = l2 * l;
  auto d2 = d * d;
  TowerScalar a1 = (one - m) / (s.c(64) * k2) * (P * (m - one) * (l2 - k2) + s.c(4) * I * k * (m + one)) *
                   (P * (l2 - k2) + s.c(4) * I * k);
  TowerScalar b1 = (m - one) / (s.c(64) * d * k3) *
                   ((m - one) * (s.c(5) * k2 - l2) * d2 * P * P - s.c(32) * I * m * d * k3 * P -
                    s.c(16) * (m + one) * k2 * (s.c(3) * k2 + l2));
  TowerScalar a2 = (one - m) / (s.c(64) * k2) * (P * (m - one) * (l2 - k2) - s.c(4) * I * k * (m + one)) *
                   (P * (l2 - k2) - s.c(4) * I * k);
  TowerScalar b2 = (m - one) / (s.c(64) * d * k3) *
                   ((one - m) * (s.c(5) * k2 - l2) * d2 * P * P - s.c(32) * I * m * d * k3 * P +
                    s.c(16) * (m + one) * k2 * (s.c(3) * k2 + l2));
  TowerScalar a3 = (one - m) / (s.c(64) * l2) * (P * (m - one) * d - s.c(4) * I * l * (m + one)) *
                   (P * d - s.c(4) * I * l);
  TowerScalar b3 = (m - one) / (s.c(64) * d * l3) *
                   ((one - m) * (s.c(5) * l2 - k2) * d2 * P * P + s.c(32) * I * m * d * l3 * P +
                    s.c(16) * (m + one) * l2 * (s.c(3) * l2 + k2));
  TowerScalar a4 = (one - m) / (s.c(64) * l2) * (P * (m - one) * d + s.c(4) * I * l * (m + one)) *
                   (P * d + s.c(4) * I * l);
  TowerScalar b4 = (m - one) / (s.c(64) * d * l3) *
                   ((m - one) * (s.c(5) * l2 - k2) * d2 * P * P + s.c(32) * I * m * d * l3 * P -
                    s.c(16) * (m + one) * l2 * (s.c(3) * l2 + k2));
  return {{{"z0", prm.z0_scalar(), s.c(3, 4), s.c(0)},
           {"kappa", k, a1, b1},
           {"-kappa", -k, a2, b2},
           {"lambda", l, a3, b3},
           {"-lambda", -l, a4, b4}}};
}

CoefficientTable newton_hyperbolic(const ModelParams& prm) {
  Sym s(prm);
  const auto& [ctx, k, l, k2, l2, d, m, P, I] = s;
  auto one = s.c(1);
  auto k3 = k2 * k;
  auto l3 = l2 * l;
  auto d2 = d * d;
  TowerScalar a1 =
      (m - one) / (s.c(64) * k2) * (P * (m - one) * d - s.c(4) * k * (m + one)) * (P * d - s.c(4) * k);
  TowerScalar b1 = (m - one) / (s.c(64) * d * k3) *
                   ((m - one) * (l2 - s.c(5) * k2) * d2 * P * P + s.c(32) * m * d * k3 * P -
                    s.c(16) * (m + one) * k2 * (s.c(3) * k2 + l2));
  TowerScalar a2 =
      (m - one) / (s.c(64) * k2) * (P * (m - one) * d + s.c(4) * k * (m + one)) * (P * d + s.c(4) * k);
  TowerScalar b2 = (m - one) / (s.c(64) * d * k3) *
                   ((m - one) * (s.c(5) * k2 - l2) * d2 * P * P + s.c(32) * m * d * k3 * P +
                    s.c(16) * (m + one) * k2 * (s.c(3) * k2 + l2));
  TowerScalar a3 =
      (m - one) / (s.c(64) * l2) * (P * (m - one) * d - s.c(4) * l * (m + one)) * (P * d - s.c(4) * l);
  TowerScalar b3 = (m - one) / (s.c(64) * d * l3) *
                   ((m - one) * (s.c(5) * l2 - k2) * d2 * P * P - s.c(32) * m * d * l3 * P +
                    s.c(16) * (m + one) * l2 * (s.c(3) * l2 + k2));
  TowerScalar a4 =
      (m - one) / (s.c(64) * l2) * (P * (m - one) * d + s.c(4) * l * (m + one)) * (P * d + s.c(4) * l);
  TowerScalar b4 = (m - one) / (s.c(64) * d * l3) *
                   ((m - one) * (k2 - s.c(5) * l2) * d2 * P * P - s.c(32) * m * d * l3 * P -
                    s.c(16) * (m + one) * l2 * (s.c(3) * l2 + k2));
  return {{{"z0", prm.z0_scalar(), s.c(3, 4), s.c(0)},
           {"kappa", k, a1, b1},
           {"-kappa", -k, a2, b2},
           {"lambda", l, a3, b3},
           {"-lambda", -l, a4, b4}}};
}

CoefficientTable oscillator(const ModelParams& prm) {
  Sym s(prm);
  const auto& [ctx, k, l, k2, l2, d, m, P, I] = s;
  const bool sphere = prm.space == Space::Sphere;
  auto one = s.c(1);
  auto k3 = k2 * k;
  auto d2 = d * d;
  auto d3 = d2 * d;
  auto nd = -d;
  auto m2 = m * m;
  // +1 on the sphere, -1 on the hyperbolic plane: the two tables differ by these signs.
  auto g = s.c(sphere ? 1 : -1);

  TowerScalar b0 = s.c(3) * g * (l2 - k2) * P / (s.c(2) * ((l2 - k2) * (l2 - k2) * P * P - l2));
  TowerScalar a1 = (m - one) / (s.c(4) * k2) * (P * (m - one) * d - g * k * (m + one)) * (P * d - g * k);
  TowerScalar b1 = (m - one) / (s.c(4) * d * k3) *
                   ((m - one) * (l2 - s.c(3) * k2) * d2 * P * P + g * s.c(4) * m * d * k3 * P -
                    (m + one) * k2 * (k2 + l2));
  TowerScalar a2 = (m - one) / (s.c(4) * k2) * (P * (m - one) * d + g * k * (m + one)) * (P * d + g * k);
  TowerScalar b2 = (m - one) / (s.c(4) * d * k3) *
                   ((m - one) * (s.c(3) * k2 - l2) * d2 * P * P + g * s.c(4) * m * d * k3 * P +
                    (m + one) * k2 * (k2 + l2));
  // Shared pieces of beta_3 and beta_4.
  auto quad = s.c(8) * (s.c(3) * m - one) * (m - one) * l * d2 * P * P;
  auto lin = s.c(9) * k2 + (s.c(24) * m2 - s.c(16) * m - s.c(17)) * l2;
  auto cub = l * ((s.c(5) - s.c(8) * m2) * l2 + s.c(3) * k2);
  auto sq = s.c(8) * (m - one) * (m - one);
  TowerScalar b3 = (sq * d3 * P * P * P - g * quad + g * cub + d * lin * P) / (s.c(16) * l * d * (d * P - g * l));
  TowerScalar b4 =
      (sq * nd * nd * nd * P * P * P - g * quad + g * cub + nd * lin * P) / (s.c(16) * l * d * (d * P + g * l));
  return {{{"z0", prm.z0_scalar(), s.c(3, 4), b0},
           {"kappa", k, a1, b1},
           {"-kappa", -k, a2, b2},
           {"lambda", l, s.c(-3, 16), b3},
           {"-lambda", -l, s.c(-3, 16), b4}}};
}

}  // namespace

CoefficientTable closed_form_r(const ModelParams& prm) {
  if (prm.potential == Potential::Newton) {
    return prm.space == Space::Sphere ? newton_sphere(prm) : newton_hyperbolic(prm);
  }
  return oscillator(prm);
}

}  // namespace curvcert::models
