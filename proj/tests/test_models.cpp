#include <cmath>

#include "doctest.h"

#include "curvcert/errors.hpp"
#include "curvcert/models/hamiltonian.hpp"
#include "curvcert/models/lemmas.hpp"

using namespace curvcert;
using namespace curvcert::exact;
using namespace curvcert::models;
using ratcalc::Poly;
using ratcalc::RatFunc;

namespace {
GaussRational gi(Rational re, Rational im) { return {std::move(re), std::move(im)}; }
TowerScalar sc(const TowerContext& c, Rational r) { return TowerScalar(c, GaussRational(r)); }

std::string guard_of(Space s, Potential p, Rational a, Rational mu, Rational pp, Rational eps) {
  try {
    derive_params(s, p, a, mu, pp, eps);
  } catch (const DegenerateParameters& e) {
    return e.guard();
  }
  return "";
}
}  // namespace

TEST_CASE("derived parameters") {
  auto sn = derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  CHECK(sn.kappa_sq == gi(0, Rational(1, 2)));
  CHECK(sn.lambda_sq == gi(0, Rational(-1, 2)));
  CHECK(sn.z0 == GaussRational(Rational(1, 4)));
  // second formula for z0: p (kappa^2 - lambda^2) / (4 i)
  CHECK((sn.kappa_sq - sn.lambda_sq) / (GaussRational(4) * GaussRational::i()) == sn.z0);

  auto hn = derive_params(Space::Hyperbolic, Potential::Newton, 1, Rational(1, 2), 1, -2);
  CHECK(hn.kappa_sq == GaussRational(-1));
  CHECK(hn.lambda_sq == GaussRational(-3));
  CHECK(hn.z0 == GaussRational(Rational(1, 2)));

  CHECK(guard_of(Space::Hyperbolic, Potential::Oscillator, 1, Rational(1, 2), 1, 0) == "lambda_sq_zero");
  CHECK(guard_of(Space::Sphere, Potential::Newton, 2, 0, 1, 0) == "mu_zero");
  CHECK(guard_of(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 0, 0) == "p_zero");
  CHECK(guard_of(Space::Sphere, Potential::Newton, -1, Rational(1, 2), 1, 0) == "strength_nonpositive");
  CHECK(guard_of(Space::Sphere, Potential::Newton, 2, 1, 1, 0).empty());
}

TEST_CASE("Gamma quadratic factors over the singular points") {
  struct Case {
    Space s;
    Potential p;
    Rational a, mu, pp, eps;
  };
  for (const auto& c : {Case{Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0},
                        Case{Space::Hyperbolic, Potential::Newton, 1, Rational(1, 2), 1, -2},
                        Case{Space::Sphere, Potential::Oscillator, 1, Rational(1, 2), 1, -1},
                        Case{Space::Hyperbolic, Potential::Oscillator, 1, Rational(1, 2), 1, -1},
                        Case{Space::Sphere, Potential::Newton, Rational(3, 2), Rational(2, 7), Rational(-5, 3), Rational(4, 9)}}) {
    auto prm = derive_params(c.s, c.p, c.a, c.mu, c.pp, c.eps);
    CHECK(system_denominator(prm) == factored_denominator(prm));
    auto sys = build_system(prm);
    CHECK(evaluate(sys.C, prm.z0_scalar()).is_zero());
  }
  // 1 + f^2 = c (z^2 - kappa^2)(z^2 - lambda^2) with c = -4/(kappa^2 - lambda^2)^2
  auto sn = derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  Poly f = gamma_f(sn);
  Poly z = Poly::z(sn.ctx);
  auto k2 = sn.kappa() * sn.kappa(), l2 = sn.lambda() * sn.lambda();
  auto coeff = sc(sn.ctx, -4) * ((k2 - l2) * (k2 - l2)).inverse();
  Poly expect = coeff * (z * z - Poly::constant(l2)) * (z * z - Poly::constant(k2));
  CHECK(Poly::constant(sn.ctx, 1) + f * f == expect);
  CHECK(expect == Poly::constant(sn.ctx, 1) + Poly::constant(sn.ctx, 4) * pow(z, 4));
}

TEST_CASE("closed form tables") {
  auto sn = derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  auto tab = closed_form_r(sn);
  CHECK(tab.reconstruct() == pipeline_r(sn).r);
  CHECK_FALSE(is_real_rational(tab.at("kappa").alpha).has_value());

  auto ctx = sn.ctx;
  auto k = sn.kappa(), l = sn.lambda();
  auto m = sc(ctx, sn.mu), P = sc(ctx, sn.p), one = sc(ctx, 1), I = TowerScalar(ctx, GaussRational::i());
  auto k2 = k * k, l2 = l * l;
  auto a1 = (one - m) * (sc(ctx, 64) * k2).inverse() * (P * (m - one) * (l2 - k2) + sc(ctx, 4) * I * k * (m + one)) *
            (P * (l2 - k2) + sc(ctx, 4) * I * k);
  CHECK(tab.at("kappa").alpha == a1);

  for (auto space : {Space::Sphere, Space::Hyperbolic}) {
    auto osc = derive_params(space, Potential::Oscillator, Rational(5, 3), Rational(3, 7), Rational(2, 3), Rational(-7, 5));
    auto t = closed_form_r(osc);
    CHECK(t.at("z0").alpha == sc(osc.ctx, Rational(3, 4)));
    int sixteenths = 0;
    for (const auto& e : t.entries) sixteenths += e.alpha == sc(osc.ctx, Rational(-3, 16));
    CHECK(sixteenths == 2);
    CHECK(t.reconstruct() == pipeline_r(osc).r);
  }

  auto mu1 = derive_params(Space::Sphere, Potential::Newton, 2, 1, 1, 0);
  CHECK(closed_form_r(mu1).reconstruct() == RatFunc::pole(mu1.z0_scalar(), 2, sc(mu1.ctx, Rational(3, 4))));
}

TEST_CASE("pipeline equals closed form on a small parameter grid") {
  const Rational mus[] = {Rational(1, 3), Rational(5, 4)};
  const Rational ps[] = {Rational(2), Rational(-3, 5)};
  for (auto space : {Space::Sphere, Space::Hyperbolic}) {
    for (auto pot : {Potential::Newton, Potential::Oscillator}) {
      for (const auto& mu : mus) {
        for (const auto& p : ps) {
          ModelParams prm = [&] {
            for (long n = -5;; ++n) {
              try {
                return derive_params(space, pot, Rational(7, 3), mu, p, Rational(n, 3));
              } catch (const DegenerateParameters&) {
              }
            }
          }();
          CHECK(pipeline_r(prm).r == closed_form_r(prm).reconstruct());
        }
      }
    }
  }
}

TEST_CASE("lemma checks") {
  auto hn = lemma_condition(derive_params(Space::Hyperbolic, Potential::Newton, 1, Rational(1, 2), 1, -2));
  CHECK(hn.hypotheses_hold);
  CHECK(hn.conclusion_verified);
  CHECK(hn.alphas.size() == 4);
  for (const auto& a : hn.alphas) CHECK(a.nonreal);
  REQUIRE(hn.imaginary_part_identity.has_value());
  CHECK(*hn.imaginary_part_identity);

  auto so = lemma_condition(derive_params(Space::Sphere, Potential::Oscillator, 1, Rational(1, 2), 1, -1));
  CHECK(so.hypotheses_hold);
  CHECK(so.alphas.size() == 2);
  for (const auto& a : so.alphas) CHECK(a.nonreal);

  auto sn = lemma_condition(derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0));
  for (const auto& a : sn.alphas) {
    CHECK(a.nonreal);
    CHECK(a.method == "exact-embedding");
  }

  // equality case of the spherical Newton inequality: (1 - 0)(1) = (1/4) 16 / (4 * 2 * 1/2)
  CHECK_FALSE(newton_sphere_inequality_holds(2, Rational(1, 2), 4, 0));
  CHECK(newton_sphere_inequality_holds(2, Rational(1, 2), 1, 0));
  CHECK_THROWS_AS(lemma_condition(derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 4, 0)),
                  HypothesisViolated);
  auto rep = lemma_report(derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 4, 0));
  CHECK_FALSE(rep.hypotheses_hold);
  CHECK_FALSE(rep.violated.empty());

  // hyperbolic Newton needs eps < -1
  CHECK_THROWS_AS(lemma_condition(derive_params(Space::Hyperbolic, Potential::Newton, 1, Rational(1, 2), 1, Rational(1, 3))),
                  HypothesisViolated);
  CHECK_THROWS_AS(lemma_condition(derive_params(Space::Sphere, Potential::Newton, 2, 1, 1, 0)), HypothesisViolated);
}

TEST_CASE("mu = 1 solutions") {
  auto n = derive_params(Space::Sphere, Potential::Newton, 2, 1, 1, 0);
  auto [w1, w2] = mu1_solutions(n);
  CHECK(w1 == RatFunc::pole(n.z0_scalar(), 1, sc(n.ctx, Rational(3, 2))));
  CHECK(w2 == RatFunc::pole(n.z0_scalar(), 1, sc(n.ctx, Rational(-1, 2))));
  auto r = pipeline_r(n);
  CHECK(linode::riccati_residual(r, w1).is_zero());
  CHECK(linode::riccati_residual(r, w2).is_zero());

  for (auto space : {Space::Sphere, Space::Hyperbolic}) {
    auto o = derive_params(space, Potential::Oscillator, 1, 1, 1, -1);
    auto [o1, o2] = mu1_solutions(o);
    auto ro = pipeline_r(o);
    CHECK(linode::riccati_residual(ro, o1).is_zero());
    CHECK(linode::riccati_residual(ro, o2).is_zero());
    auto z = RatFunc::z(o.ctx);
    auto l2 = RatFunc::constant(o.lambda() * o.lambda());
    auto z0 = RatFunc::constant(o.z0_scalar());
    auto half = RatFunc::constant(o.ctx, Rational(1, 2));
    CHECK(o2 == half * z / (z * z - l2) + z0 / (z0 * z - l2) - half / (z - z0));
    // the product y1 y2 solves the second symmetric power: u = (y1 y2)'/(y1 y2) gives
    // u'' + 3 u u' + u^3 - 4 r u - 2 r' = 0
    auto u = o1 + o2;
    auto du = ratcalc::differentiate(u);
    auto four = RatFunc::constant(o.ctx, 4), two = RatFunc::constant(o.ctx, 2), three = RatFunc::constant(o.ctx, 3);
    CHECK((ratcalc::differentiate(du) + three * u * du + u * u * u - four * ro.r * u -
           two * ratcalc::differentiate(ro.r))
              .is_zero());
  }
  CHECK_THROWS_AS(mu1_solutions(derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0)), NotMu1);
}

TEST_CASE("exact Hamiltonian evaluation") {
  // sin = 3/5, cos = 4/5
  const Rational s(3, 5), c(4, 5), pt(2, 7), p0(1, 3), p1(-2, 5), p2(3, 4);
  HamiltonianParams<Rational> hp;
  hp.kind = HamiltonianKind::FullSphere;
  hp.potential = PotentialTerm::Newton;
  hp.strength = Rational(5, 2);
  hp.mu = 1;
  Rational h = hamiltonian_value(hp, s, c, pt, p0, p1, p2);
  Rational V = -hp.strength * c / s;
  Rational split = (pt + p0) * (pt + p0) / 2 + (p1 * s + p2 * c) * (p1 * s + p2 * c) / (2 * s * s) + V;
  // equal up to the Casimir constant -(p0^2 + p1^2 + p2^2)/2
  CHECK(h - split == -(p0 * p0 + p1 * p1 + p2 * p2) / 2);

  hp.potential = PotentialTerm::None;
  hp.mu = Rational(2, 3);
  HamiltonianParams<Rational> g = hp;
  g.kind = HamiltonianKind::GammaRestriction;
  g.p = Rational(7, 4);
  CHECK(hamiltonian_value(hp, s, c, pt, g.p, Rational(0), Rational(0)) == hamiltonian_value(g, s, c, pt, g.p, Rational(0), Rational(0)));
  CHECK(hamiltonian_value(g, s, c, pt, Rational(0), Rational(0), Rational(0)) == pt * pt / (2 * g.mu) + g.p * pt);

  HamiltonianParams<Rational> f1 = hp, f2 = hp;
  f1.kind = HamiltonianKind::FreePartS1;
  f2.kind = HamiltonianKind::FreePartS2;
  CHECK(hamiltonian_value(f1, s, c, pt, p0, p1, p2) + hamiltonian_value(f2, s, c, pt, p0, p1, p2) ==
        hamiltonian_value(hp, s, c, pt, p0, p1, p2));

  CHECK_THROWS_AS(hamiltonian_value(hp, Rational(0), Rational(1), pt, p0, p1, p2), DomainError);
}

TEST_CASE("double Hamiltonian evaluator") {
  HamiltonianParams<double> hp;
  hp.kind = HamiltonianKind::FullHyperbolic;
  hp.space = Space::Hyperbolic;
  hp.potential = PotentialTerm::Oscillator;
  hp.strength = 1.5;
  hp.mu = 0.4;
  ReducedHamiltonian h(hp);
  PhasePoint x{0.7, 0.2, 0.3, -0.1, 0.5};
  double s = std::sinh(0.7), c = std::cosh(0.7);
  CHECK(h.value(x) == doctest::Approx(hamiltonian_value(hp, s, c, 0.2, 0.3, -0.1, 0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(h.value({0.0, 0.2, 0.3, -0.1, 0.5}), DomainError);
  CHECK_THROWS_AS(h.value({-0.3, 0.2, 0.3, -0.1, 0.5}), DomainError);

  for (auto k : {HamiltonianKind::FullSphere, HamiltonianKind::FullHyperbolic, HamiltonianKind::GammaRestriction,
                 HamiltonianKind::RestrictedProblem, HamiltonianKind::FreePartS1, HamiltonianKind::FreePartS2}) {
    CHECK(hamiltonian_kind_from_string(to_string(k)) == k);
  }
}
