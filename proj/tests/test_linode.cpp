#include "doctest.h"

#include "curvcert/errors.hpp"
#include "curvcert/linode/linode.hpp"
#include "curvcert/models/system.hpp"

using namespace curvcert;
using namespace curvcert::exact;
using namespace curvcert::linode;
using namespace curvcert::ratcalc;
using models::derive_params;
using models::Potential;
using models::Space;

namespace {
TowerContext qctx() { return make_context(GaussRational(-1), GaussRational(-3)); }
TowerScalar sc(const TowerContext& c, Rational r) { return TowerScalar(c, GaussRational(r)); }
}  // namespace

TEST_CASE("constant coefficient system") {
  auto c = qctx();
  FirstOrderSystem s{RatFunc(c), RatFunc::constant(c, 1), RatFunc::constant(c, 1), std::nullopt};
  auto ode = reduce_to_second_order(s);
  CHECK(ode.p.is_zero());
  CHECK(ode.q == RatFunc::constant(c, -1));
  auto nf = to_normal_form(ode);
  CHECK(nf.r == RatFunc::constant(c, 1));
}

TEST_CASE("zero C is rejected") {
  auto c = qctx();
  FirstOrderSystem s{RatFunc(c), RatFunc::constant(c, 1), RatFunc(c), std::nullopt};
  CHECK_THROWS_AS(reduce_to_second_order(s), ZeroCoefficient);
}

TEST_CASE("gauge transform") {
  auto c = qctx();
  auto z = RatFunc::z(c);
  NormalFormODE r{z};
  SecondOrderODE ode{RatFunc(c), -z};
  CHECK(verify_gauge_transform(r, ode, RatFunc(c)));
  CHECK_FALSE(verify_gauge_transform(NormalFormODE{z + RatFunc::constant(c, 1)}, ode, RatFunc(c)));

  auto prm = derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  auto sys = models::build_system(prm);
  auto ode2 = reduce_to_second_order(sys);
  auto nf = to_normal_form(ode2);
  CHECK(verify_gauge_transform(nf, ode2, gauge_log_derivative(sys)));
  CHECK_FALSE(verify_gauge_transform(NormalFormODE{nf.r + RatFunc::constant(prm.ctx, 1)}, ode2,
                                     gauge_log_derivative(sys)));

  auto osc = derive_params(Space::Sphere, Potential::Oscillator, 1, Rational(1, 2), 1, -1);
  auto so = models::build_system(osc);
  auto oode = reduce_to_second_order(so);
  CHECK(verify_gauge_transform(to_normal_form(oode), oode, gauge_log_derivative(so)));
}

TEST_CASE("second order poles stay on the singular set") {
  auto prm = derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  auto ode = reduce_to_second_order(models::build_system(prm));
  Poly allowed = Poly::constant(prm.ctx, 1);
  for (const auto& pt : prm.singular_points()) allowed *= pow(Poly::linear(pt.location), 3);
  CHECK_NOTHROW(divide_exact(allowed, ode.p.den()));
  CHECK_NOTHROW(divide_exact(allowed, ode.q.den()));
}

TEST_CASE("mu = 1 normal forms") {
  auto prm = derive_params(Space::Sphere, Potential::Newton, 2, 1, 1, 0);
  const auto& c = prm.ctx;
  auto r = models::pipeline_r(prm);
  CHECK(r.r == RatFunc::pole(prm.z0_scalar(), 2, sc(c, Rational(3, 4))));

  auto osc = derive_params(Space::Sphere, Potential::Oscillator, 1, 1, 1, -1);
  auto ro = models::pipeline_r(osc);
  auto z = Poly::z(osc.ctx);
  auto z0 = osc.z0_scalar();
  auto l2 = osc.lambda() * osc.lambda();
  auto k = [&](const TowerScalar& s) { return Poly::constant(s); };
  auto two = sc(osc.ctx, 2);
  Poly num = k(z0 * z0 - two * l2) * z * z + k(two * l2 * z0) * z + k(l2 * (l2 - two * z0 * z0));
  Poly den = pow(Poly::linear(z0), 2) * pow(z * z - k(l2), 2);
  CHECK(ro.r == sc(osc.ctx, Rational(3, 4)) * RatFunc(num, den));
}

TEST_CASE("pole location and spectra") {
  auto prm = derive_params(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  auto r = models::pipeline_r(prm);
  auto poles = locate_poles(r.r, prm.singular_points());
  CHECK(poles.size() == 5);
  auto spec = singularity_spectrum(r, poles);
  REQUIRE(spec.points.size() == 6);
  for (const auto& p : spec.points) CHECK(p.order == 2);
  CHECK(spec.find("z0")->delta_rational == Rational(2));
  CHECK(spec.infinity().delta_rational == Rational(2));
  auto inf = spec.infinity().rational_exponents();
  REQUIRE(inf.has_value());
  CHECK(inf->first == Rational(-3, 2));
  CHECK(inf->second == Rational(1, 2));
  for (const char* lab : {"kappa", "-kappa", "lambda", "-lambda"}) {
    CHECK(spec.find(lab)->delta_nonreal_or_irrational());
  }

  auto osc = derive_params(Space::Sphere, Potential::Oscillator, 1, Rational(1, 2), 1, -1);
  auto ro = models::pipeline_r(osc);
  auto so = singularity_spectrum(ro, locate_poles(ro.r, osc.singular_points()));
  int quarter_points = 0;
  for (const auto* p : so.finite()) {
    if (p->alpha == sc(osc.ctx, Rational(-3, 16))) {
      ++quarter_points;
      CHECK(p->delta_rational == Rational(1, 2));
      auto e = p->rational_exponents();
      REQUIRE(e.has_value());
      CHECK(e->first == Rational(1, 4));
      CHECK(e->second == Rational(3, 4));
    }
  }
  CHECK(quarter_points == 2);
}

TEST_CASE("spectrum errors") {
  auto c = qctx();
  auto a = sc(c, 1);
  NormalFormODE cubic{RatFunc::pole(a, 3, sc(c, 1))};
  CHECK_THROWS_AS(singularity_spectrum(cubic, {{a, 3, "a"}}), NonFuchsian);
  NormalFormODE two{RatFunc::pole(a, 2, sc(c, 1)) + RatFunc::pole(sc(c, 2), 2, sc(c, 1))};
  CHECK_THROWS_AS(singularity_spectrum(two, {{a, 2, "a"}}), BadFactorization);
}

TEST_CASE("second symmetric power") {
  auto c = qctx();
  auto z0 = sc(c, Rational(1, 4));
  NormalFormODE r{RatFunc::pole(z0, 2, sc(c, Rational(3, 4)))};
  CHECK(symmetric_power_residual(r, RatFunc(Poly::linear(z0))).is_zero());
  CHECK(symmetric_power_residual(r, RatFunc(c)).is_zero());
  CHECK_FALSE(symmetric_power_residual(r, RatFunc::constant(c, 1)).is_zero());
}

TEST_CASE("riccati residual") {
  auto c = qctx();
  auto z0 = sc(c, Rational(1, 4));
  NormalFormODE r{RatFunc::pole(z0, 2, sc(c, Rational(3, 4)))};
  CHECK(riccati_residual(r, RatFunc::pole(z0, 1, sc(c, Rational(3, 2)))).is_zero());
  CHECK(riccati_residual(r, RatFunc::pole(z0, 1, sc(c, Rational(-1, 2)))).is_zero());
  CHECK_FALSE(riccati_residual(r, RatFunc::pole(z0, 1, sc(c, 1))).is_zero());
}
