#include "curvcert/models/params.hpp"

#include "curvcert/errors.hpp"

namespace curvcert::models {

std::string to_string(Space s) { return s == Space::Sphere ? "sphere" : "hyperbolic"; }
std::string to_string(Potential p) { return p == Potential::Newton ? "newton" : "oscillator"; }

Space space_from_string(const std::string& s) {
  if (s == "sphere") return Space::Sphere;
  if (s == "hyperbolic") return Space::Hyperbolic;
  throw ParseError("unknown space '" + s + "' (expected sphere or hyperbolic)");
}

Potential potential_from_string(const std::string& s) {
  if (s == "newton") return Potential::Newton;
  if (s == "oscillator") return Potential::Oscillator;
  throw ParseError("unknown potential '" + s + "' (expected newton or oscillator)");
}

std::vector<linode::Pole> ModelParams::singular_points() const {
  auto k = kappa();
  auto l = lambda();
  return {{z0_scalar(), 2, "z0"}, {k, 2, "kappa"}, {-k, 2, "-kappa"}, {l, 2, "lambda"}, {-l, 2, "-lambda"}};
}

std::string ModelParams::case_name() const { return to_string(space) + "/" + to_string(potential); }

namespace {

[[noreturn]] void reject(const std::string& guard, const std::string& what) {
  throw DegenerateParameters(guard, what);
}

}  // namespace

ModelParams derive_params(Space space, Potential potential, const Rational& strength, const Rational& mu,
                          const Rational& p, const Rational& eps) {
  if (mu.is_zero()) reject("mu_zero", "mu must be nonzero");
  if (p.is_zero()) reject("p_zero", "p must be nonzero");
  if (strength.sign() <= 0) reject("strength_nonpositive", "strength must be positive");

  const GaussRational i = GaussRational::i();
  GaussRational a, b, z0, z0_check;
  if (potential == Potential::Newton) {
    // kappa^2 = 2 mu (eps + i) / alpha etc.; the sphere uses +-i, the hyperbolic plane +-1.
    const GaussRational shift = space == Space::Sphere ? i : GaussRational(1);
    a = GaussRational(2 * mu / strength) * (GaussRational(eps) + shift);
    b = GaussRational(2 * mu / strength) * (GaussRational(eps) - shift);
    z0 = GaussRational(mu * p / strength);
    z0_check = space == Space::Sphere ? GaussRational(p) * (a - b) / (GaussRational(4) * i)
                                      : GaussRational(p) * (a - b) / GaussRational(4);
  } else {
    const Rational shift = space == Space::Sphere ? Rational(1) : Rational(-1);
    a = GaussRational(mu * (2 * eps + shift) / strength);
    b = GaussRational(2 * mu * eps / strength);
    z0 = GaussRational(p * mu / strength);
    z0_check = space == Space::Sphere ? GaussRational(p) * (a - b) : -(GaussRational(p) * (a - b));
  }
  if (a.is_zero()) reject("kappa_sq_zero", "kappa^2 = 0: singular points collide");
  if (b.is_zero()) reject("lambda_sq_zero", "lambda^2 = 0: singular points collide");
  if (a == b) reject("kappa_lambda_collision", "kappa^2 = lambda^2");
  if (!(z0 == z0_check)) throw InvariantViolation("the two z0 formulas disagree");

  const GaussRational z0sq = z0 * z0;
  if ((z0sq - a).is_zero() || (z0sq - b).is_zero()) {
    reject("z0_collision", "z0 coincides with one of +-kappa, +-lambda");
  }
  if (potential == Potential::Oscillator) {
    const GaussRational dp = (a - b) * GaussRational(p);
    if ((dp * dp - b).is_zero()) {
      reject("oscillator_beta_denominator", "(kappa^2 - lambda^2)^2 p^2 = lambda^2");
    }
  }

  return ModelParams{space, potential, strength, mu, p, eps, a, b, z0, exact::make_context(a, b)};
}

}  // namespace curvcert::models
