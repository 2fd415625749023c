#include "curvcert/models/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvcert/errors.hpp"

namespace curvcert::models {

namespace {

constexpr double kImagMargin = 1e-9;

double min_abs_imag(const TowerScalar& x) {
  double m = std::numeric_limits<double>::infinity();
  for (auto br : exact::kAllBranches) m = std::min(m, std::abs(exact::embed_complex(x, br).imag()));
  return m;
}

int real_sign_flip(const GaussRational& sq) { return sq.re().sign() < 0 ? -1 : 1; }

// i * Im(x) as a tower element, for real kappa^2, lambda^2: complex conjugation acts
// on the tower as i -> -i together with kappa -> -kappa when kappa^2 < 0 (same for lambda).
TowerScalar imaginary_part_times_i(const ModelParams& prm, const TowerScalar& x) {
  auto conj = exact::apply_signs(x, real_sign_flip(prm.kappa_sq), real_sign_flip(prm.lambda_sq), true);
  return (x - conj) * GaussRational(Rational(1, 2));
}

AlphaCheck check_alpha(const ModelParams& prm, const std::string& label, const TowerScalar& alpha) {
  AlphaCheck c;
  c.label = label;
  c.min_abs_imag = min_abs_imag(alpha);

  bool all_exact = true;
  bool nonreal = true;
  for (auto br : exact::kAllBranches) {
    auto v = exact::embed_exact(alpha, br);
    if (!v) {
      all_exact = false;
      break;
    }
    nonreal = nonreal && !v->is_real();
  }
  if (all_exact) {
    c.method = "exact-embedding";
    c.nonreal = nonreal;
    return c;
  }
  if (prm.kappa_sq.is_real() && prm.lambda_sq.is_real()) {
    // A unit stays nonzero under every embedding.
    if (imaginary_part_times_i(prm, alpha).is_unit()) {
      c.method = "exact-conjugation";
      c.nonreal = true;
      return c;
    }
  }
  c.method = "float";
  c.nonreal = c.min_abs_imag > kImagMargin;
  return c;
}

std::vector<std::string> relevant_labels(const ModelParams& prm) {
  if (prm.potential == Potential::Newton) return {"kappa", "-kappa", "lambda", "-lambda"};
  return {"kappa", "-kappa"};
}

}  // namespace

bool newton_sphere_inequality_holds(const Rational& alpha, const Rational& mu, const Rational& p,
                                    const Rational& eps) {
  const Rational rhs = (mu - 1) * (mu - 1) * p * p / (4 * alpha * mu);
  const Rational q = eps * eps + 1;
  // Equality iff sqrt(q) = eps + rhs / q =: t, i.e. t >= 0 and t^2 = q.
  const Rational t = eps + rhs / q;
  const bool equal = t.sign() >= 0 && t * t == q;
  return !equal;
}

LemmaReport lemma_report(const ModelParams& prm) {
  LemmaReport rep;
  const bool newton = prm.potential == Potential::Newton;
  const bool sphere = prm.space == Space::Sphere;
  if (newton && sphere) {
    rep.name = "non-real exponent data, Newton potential on the sphere";
    rep.hypotheses = "mu != 1, p != 0, (sqrt(eps^2+1) - eps)(eps^2+1) != (mu-1)^2 p^2 / (4 alpha mu)";
    if (!newton_sphere_inequality_holds(prm.strength, prm.mu, prm.p, prm.eps)) {
      rep.violated.push_back("(sqrt(eps^2+1) - eps)(eps^2+1) != (mu-1)^2 p^2 / (4 alpha mu)");
    }
  } else if (newton) {
    rep.name = "non-real exponent data, Newton potential on the hyperbolic plane";
    rep.hypotheses = "mu != 1, p != 0, eps < -1";
    if (!(prm.eps < Rational(-1))) rep.violated.push_back("eps < -1");
  } else if (sphere) {
    rep.name = "non-real exponent data, oscillator potential on the sphere";
    rep.hypotheses = "mu != 1, p != 0, eps < -1/2";
    if (!(prm.eps < Rational(-1, 2))) rep.violated.push_back("eps < -1/2");
  } else {
    rep.name = "non-real exponent data, oscillator potential on the hyperbolic plane";
    rep.hypotheses = "mu != 1, p != 0, eps < 1/2";
    if (!(prm.eps < Rational(1, 2))) rep.violated.push_back("eps < 1/2");
  }
  if (prm.mu == Rational(1)) rep.violated.insert(rep.violated.begin(), "mu != 1");
  if (prm.p.is_zero()) rep.violated.insert(rep.violated.begin(), "p != 0");
  rep.hypotheses_hold = rep.violated.empty();

  const CoefficientTable table = closed_form_r(prm);
  rep.conclusion_verified = true;
  for (const auto& label : relevant_labels(prm)) {
    rep.alphas.push_back(check_alpha(prm, label, table.at(label).alpha));
    rep.conclusion_verified = rep.conclusion_verified && rep.alphas.back().nonreal;
  }

  // i Im alpha_{1,2} = +-mu^2 (1-mu) p / (2 s kappa), and the lambda analogue for Newton.
  const bool k_imag = prm.kappa_sq.is_real() && prm.kappa_sq.re().sign() < 0;
  const bool l_imag = prm.lambda_sq.is_real() && prm.lambda_sq.re().sign() < 0;
  const bool needs_lambda = newton;
  if (rep.hypotheses_hold && (!sphere || !newton)) {
    if (k_imag && (!needs_lambda || l_imag) && prm.lambda_sq.is_real()) {
      const TowerScalar coef(prm.ctx, GaussRational(prm.mu * prm.mu * (1 - prm.mu) * prm.p / (2 * prm.strength)));
      const TowerScalar ek = coef * prm.kappa().inverse();
      bool ok = imaginary_part_times_i(prm, table.at("kappa").alpha) == ek &&
                imaginary_part_times_i(prm, table.at("-kappa").alpha) == -ek;
      if (needs_lambda) {
        const TowerScalar el = coef * prm.lambda().inverse();
        ok = ok && imaginary_part_times_i(prm, table.at("lambda").alpha) == el &&
             imaginary_part_times_i(prm, table.at("-lambda").alpha) == -el;
      }
      rep.imaginary_part_identity = ok;
    }
  }
  return rep;
}

LemmaReport lemma_condition(const ModelParams& prm) {
  LemmaReport rep = lemma_report(prm);
  if (!rep.hypotheses_hold) {
    std::string what = "hypotheses violated:";
    for (const auto& v : rep.violated) what += " [" + v + "]";
    throw HypothesisViolated(rep.violated, what);
  }
  return rep;
}

std::pair<RatFunc, RatFunc> mu1_solutions(const ModelParams& prm) {
  if (!(prm.mu == Rational(1))) throw NotMu1("mu1_solutions requires mu = 1, got mu = " + prm.mu.to_string());
  const auto& ctx = prm.ctx;
  const TowerScalar z0 = prm.z0_scalar();
  auto c = [&](long n, long d) { return TowerScalar(ctx, GaussRational(Rational(n, d))); };
  if (prm.potential == Potential::Newton) {
    // y1 = (z - z0)^(3/2), y2 = (z - z0)^(-1/2)
    return {RatFunc::pole(z0, 1, c(3, 2)), RatFunc::pole(z0, 1, c(-1, 2))};
  }
  // y1 = (z^2 - lambda^2)^(3/4) (z - z0)^(-1/2)
  // y2 = (z^2 - lambda^2)^(1/4) (z0 z - lambda^2) (z - z0)^(-1/2)
  const RatFunc z = RatFunc::z(ctx);
  const RatFunc q = z * z - RatFunc::constant(ctx, prm.lambda_sq);
  const RatFunc lin = RatFunc::constant(z0) * z - RatFunc::constant(ctx, prm.lambda_sq);
  RatFunc w1 = c(3, 2) * (z / q) + RatFunc::pole(z0, 1, c(-1, 2));
  RatFunc w2 = c(1, 2) * (z / q) + RatFunc::constant(z0) / lin + RatFunc::pole(z0, 1, c(-1, 2));
  return {w1, w2};
}

}  // namespace curvcert::models
