#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvcert/models/system.hpp"

namespace curvcert::models {

struct AlphaCheck {
  std::string label;
  bool nonreal = false;
  // "exact-embedding", "exact-conjugation" or "float"
  std::string method;
  double min_abs_imag = 0.0;  // over the four sign branches
};

struct LemmaReport {
  std::string name;
  std::string hypotheses;
  bool hypotheses_hold = true;
  std::vector<std::string> violated;
  std::vector<AlphaCheck> alphas;
  bool conclusion_verified = false;
  // i Im alpha = +-mu^2 (1 - mu) p / (2 strength kappa) (resp. lambda), when kappa^2, lambda^2 are real.
  std::optional<bool> imaginary_part_identity;
};

// Checks the hypotheses for the case and verifies that the relevant alpha_j
// are non-real. Throws HypothesisViolated listing the failing conditions.
LemmaReport lemma_condition(const ModelParams& params);

// Same, but returns a report with hypotheses_hold = false instead of throwing.
LemmaReport lemma_report(const ModelParams& params);

// Exact decision of (sqrt(eps^2+1) - eps)(eps^2+1) == (mu-1)^2 p^2 / (4 alpha mu).
bool newton_sphere_inequality_holds(const Rational& alpha, const Rational& mu, const Rational& p,
                                    const Rational& eps);

// Logarithmic derivatives of the two independent mu = 1 solutions. Throws NotMu1.
std::pair<RatFunc, RatFunc> mu1_solutions(const ModelParams& params);

}  // namespace curvcert::models
