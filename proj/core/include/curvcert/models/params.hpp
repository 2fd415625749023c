#pragma once

#include <string>
#include <vector>

#include "curvcert/linode/linode.hpp"

namespace curvcert::models {

using exact::GaussRational;
using exact::Rational;
using exact::TowerContext;
using exact::TowerScalar;

enum class Space { Sphere, Hyperbolic };
enum class Potential { Newton, Oscillator };

std::string to_string(Space s);
std::string to_string(Potential p);
Space space_from_string(const std::string& s);
Potential potential_from_string(const std::string& s);

// Energy parameter eps, per case:
//   Newton:     eps = (h0 + mu p^2 / 2) / alpha, so that alpha z^2/(2 mu) - cot(theta) = eps along Gamma
//               (coth for the hyperbolic plane);
//   oscillator: eps = (h0 + mu p^2 / 2) / beta, so that tan^2(theta) = -beta z^2 / mu + 2 eps
//               (tanh for the hyperbolic plane);
// with z = (p_theta + mu p) / strength.
struct ModelParams {
  Space space;
  Potential potential;
  Rational strength;  // alpha (Newton) or beta (oscillator)
  Rational mu;
  Rational p;
  Rational eps;
  GaussRational kappa_sq;
  GaussRational lambda_sq;
  GaussRational z0;
  TowerContext ctx;

  TowerScalar kappa() const { return TowerScalar::kappa(ctx); }
  TowerScalar lambda() const { return TowerScalar::lambda(ctx); }
  TowerScalar z0_scalar() const { return TowerScalar(ctx, z0); }
  // z0, kappa, -kappa, lambda, -lambda, each with multiplicity 2.
  std::vector<linode::Pole> singular_points() const;
  std::string case_name() const;
};

// Throws DegenerateParameters naming the violated guard. mu = 1 is admitted
// (the integrable reference case); mu = 0 is not.
ModelParams derive_params(Space space, Potential potential, const Rational& strength, const Rational& mu,
                          const Rational& p, const Rational& eps);

}  // namespace curvcert::models
