#pragma once

#include <string>
#include <vector>

#include "curvcert/models/params.hpp"

namespace curvcert::models {

using ratcalc::Poly;
using ratcalc::RatFunc;

// A, B, C and the weight f of the z-domain normal variational system.
linode::FirstOrderSystem build_system(const ModelParams& params);

// The quadratic f(z): cot / coth for Newton, tan^2 / tanh^2 for the oscillator.
Poly gamma_f(const ModelParams& params);
// Denominator of A: 1 + f^2, f^2 - 1, f (f + 1) or f (1 - f).
Poly system_denominator(const ModelParams& params);
// The same denominator written as c (z^2 - kappa^2)(z^2 - lambda^2).
Poly factored_denominator(const ModelParams& params);

// Pipeline r(z): reduce, then normal form.
linode::NormalFormODE pipeline_r(const ModelParams& params);

struct TableEntry {
  std::string label;
  TowerScalar location;
  TowerScalar alpha;  // coefficient of (z - c)^-2
  TowerScalar beta;   // coefficient of (z - c)^-1
};

struct CoefficientTable {
  std::vector<TableEntry> entries;  // z0, kappa, -kappa, lambda, -lambda
  RatFunc reconstruct() const;
  const TableEntry& at(const std::string& label) const;
};

// Closed-form alpha_j, beta_j tables.
CoefficientTable closed_form_r(const ModelParams& params);

}  // namespace curvcert::models
