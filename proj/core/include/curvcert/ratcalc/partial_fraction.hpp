#pragma once

#include <optional>
#include <vector>

#include "curvcert/ratcalc/ratfunc.hpp"

namespace curvcert::ratcalc {

struct Root {
  TowerScalar value;
  int multiplicity;
};

struct PartialFractionTerm {
  TowerScalar pole;
  int order;
  TowerScalar coefficient;
};

struct PartialFraction {
  std::vector<PartialFractionTerm> terms;
  Poly polynomial_part;

  RatFunc reconstruct() const;
  // Coefficient of 1/(z - pole)^order, zero when absent.
  TowerScalar coefficient(const TowerScalar& pole, int order) const;
};

// Taylor coefficients of num/den at c up to s^(count-1); den(c) must be a unit.
std::vector<TowerScalar> taylor_coefficients(const RatFunc& f, const TowerScalar& c, int count);

// Throws BadFactorization when the roots do not multiply out to den(f).
PartialFraction partial_fractions(const RatFunc& f, const std::vector<Root>& roots);

}  // namespace curvcert::ratcalc
