#pragma once

#include <optional>
#include <vector>

#include "curvcert/ratcalc/ratfunc.hpp"

namespace curvcert::ratcalc {

struct LinearSolution {
  std::vector<TowerScalar> values;  // free unknowns set to zero
  int free_count = 0;
};

// Solves rows * x = rhs exactly; empty when inconsistent. Pivots must be units
// (NotInvertible otherwise).
std::optional<LinearSolution> solve_linear(const TowerContext& ctx,
                                           std::vector<std::vector<TowerScalar>> rows,
                                           std::vector<TowerScalar> rhs, int unknowns);

Poly poly_lcm(const Poly& a, const Poly& b);

// Looks for a monic P of the given degree with sum_j ops[j] * P^(j) = 0.
std::optional<Poly> find_polynomial_solution(const std::vector<RatFunc>& ops, int degree);

// Residual sum_j ops[j] * P^(j).
RatFunc apply_operator(const std::vector<RatFunc>& ops, const Poly& p);

}  // namespace curvcert::ratcalc
