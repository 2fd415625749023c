#include "curvcert/ratcalc/linsolve.hpp"

#include <algorithm>

#include "curvcert/errors.hpp"

namespace curvcert::ratcalc {

std::optional<LinearSolution> solve_linear(const TowerContext& ctx,
                                           std::vector<std::vector<TowerScalar>> rows,
                                           std::vector<TowerScalar> rhs, int unknowns) {
  const int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < unknowns && r < m; ++c) {
    int piv = -1;
    bool nonzero_seen = false;
    for (int i = r; i < m; ++i) {
      if (rows[i][c].is_zero()) continue;
      nonzero_seen = true;
      if (rows[i][c].is_unit()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      if (nonzero_seen) throw NotInvertible("linear system pivot is a zero divisor");
      continue;
    }
    std::swap(rows[r], rows[piv]);
    std::swap(rhs[r], rhs[piv]);
    TowerScalar inv = rows[r][c].inverse();
    for (int k = c; k < unknowns; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      TowerScalar f = rows[i][c];
      for (int k = c; k < unknowns; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  LinearSolution sol;
  sol.values.assign(unknowns, TowerScalar(ctx));
  for (int i = 0; i < r; ++i) sol.values[pivot_col[i]] = rhs[i];
  sol.free_count = unknowns - r;
  return sol;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.context());
  return (divide_exact(a, poly_gcd(a, b)) * b).monic();
}

RatFunc apply_operator(const std::vector<RatFunc>& ops, const Poly& p) {
  RatFunc sum(p.context());
  Poly d = p;
  for (const auto& op : ops) {
    if (!op.is_zero() && !d.is_zero()) sum += op * RatFunc(d);
    d = d.derivative();
  }
  return sum;
}

std::optional<Poly> find_polynomial_solution(const std::vector<RatFunc>& ops, int degree) {
  if (ops.empty()) throw Error("empty operator");
  const TowerContext& ctx = ops.front().context();
  Poly l = Poly::constant(ctx, 1);
  for (const auto& op : ops) l = poly_lcm(l, op.den());
  std::vector<Poly> q;
  for (const auto& op : ops) q.push_back(op.num() * divide_exact(l, op.den()));

  // Residual polynomial of z^k under the cleared operator.
  auto residual = [&](int k) {
    Poly d = Poly::monomial(TowerScalar(ctx, 1), k);
    Poly sum(ctx);
    for (const auto& qj : q) {
      if (d.is_zero()) break;
      sum += qj * d;
      d = d.derivative();
    }
    return sum;
  };
  std::vector<Poly> cols;
  int rows_n = 0;
  for (int k = 0; k <= degree; ++k) {
    cols.push_back(residual(k));
    rows_n = std::max(rows_n, cols.back().degree() + 1);
  }
  std::vector<std::vector<TowerScalar>> rows(rows_n, std::vector<TowerScalar>(degree, TowerScalar(ctx)));
  std::vector<TowerScalar> rhs(rows_n, TowerScalar(ctx));
  for (int i = 0; i < rows_n; ++i) {
    for (int k = 0; k < degree; ++k) rows[i][k] = cols[k].coeff(i);
    rhs[i] = -cols[degree].coeff(i);
  }
  auto sol = solve_linear(ctx, std::move(rows), std::move(rhs), degree);
  if (!sol) return std::nullopt;
  std::vector<TowerScalar> coeffs = sol->values;
  coeffs.push_back(TowerScalar(ctx, 1));
  Poly p(ctx, std::move(coeffs));
  if (!apply_operator(ops, p).is_zero()) throw InvariantViolation("polynomial solution fails the operator");
  return p;
}

}  // namespace curvcert::ratcalc
