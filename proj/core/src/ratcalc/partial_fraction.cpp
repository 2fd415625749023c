#include "curvcert/ratcalc/partial_fraction.hpp"

#include "curvcert/errors.hpp"

namespace curvcert::ratcalc {

RatFunc PartialFraction::reconstruct() const {
  RatFunc sum(polynomial_part);
  for (const auto& t : terms) sum += RatFunc::pole(t.pole, t.order, t.coefficient);
  return sum;
}

TowerScalar PartialFraction::coefficient(const TowerScalar& pole, int order) const {
  for (const auto& t : terms)
    if (t.order == order && t.pole == pole) return t.coefficient;
  return TowerScalar(pole.context());
}

namespace {

// First `count` coefficients of the power series a(s) / b(s), b(0) a unit.
std::vector<TowerScalar> series_divide(const Poly& a, const Poly& b, int count) {
  const TowerContext& ctx = a.context();
  TowerScalar inv0 = b.coeff(0).inverse();
  std::vector<TowerScalar> q;
  q.reserve(count);
  for (int k = 0; k < count; ++k) {
    TowerScalar acc = a.coeff(k);
    for (int j = 1; j <= k && j <= b.degree(); ++j) acc -= b.coeff(j) * q[k - j];
    q.push_back(acc * inv0);
  }
  (void)ctx;
  return q;
}

}  // namespace

std::vector<TowerScalar> taylor_coefficients(const RatFunc& f, const TowerScalar& c, int count) {
  Poly den = f.den().shifted(c);
  if (den.coeff(0).is_zero()) throw PoleEvaluation("Taylor expansion at a pole");
  return series_divide(f.num().shifted(c), den, count);
}

PartialFraction partial_fractions(const RatFunc& f, const std::vector<Root>& roots) {
  const TowerContext& ctx = f.context();
  Poly product = Poly::constant(ctx, 1);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].multiplicity <= 0) throw BadFactorization("root multiplicity must be positive");
    for (size_t j = 0; j < i; ++j)
      if (roots[i].value == roots[j].value) throw BadFactorization("repeated root in factorization");
    product *= pow(Poly::linear(roots[i].value), roots[i].multiplicity);
  }
  if (!(product == f.den()))
    throw BadFactorization("supplied roots do not factor the denominator " + f.den().to_string());

  PartialFraction out{{}, f.num().divmod(f.den()).first};
  for (const auto& root : roots) {
    // g(z) = (z - c)^m f(z) = num / cofactor; its Taylor data at c are the coefficients.
    Poly cofactor = divide_exact(f.den(), pow(Poly::linear(root.value), root.multiplicity));
    auto g = series_divide(f.num().shifted(root.value), cofactor.shifted(root.value), root.multiplicity);
    for (int k = 0; k < root.multiplicity; ++k) {
      int order = root.multiplicity - k;
      if (g[k].is_zero()) continue;
      out.terms.push_back({root.value, order, g[k]});
    }
  }
  if (!(out.reconstruct() == f)) throw InvariantViolation("partial fraction reconstruction mismatch");
  return out;
}

}  // namespace curvcert::ratcalc
