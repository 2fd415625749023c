#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvcert/exact/tower.hpp"

namespace curvcert::ratcalc {

using exact::GaussRational;
using exact::Rational;
using exact::TowerContext;
using exact::TowerScalar;

// Dense univariate polynomial over a tower, coefficients low to high.
class Poly {
 public:
  explicit Poly(TowerContext ctx);
  Poly(TowerContext ctx, std::vector<TowerScalar> coeffs);

  static Poly constant(const TowerScalar& c);
  static Poly constant(const TowerContext& ctx, const GaussRational& c);
  static Poly z(const TowerContext& ctx);
  // z - root
  static Poly linear(const TowerScalar& root);
  static Poly monomial(const TowerScalar& c, int k);

  const TowerContext& context() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  TowerScalar coeff(int k) const;
  const TowerScalar& leading() const;
  const std::vector<TowerScalar>& coeffs() const { return c_; }

  Poly derivative() const;
  TowerScalar evaluate(const TowerScalar& x) const;
  // Coefficients of s -> p(c + s).
  Poly shifted(const TowerScalar& c) const;
  // Leading coefficient must be a unit.
  Poly monic() const;
  // Quotient and remainder; the divisor's leading coefficient must be a unit.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  // Descending-degree rendering.
  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const TowerScalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const TowerScalar& s) { return a *= s; }
  friend Poly operator*(const TowerScalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();
  TowerContext ctx_;
  std::vector<TowerScalar> c_;
};

Poly pow(const Poly& p, int k);

// Monic gcd by the Euclidean algorithm. Throws NotInvertible if a remainder
// has a zero-divisor leading coefficient.
Poly poly_gcd(const Poly& p, const Poly& q);

// Exact quotient; throws InvariantViolation when d does not divide p.
Poly divide_exact(const Poly& p, const Poly& d);

std::string scalar_to_string(const TowerScalar& s);

}  // namespace curvcert::ratcalc
