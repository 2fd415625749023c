#pragma once

#include <string>

#include "curvcert/ratcalc/poly.hpp"

namespace curvcert::ratcalc {

// num / den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  explicit RatFunc(TowerContext ctx);
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const TowerScalar& c);
  static RatFunc constant(const TowerContext& ctx, const GaussRational& c);
  static RatFunc z(const TowerContext& ctx);
  // c / (z - at)^order
  static RatFunc pole(const TowerScalar& at, int order, const TowerScalar& c);

  const TowerContext& context() const { return num_.context(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc inverse() const;
  std::string to_string() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(const TowerScalar& s, const RatFunc& f);
  friend RatFunc operator*(const RatFunc& f, const TowerScalar& s) { return s * f; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  // True when den is monic and coprime to num.
  bool is_normalized() const;

 private:
  struct Raw {};
  RatFunc(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

RatFunc differentiate(const RatFunc& f);
RatFunc pow(const RatFunc& f, int k);
// Throws PoleEvaluation when den(z) = 0.
TowerScalar evaluate(const RatFunc& f, const TowerScalar& z);

}  // namespace curvcert::ratcalc
