#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <string>

#include "curvcert/exact/gauss.hpp"

namespace curvcert::exact {

// Q(i)[kappa, lambda] / (kappa^2 - a, lambda^2 - b). Shared, immutable.
//
// The quotient is a field unless a, b or ab is a square in Q(i). In that case the
// tower splits and a generator is fixed to its principal value: kappa = sqrt(a),
// lambda = sqrt(b), or kappa lambda = sqrt(a) sqrt(b). Scalars are kept reduced
// modulo these relations, so every nonzero scalar stays invertible.
class TowerContext {
 public:
  TowerContext(GaussRational a, GaussRational b);

  const GaussRational& a() const { return d_->a; }
  const GaussRational& b() const { return d_->b; }
  const GaussRational& ab() const { return d_->ab; }
  // Principal square roots folded into Q(i), when they exist.
  const std::optional<GaussRational>& kappa_value() const { return d_->kappa; }
  const std::optional<GaussRational>& lambda_value() const { return d_->lambda; }
  // kappa lambda when ab (but neither a nor b) is a square.
  const std::optional<GaussRational>& kappa_lambda_value() const { return d_->kappa_lambda; }
  bool split() const { return d_->kappa || d_->lambda || d_->kappa_lambda; }

  // Structural equality of (a, b).
  friend bool operator==(const TowerContext& x, const TowerContext& y) {
    return x.d_ == y.d_ || (x.d_->a == y.d_->a && x.d_->b == y.d_->b);
  }

 private:
  struct Data {
    GaussRational a, b, ab;
    std::optional<GaussRational> kappa, lambda, kappa_lambda;
  };
  std::shared_ptr<const Data> d_;
};

// Throws DegenerateTower when a = 0, b = 0 or a = b.
TowerContext make_context(const GaussRational& a, const GaussRational& b);

// Sign choice kappa = s1 * sqrt(a), lambda = s2 * sqrt(b) (principal roots).
struct Branch {
  int kappa_sign = 1;
  int lambda_sign = 1;
};
inline constexpr std::array<Branch, 4> kAllBranches = {
    Branch{1, 1}, Branch{1, -1}, Branch{-1, 1}, Branch{-1, -1}};

// c00 + c10*kappa + c01*lambda + c11*kappa*lambda.
class TowerScalar {
 public:
  explicit TowerScalar(TowerContext ctx);
  TowerScalar(TowerContext ctx, GaussRational c00);
  TowerScalar(TowerContext ctx, GaussRational c00, GaussRational c10, GaussRational c01,
              GaussRational c11);

  static TowerScalar kappa(const TowerContext& ctx);
  static TowerScalar lambda(const TowerContext& ctx);

  const TowerContext& context() const { return ctx_; }
  const GaussRational& c00() const { return c_[0]; }
  const GaussRational& c10() const { return c_[1]; }
  const GaussRational& c01() const { return c_[2]; }
  const GaussRational& c11() const { return c_[3]; }
  const std::array<GaussRational, 4>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // Purely in Q(i) (no kappa / lambda part).
  std::optional<GaussRational> as_gauss() const;
  bool is_unit() const;

  // Throws DivisionByZero for 0, NotInvertible for zero divisors.
  TowerScalar inverse() const;

  std::string to_string() const;

  TowerScalar operator-() const;
  TowerScalar& operator+=(const TowerScalar& o);
  TowerScalar& operator-=(const TowerScalar& o);
  TowerScalar& operator*=(const TowerScalar& o);
  TowerScalar& operator/=(const TowerScalar& o);
  TowerScalar& operator*=(const GaussRational& g);

  friend TowerScalar operator+(TowerScalar x, const TowerScalar& y) { return x += y; }
  friend TowerScalar operator-(TowerScalar x, const TowerScalar& y) { return x -= y; }
  friend TowerScalar operator*(TowerScalar x, const TowerScalar& y) { return x *= y; }
  friend TowerScalar operator/(TowerScalar x, const TowerScalar& y) { return x /= y; }
  friend TowerScalar operator*(TowerScalar x, const GaussRational& g) { return x *= g; }
  friend TowerScalar operator*(const GaussRational& g, TowerScalar x) { return x *= g; }
  friend bool operator==(const TowerScalar& x, const TowerScalar& y);

 private:
  void check_same(const TowerScalar& o) const;
  void reduce();
  TowerContext ctx_;
  std::array<GaussRational, 4> c_;
};

TowerScalar pow(const TowerScalar& x, int k);

std::optional<Rational> is_real_rational(const TowerScalar& x);

// Generators folded into Q(i) by a split tower ignore the branch sign.
std::complex<double> embed_complex(const TowerScalar& x, Branch branch);

// Exact image in Q(i) under a branch, available when a and b are squares in Q(i).
std::optional<GaussRational> embed_exact(const TowerScalar& x, Branch branch);

// Automorphism kappa -> sk*kappa, lambda -> sl*lambda, optionally conjugating Q(i).
TowerScalar apply_signs(const TowerScalar& x, int sk, int sl, bool conjugate_i);

}  // namespace curvcert::exact
