#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvcert/ratcalc/ratfunc.hpp"

namespace curvcert::linode {

using exact::Rational;
using exact::TowerScalar;
using ratcalc::Poly;
using ratcalc::RatFunc;

// p1' = A p1 + B w p2,  p2' = C w p1 - A p2,  w = 1 or sqrt(f).
struct FirstOrderSystem {
  RatFunc A, B, C;
  std::optional<RatFunc> weight;
};

// w'' + p w' + q w = 0
struct SecondOrderODE {
  RatFunc p, q;
};

// y'' = r y
struct NormalFormODE {
  RatFunc r;
};

struct Pole {
  TowerScalar location;
  int multiplicity;
  std::string label;
};

struct SingularPoint {
  std::string label;
  std::optional<TowerScalar> location;  // empty at infinity
  int order = 0;
  TowerScalar alpha;
  TowerScalar delta_squared;
  std::optional<Rational> delta_rational;  // nonnegative root of delta_squared

  bool at_infinity() const { return !location.has_value(); }
  // 1/2 at finite points, -1/2 at infinity.
  Rational exponent_center() const { return at_infinity() ? Rational(-1, 2) : Rational(1, 2); }
  // (center - delta/2, center + delta/2) when delta is rational.
  std::optional<std::pair<Rational, Rational>> rational_exponents() const;
  // Delta is not real (delta_squared not a nonnegative real rational).
  bool delta_nonreal_or_irrational() const { return !delta_rational.has_value(); }
  std::string exponents_string() const;
};

struct SingularitySpectrum {
  std::vector<SingularPoint> points;  // finite points first, infinity last

  const SingularPoint& infinity() const { return points.back(); }
  std::vector<const SingularPoint*> finite() const;
  const SingularPoint* find(const std::string& label) const;
};

SecondOrderODE reduce_to_second_order(const FirstOrderSystem& s);
NormalFormODE to_normal_form(const SecondOrderODE& ode);

// g'/g of the gauge p2 = g y: C'/(2C), plus f'/(4f) with a weight.
RatFunc gauge_log_derivative(const FirstOrderSystem& s);
bool verify_gauge_transform(const NormalFormODE& r, const SecondOrderODE& ode, const RatFunc& log_derivative);

// Multiplicity of each candidate in den(r); zero-multiplicity candidates dropped.
std::vector<Pole> locate_poles(const RatFunc& r, const std::vector<Pole>& candidates);

// Throws BadFactorization when the poles do not factor den(r), NonFuchsian
// for poles of order > 2 or ord at infinity > 2.
SingularitySpectrum singularity_spectrum(const NormalFormODE& r, const std::vector<Pole>& poles);

RatFunc symmetric_power_residual(const NormalFormODE& r, const RatFunc& v);

// omega' + omega^2 - r
RatFunc riccati_residual(const NormalFormODE& r, const RatFunc& omega);

}  // namespace curvcert::linode
