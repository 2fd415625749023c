#pragma once

#include <array>
#include <string>

#include "curvcert/errors.hpp"
#include "curvcert/models/params.hpp"

namespace curvcert::models {

enum class HamiltonianKind { FullSphere, FullHyperbolic, GammaRestriction, RestrictedProblem, FreePartS1, FreePartS2 };
enum class PotentialTerm { None, Newton, Oscillator };

std::string to_string(HamiltonianKind k);
HamiltonianKind hamiltonian_kind_from_string(const std::string& s);

// Simplified reduced Hamiltonians, R and the time scale absorbed:
//   FullSphere      h = K (pt^2 + p2^2/sin^2) + c (pt p0 - p2^2 + p1 p2 cot) + V
//   FullHyperbolic  h = K (pt^2 + p2^2/sinh^2) + c (pt p0 + p2^2 + p1 p2 coth) + V
//   GammaRestriction h0 = K pt^2 + p pt + V
//   FreePartS1      K (pt^2 + p2^2/sin^2)
//   FreePartS2      c (pt p0 -+ p2^2 + p1 p2 cot)
//   RestrictedProblem (theta, pt, psi, ppsi):
//                   (pt^2 + ppsi^2/sin^2)/(2 m2) + omega (pt cos psi - ppsi sin psi cot) + V
// with K = 1/(2 mu), c the coupling weight (1 by default; 0 drops the coupling) and
// V = -strength cot (Newton) or (strength/2) tan^2 (oscillator), hyperbolic functions on H^2.
template <class T>
struct HamiltonianParams {
  HamiltonianKind kind = HamiltonianKind::FullSphere;
  Space space = Space::Sphere;
  PotentialTerm potential = PotentialTerm::None;
  T strength{0};
  T mu{1};
  T coupling{1};
  T p{0};      // GammaRestriction
  T omega{0};  // RestrictedProblem
  T m2{1};     // RestrictedProblem
};

// s, c: sin and cos (sinh and cosh on H^2) of theta, supplied by the caller so
// that exact values can be used.
template <class T>
T potential_value(const HamiltonianParams<T>& hp, const T& s, const T& c) {
  switch (hp.potential) {
    case PotentialTerm::None:
      return T(0);
    case PotentialTerm::Newton:
      if (s == T(0)) throw DomainError("Newton potential is singular at theta = 0");
      return -hp.strength * c / s;
    case PotentialTerm::Oscillator:
      if (c == T(0)) throw DomainError("oscillator potential is singular at cos(theta) = 0");
      return hp.strength * s * s / (T(2) * c * c);
  }
  return T(0);
}

template <class T>
T hamiltonian_value(const HamiltonianParams<T>& hp, const T& s, const T& c, const T& pt, const T& p0, const T& p1,
                    const T& p2) {
  const T K = T(1) / (T(2) * hp.mu);
  const T sgn = hp.space == Space::Sphere ? T(-1) : T(1);
  auto need_s = [&] {
    if (s == T(0)) throw DomainError("theta at a pole of the chart");
  };
  switch (hp.kind) {
    case HamiltonianKind::FullSphere:
    case HamiltonianKind::FullHyperbolic:
      need_s();
      return K * (pt * pt + p2 * p2 / (s * s)) + hp.coupling * (pt * p0 + sgn * p2 * p2 + p1 * p2 * c / s) +
             potential_value(hp, s, c);
    case HamiltonianKind::GammaRestriction:
      return K * pt * pt + hp.p * pt + potential_value(hp, s, c);
    case HamiltonianKind::FreePartS1:
      need_s();
      return K * (pt * pt + p2 * p2 / (s * s));
    case HamiltonianKind::FreePartS2:
      need_s();
      return hp.coupling * (pt * p0 + sgn * p2 * p2 + p1 * p2 * c / s);
    case HamiltonianKind::RestrictedProblem:
      throw DomainError("use restricted_value for the restricted problem");
  }
  return T(0);
}

// sp, cp: sin and cos of psi.
template <class T>
T restricted_value(const HamiltonianParams<T>& hp, const T& s, const T& c, const T& sp, const T& cp, const T& pt,
                   const T& ppsi) {
  if (s == T(0)) throw DomainError("theta at a pole of the chart");
  return (pt * pt + ppsi * ppsi / (s * s)) / (T(2) * hp.m2) + hp.omega * (pt * cp - ppsi * sp * c / s) +
         potential_value(hp, s, c);
}

// Phase point in the (theta, p_theta, p0, p1, p2) chart.
struct PhasePoint {
  double theta = 0, p_theta = 0, p0 = 0, p1 = 0, p2 = 0;
  std::array<double, 5> as_array() const { return {theta, p_theta, p0, p1, p2}; }
  static PhasePoint from_array(const std::array<double, 5>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
};

// Double-precision evaluator with analytic gradient.
class ReducedHamiltonian {
 public:
  explicit ReducedHamiltonian(HamiltonianParams<double> hp);

  const HamiltonianParams<double>& params() const { return hp_; }
  Space space() const { return hp_.space; }

  // Throws DomainError for theta in {0, pi} (sphere) or theta <= 0 (hyperbolic).
  double value(const PhasePoint& x) const;
  // dh/d(theta, p_theta, p0, p1, p2)
  std::array<double, 5> gradient(const PhasePoint& x) const;

  // (theta, p_theta, psi, p_psi) for RestrictedProblem.
  double restricted_value(const std::array<double, 4>& x) const;
  std::array<double, 4> restricted_gradient(const std::array<double, 4>& x) const;

  // The same h written in the (r, p_r) chart, r = tan(theta/2) or tanh(theta/2).
  double value_r_chart(double r, double p_r, double p0, double p1, double p2) const;

 private:
  void check_theta(double theta) const;
  double dpotential(double s, double c) const;
  HamiltonianParams<double> hp_;
};

}  // namespace curvcert::models
