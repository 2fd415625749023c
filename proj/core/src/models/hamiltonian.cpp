#include "curvcert/models/hamiltonian.hpp"

#include <cmath>
#include <numbers>

namespace curvcert::models {

std::string to_string(HamiltonianKind k) {
  switch (k) {
    case HamiltonianKind::FullSphere: return "full-sphere";
    case HamiltonianKind::FullHyperbolic: return "full-hyperbolic";
    case HamiltonianKind::GammaRestriction: return "gamma-restriction";
    case HamiltonianKind::RestrictedProblem: return "restricted";
    case HamiltonianKind::FreePartS1: return "free-part-1";
    case HamiltonianKind::FreePartS2: return "free-part-2";
  }
  return "?";
}

HamiltonianKind hamiltonian_kind_from_string(const std::string& s) {
  for (auto k : {HamiltonianKind::FullSphere, HamiltonianKind::FullHyperbolic, HamiltonianKind::GammaRestriction,
                 HamiltonianKind::RestrictedProblem, HamiltonianKind::FreePartS1, HamiltonianKind::FreePartS2}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown Hamiltonian kind '" + s + "'");
}

ReducedHamiltonian::ReducedHamiltonian(HamiltonianParams<double> hp) : hp_(hp) {
  if (hp_.kind == HamiltonianKind::FullSphere) hp_.space = Space::Sphere;
  if (hp_.kind == HamiltonianKind::FullHyperbolic) hp_.space = Space::Hyperbolic;
}

void ReducedHamiltonian::check_theta(double theta) const {
  if (hp_.space == Space::Sphere) {
    if (!(theta > 0.0 && theta < std::numbers::pi)) throw DomainError("theta must lie in (0, pi) on the sphere");
  } else if (!(theta > 0.0)) {
    throw DomainError("theta must be positive on the hyperbolic plane");
  }
}

namespace {

struct Trig {
  double s, c;
};

Trig trig(Space space, double theta) {
  if (space == Space::Sphere) return {std::sin(theta), std::cos(theta)};
  return {std::sinh(theta), std::cosh(theta)};
}

}  // namespace

double ReducedHamiltonian::dpotential(double s, double c) const {
  switch (hp_.potential) {
    case PotentialTerm::None:
      return 0.0;
    case PotentialTerm::Newton:
      // d/dtheta (-a cot) = a / sin^2, and likewise for coth
      return hp_.strength / (s * s);
    case PotentialTerm::Oscillator:
      if (c == 0.0) throw DomainError("oscillator potential is singular at cos(theta) = 0");
      // d/dtheta (b/2) tan^2 = b tan / cos^2, and likewise for tanh
      return hp_.strength * s / (c * c * c);
  }
  return 0.0;
}

double ReducedHamiltonian::value(const PhasePoint& x) const {
  if (hp_.kind == HamiltonianKind::RestrictedProblem) throw DomainError("use restricted_value");
  if (hp_.kind != HamiltonianKind::GammaRestriction) check_theta(x.theta);
  auto [s, c] = trig(hp_.space, x.theta);
  return hamiltonian_value(hp_, s, c, x.p_theta, x.p0, x.p1, x.p2);
}

std::array<double, 5> ReducedHamiltonian::gradient(const PhasePoint& x) const {
  if (hp_.kind == HamiltonianKind::RestrictedProblem) throw DomainError("use restricted_gradient");
  if (hp_.kind != HamiltonianKind::GammaRestriction) check_theta(x.theta);
  auto [s, c] = trig(hp_.space, x.theta);
  const double K = 1.0 / (2.0 * hp_.mu);
  const double cp = hp_.coupling;
  const double sgn = hp_.space == Space::Sphere ? -1.0 : 1.0;
  const auto& [th, pt, p0, p1, p2] = x;
  (void)th;
  std::array<double, 5> g{};
  const bool kinetic = hp_.kind != HamiltonianKind::FreePartS2;
  const bool coupled = hp_.kind == HamiltonianKind::FullSphere || hp_.kind == HamiltonianKind::FullHyperbolic ||
                       hp_.kind == HamiltonianKind::FreePartS2;
  const bool with_v = hp_.kind == HamiltonianKind::FullSphere || hp_.kind == HamiltonianKind::FullHyperbolic ||
                      hp_.kind == HamiltonianKind::GammaRestriction;
  if (hp_.kind == HamiltonianKind::GammaRestriction) {
    g[0] = dpotential(s, c);
    g[1] = 2.0 * K * pt + hp_.p;
    return g;
  }
  const double s2 = s * s;
  const double cot = c / s;
  if (kinetic) {
    g[0] += K * p2 * p2 * (-2.0 * c / (s2 * s));
    g[1] += 2.0 * K * pt;
    g[4] += 2.0 * K * p2 / s2;
  }
  if (coupled) {
    g[0] += cp * p1 * p2 * (-1.0 / s2);
    g[1] += cp * p0;
    g[2] += cp * pt;
    g[3] += cp * p2 * cot;
    g[4] += cp * (2.0 * sgn * p2 + p1 * cot);
  }
  if (with_v) g[0] += dpotential(s, c);
  return g;
}

double ReducedHamiltonian::restricted_value(const std::array<double, 4>& x) const {
  check_theta(x[0]);
  return models::restricted_value(hp_, std::sin(x[0]), std::cos(x[0]), std::sin(x[2]), std::cos(x[2]), x[1], x[3]);
}

std::array<double, 4> ReducedHamiltonian::restricted_gradient(const std::array<double, 4>& x) const {
  check_theta(x[0]);
  const double s = std::sin(x[0]), c = std::cos(x[0]);
  const double sp = std::sin(x[2]), cp = std::cos(x[2]);
  const double pt = x[1], pp = x[3];
  const double w = hp_.omega, m2 = hp_.m2;
  const double s2 = s * s;
  return {
      pp * pp * (-c / (s2 * s)) / m2 + w * pp * sp / s2 + dpotential(s, c),
      pt / m2 + w * cp,
      w * (-pt * sp - pp * cp * c / s),
      pp / (m2 * s2) - w * sp * c / s,
  };
}

double ReducedHamiltonian::value_r_chart(double r, double p_r, double p0, double p1, double p2) const {
  if (!(r > 0.0)) throw DomainError("r must be positive");
  const double K8 = 1.0 / (8.0 * hp_.mu);
  const double r2 = r * r;
  double h = 0.0;
  double s = 0.0, c = 0.0;
  if (hp_.space == Space::Sphere) {
    s = 2.0 * r / (1.0 + r2);
    c = (1.0 - r2) / (1.0 + r2);
    const double kin = (1.0 + r2) * (1.0 + r2) * K8 * (p_r * p_r + p2 * p2 / r2);
    const double cpl = (1.0 + r2) * p_r * p0 / 2.0 - p2 * p2 + (1.0 - r2) * p1 * p2 / (2.0 * r);
    if (hp_.kind == HamiltonianKind::FreePartS1) return kin;
    if (hp_.kind == HamiltonianKind::FreePartS2) return hp_.coupling * cpl;
    h = kin + hp_.coupling * cpl;
  } else {
    if (!(r < 1.0)) throw DomainError("r = tanh(theta/2) must be below 1");
    s = 2.0 * r / (1.0 - r2);
    c = (1.0 + r2) / (1.0 - r2);
    const double kin = (1.0 - r2) * (1.0 - r2) * K8 * (p_r * p_r + p2 * p2 / r2);
    const double cpl = (1.0 - r2) * p_r * p0 / 2.0 + p2 * p2 + (1.0 + r2) * p1 * p2 / (2.0 * r);
    if (hp_.kind == HamiltonianKind::FreePartS1) return kin;
    if (hp_.kind == HamiltonianKind::FreePartS2) return hp_.coupling * cpl;
    h = kin + hp_.coupling * cpl;
  }
  if (hp_.kind != HamiltonianKind::FullSphere && hp_.kind != HamiltonianKind::FullHyperbolic) {
    throw DomainError("the r chart is provided for the full and free-part Hamiltonians");
  }
  return h + potential_value(hp_, s, c);
}

}  // namespace curvcert::models
