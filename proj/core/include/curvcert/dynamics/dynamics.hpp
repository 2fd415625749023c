#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "curvcert/models/hamiltonian.hpp"

namespace curvcert::dynamics {

using models::ModelParams;
using models::PhasePoint;
using models::ReducedHamiltonian;
using models::Space;

using State5 = std::array<double, 5>;  // theta, p_theta, p0, p1, p2

struct PhaseState {
  double theta = 0, p_theta = 0, p0 = 0, p1 = 0, p2 = 0;
  Space space = Space::Sphere;

  State5 as_array() const { return {theta, p_theta, p0, p1, p2}; }
  PhasePoint point() const { return {theta, p_theta, p0, p1, p2}; }
  static PhaseState from_array(const State5& a, Space s) { return {a[0], a[1], a[2], a[3], a[4], s}; }
};

// Lie-Poisson structure on T*I x so(3)* (sphere) or T*I x so(2,1)* (hyperbolic plane).
// Every bracket {x_a, x_b} is constant or linear in the coordinates.
class PoissonStructure {
 public:
  explicit PoissonStructure(Space space) : space_(space) {}
  Space space() const { return space_; }

  // {x_a, x_b} = constant[a][b] + sum_k linear[a][b][k] x_k
  long constant(int a, int b) const;
  long linear(int a, int b, int k) const;
  std::array<std::array<double, 5>, 5> matrix(const State5& x) const;

  // p0^2 + p1^2 + p2^2 = gamma^2 on the sphere, p0^2 + p1^2 - p2^2 = gamma on H^2.
  double casimir(const State5& x) const;

  // Exact check over all monomials of degree <= 2 in the five coordinates.
  bool antisymmetric() const;
  bool jacobi_identity() const;

 private:
  Space space_;
};

// x'_a = sum_b Pi_ab dh/dx_b. Throws DomainError at chart singularities.
State5 vector_field(const ReducedHamiltonian& h, const State5& x);
// Central differences of h, for cross-checking the analytic gradient.
State5 numeric_gradient(const ReducedHamiltonian& h, const State5& x, double step = 1e-6);

enum class Method { RK4, DormandPrince };

struct Integral {
  std::string name;
  std::function<double(const PhaseState&)> f;
};

// Extra integrals of the integrable cases.
Integral mu1_integral(Space space);        // p1 sin + p2 cos (sinh, cosh on H^2)
Integral p2_integral();                    // zero coupling (first body infinitely heavy)
Integral hamiltonian_integral(std::string name, ReducedHamiltonian h);

struct IntegrateOptions {
  Method method = Method::RK4;
  double step = 1e-3;           // RK4 step; initial step for the adaptive pair
  double rel_tol = 1e-10;       // adaptive pair
  double abs_tol = 1e-12;
  double sample_interval = 0.1;
  double casimir_abort = 1e-6;  // relative Casimir drift that aborts the run
  std::vector<Integral> integrals;
};

struct Sample {
  double t;
  PhaseState x;
};

struct TrajectoryReport {
  std::vector<Sample> samples;
  double energy_drift = 0.0;   // max |h - h(0)| / |h(0)|
  double casimir_drift = 0.0;  // max |C - C(0)| / |C(0)|
  std::vector<std::pair<std::string, double>> integral_drift;  // max |I - I(0)| / max(|I(0)|, 1)
  long steps = 0;
  double max_integral_drift() const;
};

// Throws StepFailure when the orbit reaches a chart singularity or stops being finite,
// InvariantViolation when the Casimir drifts beyond casimir_abort.
TrajectoryReport integrate(const ReducedHamiltonian& h, const PhaseState& x0, double t_end,
                           const IntegrateOptions& opts = {});

// Restricted problem, canonical chart (theta, p_theta, psi, p_psi), fixed-step RK4.
struct RestrictedSample {
  double t;
  std::array<double, 4> x;
};
std::vector<RestrictedSample> integrate_restricted(const ReducedHamiltonian& h, const std::array<double, 4>& x0,
                                                   double t_end, double step = 1e-3, int sample_every = 100);

// --- the particular solution Gamma: p0 = p, p1 = p2 = 0 ---

// z = (p_theta + mu p) / strength
double gamma_z(const ModelParams& prm, double p_theta);
// f(theta): cot, coth, tan^2 or tanh^2
double gamma_f_of_theta(const ModelParams& prm, double theta);
// p_theta on the energy level eps at theta0, on the branch z > 0.
double gamma_initial_ptheta(const ModelParams& prm, double theta0);
// f(z) - f(theta), zero along Gamma.
double gamma_residual(const ModelParams& prm, double theta, double p_theta);
ReducedHamiltonian gamma_hamiltonian(const ModelParams& prm);

struct GammaSample {
  double t, theta, p_theta;
};
std::vector<GammaSample> gamma_trajectory(const ModelParams& prm, double theta0, double t_end, double step = 1e-3,
                                          int sample_every = 10);

// --- normal variational equations along Gamma ---

struct NveSample {
  double t, theta, p_theta, p1, p2;
};
// (dp1/dt, dp2/dt) of the time-domain normal variational equations.
std::array<double, 2> nve_rhs(const ModelParams& prm, double theta, double p_theta, double p1, double p2);
// Integrates Gamma and the variation together from the first sample's (theta, p_theta).
std::vector<NveSample> nve_time_domain(const ModelParams& prm, const std::vector<GammaSample>& gamma, double p1_0,
                                       double p2_0, double step = 1e-3, int sample_every = 10);

// Restricted problem along its Gamma (psi = p_psi = 0, m2 = 1):
//   p1' = -omega cot p1 + p2 / sin^2,  p2' = omega p_theta p1 + omega cot p2.
struct RestrictedNveParams {
  double omega = 1.0;
  models::PotentialTerm potential = models::PotentialTerm::Newton;
  double strength = 1.0;
};
std::vector<NveSample> nve_restricted(const RestrictedNveParams& rp, double theta0, double p_theta0, double p1_0,
                                      double p2_0, double t_end, double step = 1e-3, int sample_every = 10);

// --- Poincare sections ---

struct Section {
  int coordinate = 3;  // index into (theta, p_theta, p0, p1, p2)
  double value = 0.0;
  int direction = 1;   // +1: coordinate increasing through value
};

struct SectionPoint {
  int crossing_index;
  double t;
  PhaseState x;
};

// Crossings located by sign change and bisection to |residual| < 1e-10.
std::vector<SectionPoint> poincare_section(const ReducedHamiltonian& h, const PhaseState& x0, const Section& section,
                                           double t_end, double step = 1e-3);

// --- charts ---

struct CylinderChart {
  double phi = 0, p_phi = 0;
};

// gamma of the coadjoint orbit: sqrt(p0^2+p1^2+p2^2) on the sphere, p0^2+p1^2-p2^2 on H^2.
double orbit_gamma(const PhaseState& x);
// Throws ChartDomainError at |p2| >= gamma (sphere) or p0 = p1 = 0.
CylinderChart to_cylinder(const PhaseState& x);
PhaseState from_cylinder(double theta, double p_theta, const CylinderChart& c, double gamma, Space space);

struct RChart {
  double r = 0, p_r = 0;
};
// r = tan(theta/2), p_theta = (1+r^2) p_r / 2; H^2: r = tanh(theta/2), p_theta = (1-r^2) p_r / 2.
RChart to_r_chart(Space space, double theta, double p_theta);
std::pair<double, double> from_r_chart(Space space, const RChart& c);

// --- CSV, 17 significant digits ---

void write_trajectory_csv(std::ostream& out, const std::vector<Sample>& samples);
void write_section_csv(std::ostream& out, const std::vector<SectionPoint>& points);
// NVE samples in the trajectory layout: p0 = p, p1 and p2 the variation.
void write_nve_csv(std::ostream& out, const std::vector<NveSample>& samples, double p);

}  // namespace curvcert::dynamics
