#include "curvcert/dynamics/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>

#include "curvcert/errors.hpp"

namespace curvcert::dynamics {

using models::HamiltonianKind;
using models::HamiltonianParams;
using models::Potential;
using models::PotentialTerm;

namespace {

constexpr int kTheta = 0, kPt = 1, kP0 = 2, kP1 = 3, kP2 = 4;

// Sparse integer polynomial in the five coordinates, for the exact Jacobi check.
using Monomial = std::array<int, 5>;
using IntPoly = std::map<Monomial, long>;

void add_term(IntPoly& p, const Monomial& m, long c) {
  if (c == 0) return;
  auto& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}

IntPoly derivative(const IntPoly& p, int var) {
  IntPoly d;
  for (const auto& [m, c] : p) {
    if (m[var] == 0) continue;
    Monomial n = m;
    n[var] -= 1;
    add_term(d, n, c * m[var]);
  }
  return d;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m{};
      for (int k = 0; k < 5; ++k) m[k] = ma[k] + mb[k];
      add_term(r, m, ca * cb);
    }
  }
  return r;
}

IntPoly structure_entry(const PoissonStructure& ps, int a, int b) {
  IntPoly e;
  add_term(e, Monomial{}, ps.constant(a, b));
  for (int k = 0; k < 5; ++k) {
    Monomial m{};
    m[k] = 1;
    add_term(e, m, ps.linear(a, b, k));
  }
  return e;
}

IntPoly bracket(const PoissonStructure& ps, const IntPoly& f, const IntPoly& g) {
  IntPoly r;
  for (int a = 0; a < 5; ++a) {
    IntPoly fa = derivative(f, a);
    if (fa.empty()) continue;
    for (int b = 0; b < 5; ++b) {
      IntPoly gb = derivative(g, b);
      if (gb.empty()) continue;
      for (const auto& [m, c] : multiply(multiply(fa, gb), structure_entry(ps, a, b))) add_term(r, m, c);
    }
  }
  return r;
}

std::vector<IntPoly> monomials_up_to_degree_two() {
  std::vector<IntPoly> out;
  out.push_back({{Monomial{}, 1}});
  for (int i = 0; i < 5; ++i) {
    Monomial m{};
    m[i] = 1;
    out.push_back({{m, 1}});
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      Monomial m{};
      m[i] += 1;
      m[j] += 1;
      out.push_back({{m, 1}});
    }
  }
  return out;
}

}  // namespace

long PoissonStructure::constant(int a, int b) const {
  if (a == kTheta && b == kPt) return 1;
  if (a == kPt && b == kTheta) return -1;
  return 0;
}

long PoissonStructure::linear(int a, int b, int k) const {
  if (a == b) return 0;
  if (a > b) return -linear(b, a, k);
  const bool sphere = space_ == Space::Sphere;
  // sphere: {p0,p1} = -p2, {p1,p2} = -p0, {p0,p2} = p1
  // H^2:    {p0,p1} =  p2, {p1,p2} = -p0, {p0,p2} = p1
  if (a == kP0 && b == kP1) return k == kP2 ? (sphere ? -1 : 1) : 0;
  if (a == kP1 && b == kP2) return k == kP0 ? -1 : 0;
  if (a == kP0 && b == kP2) return k == kP1 ? 1 : 0;
  return 0;
}

std::array<std::array<double, 5>, 5> PoissonStructure::matrix(const State5& x) const {
  std::array<std::array<double, 5>, 5> m{};
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      double v = static_cast<double>(constant(a, b));
      for (int k = 0; k < 5; ++k) {
        long c = linear(a, b, k);
        if (c != 0) v += static_cast<double>(c) * x[k];
      }
      m[a][b] = v;
    }
  }
  return m;
}

double PoissonStructure::casimir(const State5& x) const {
  const double s = space_ == Space::Sphere ? 1.0 : -1.0;
  return x[kP0] * x[kP0] + x[kP1] * x[kP1] + s * x[kP2] * x[kP2];
}

bool PoissonStructure::antisymmetric() const {
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      if (constant(a, b) != -constant(b, a)) return false;
      for (int k = 0; k < 5; ++k) {
        if (linear(a, b, k) != -linear(b, a, k)) return false;
      }
    }
  }
  return true;
}

bool PoissonStructure::jacobi_identity() const {
  const auto basis = monomials_up_to_degree_two();
  for (const auto& f : basis) {
    for (const auto& g : basis) {
      IntPoly fg = bracket(*this, f, g);
      for (const auto& h : basis) {
        IntPoly sum = bracket(*this, f, bracket(*this, g, h));
        for (const auto& [m, c] : bracket(*this, g, bracket(*this, h, f))) add_term(sum, m, c);
        for (const auto& [m, c] : bracket(*this, h, fg)) add_term(sum, m, c);
        if (!sum.empty()) return false;
      }
    }
  }
  return true;
}

State5 vector_field(const ReducedHamiltonian& h, const State5& x) {
  const PoissonStructure ps(h.space());
  const auto grad = h.gradient(PhasePoint::from_array(x));
  const auto J = ps.matrix(x);
  State5 dx{};
  for (int a = 0; a < 5; ++a) {
    double v = 0.0;
    for (int b = 0; b < 5; ++b) v += J[a][b] * grad[b];
    dx[a] = v;
  }
  return dx;
}

State5 numeric_gradient(const ReducedHamiltonian& h, const State5& x, double step) {
  State5 g{};
  for (int k = 0; k < 5; ++k) {
    State5 hi = x, lo = x;
    hi[k] += step;
    lo[k] -= step;
    g[k] = (h.value(PhasePoint::from_array(hi)) - h.value(PhasePoint::from_array(lo))) / (2.0 * step);
  }
  return g;
}

Integral mu1_integral(Space space) {
  if (space == Space::Sphere) {
    return {"p1 sin(theta) + p2 cos(theta)",
            [](const PhaseState& x) { return x.p1 * std::sin(x.theta) + x.p2 * std::cos(x.theta); }};
  }
  return {"p1 sinh(theta) + p2 cosh(theta)",
          [](const PhaseState& x) { return x.p1 * std::sinh(x.theta) + x.p2 * std::cosh(x.theta); }};
}

Integral p2_integral() {
  return {"p2", [](const PhaseState& x) { return x.p2; }};
}

Integral hamiltonian_integral(std::string name, ReducedHamiltonian h) {
  return {std::move(name), [h](const PhaseState& x) { return h.value(x.point()); }};
}

double TrajectoryReport::max_integral_drift() const {
  double m = 0.0;
  for (const auto& [name, d] : integral_drift) m = std::max(m, d);
  return m;
}

namespace {

State5 axpy(const State5& x, double a, const State5& k) {
  State5 r{};
  for (int i = 0; i < 5; ++i) r[i] = x[i] + a * k[i];
  return r;
}

bool finite(const State5& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

// Wraps domain errors raised mid-step into StepFailure.
State5 field(const ReducedHamiltonian& h, const State5& x, double t) {
  try {
    return vector_field(h, x);
  } catch (const DomainError& e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    throw StepFailure(std::string("integration step failed near t = ") + buf + ": " + e.what());
  }
}

State5 rk4_step(const ReducedHamiltonian& h, const State5& x, double t, double dt) {
  State5 k1 = field(h, x, t);
  State5 k2 = field(h, axpy(x, dt / 2, k1), t);
  State5 k3 = field(h, axpy(x, dt / 2, k2), t);
  State5 k4 = field(h, axpy(x, dt, k3), t);
  State5 r{};
  for (int i = 0; i < 5; ++i) r[i] = x[i] + dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return r;
}

// Dormand-Prince 5(4); returns the 5th order solution and the error estimate.
std::pair<State5, State5> dp45_step(const ReducedHamiltonian& h, const State5& x, double t, double dt) {
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
  State5 k1 = field(h, x, t);
  State5 y{};
  for (int i = 0; i < 5; ++i) y[i] = x[i] + dt * a21 * k1[i];
  State5 k2 = field(h, y, t);
  for (int i = 0; i < 5; ++i) y[i] = x[i] + dt * (a31 * k1[i] + a32 * k2[i]);
  State5 k3 = field(h, y, t);
  for (int i = 0; i < 5; ++i) y[i] = x[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  State5 k4 = field(h, y, t);
  for (int i = 0; i < 5; ++i) y[i] = x[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  State5 k5 = field(h, y, t);
  for (int i = 0; i < 5; ++i)
    y[i] = x[i] + dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
  State5 k6 = field(h, y, t);
  State5 out{};
  for (int i = 0; i < 5; ++i) out[i] = x[i] + dt * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  State5 k7 = field(h, out, t);
  State5 err{};
  for (int i = 0; i < 5; ++i)
    err[i] = dt * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
  return {out, err};
}

double scale_of(double v) { return v != 0.0 ? std::abs(v) : 1.0; }

}  // namespace

TrajectoryReport integrate(const ReducedHamiltonian& h, const PhaseState& x0, double t_end,
                           const IntegrateOptions& opts) {
  if (!(opts.step > 0.0)) throw StepFailure("step must be positive");
  const Space space = h.space();
  const PoissonStructure ps(space);
  TrajectoryReport rep;
  State5 x = x0.as_array();
  PhaseState start = PhaseState::from_array(x, space);

  double h0 = 0.0;
  try {
    h0 = h.value(start.point());
  } catch (const DomainError& e) {
    throw StepFailure(std::string("initial state outside the domain: ") + e.what());
  }
  const double c0 = ps.casimir(x);
  std::vector<double> i0;
  for (const auto& in : opts.integrals) {
    i0.push_back(in.f(start));
    rep.integral_drift.emplace_back(in.name, 0.0);
  }

  auto monitor = [&](const State5& y, double t) {
    if (!finite(y)) throw StepFailure("state stopped being finite");
    PhaseState ps_state = PhaseState::from_array(y, space);
    double hv = 0.0;
    try {
      hv = h.value(ps_state.point());
    } catch (const DomainError& e) {
      throw StepFailure(std::string("orbit left the chart: ") + e.what());
    }
    rep.energy_drift = std::max(rep.energy_drift, std::abs(hv - h0) / scale_of(h0));
    const double cd = std::abs(ps.casimir(y) - c0) / scale_of(c0);
    rep.casimir_drift = std::max(rep.casimir_drift, cd);
    if (cd > opts.casimir_abort) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "Casimir drift %.3g exceeds %.3g at t = %.6g", cd, opts.casimir_abort, t);
      throw InvariantViolation(buf);
    }
    for (size_t k = 0; k < opts.integrals.size(); ++k) {
      double d = std::abs(opts.integrals[k].f(ps_state) - i0[k]) / std::max(std::abs(i0[k]), 1.0);
      rep.integral_drift[k].second = std::max(rep.integral_drift[k].second, d);
    }
  };

  rep.samples.push_back({0.0, start});
  if (t_end <= 0.0) return rep;
  double t = 0.0;
  double next_sample = opts.sample_interval;

  if (opts.method == Method::RK4) {
    const long n = static_cast<long>(std::ceil(t_end / opts.step - 1e-9));
    const long every = std::max(1L, std::lround(opts.sample_interval / opts.step));
    for (long k = 1; k <= n; ++k) {
      const double dt = std::min(opts.step, t_end - t);
      x = rk4_step(h, x, t, dt);
      t = k == n ? t_end : t + dt;
      ++rep.steps;
      monitor(x, t);
      if (k % every == 0 || k == n) rep.samples.push_back({t, PhaseState::from_array(x, space)});
    }
    return rep;
  }

  double dt = opts.step;
  while (t < t_end) {
    dt = std::min(dt, t_end - t);
    auto [y, err] = dp45_step(h, x, t, dt);
    double en = 0.0;
    for (int i = 0; i < 5; ++i) {
      double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(x[i]), std::abs(y[i]));
      en = std::max(en, std::abs(err[i]) / sc);
    }
    if (!std::isfinite(en)) throw StepFailure("non-finite error estimate");
    if (en <= 1.0) {
      t = t + dt >= t_end ? t_end : t + dt;
      x = y;
      ++rep.steps;
      monitor(x, t);
      if (t >= next_sample || t == t_end) {
        rep.samples.push_back({t, PhaseState::from_array(x, space)});
        while (next_sample <= t) next_sample += opts.sample_interval;
      }
    }
    double factor = en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
    dt *= factor;
    if (dt < 1e-14 * std::max(1.0, std::abs(t))) throw StepFailure("adaptive step size underflow");
  }
  return rep;
}

std::vector<RestrictedSample> integrate_restricted(const ReducedHamiltonian& h, const std::array<double, 4>& x0,
                                                   double t_end, double step, int sample_every) {
  using S4 = std::array<double, 4>;
  auto f = [&](const S4& x) -> S4 {
    S4 g;
    try {
      g = h.restricted_gradient(x);
    } catch (const DomainError& e) {
      throw StepFailure(std::string("restricted problem left the chart: ") + e.what());
    }
    return {g[1], -g[0], g[3], -g[2]};
  };
  auto add = [](const S4& x, double a, const S4& k) {
    S4 r;
    for (int i = 0; i < 4; ++i) r[i] = x[i] + a * k[i];
    return r;
  };
  std::vector<RestrictedSample> out{{0.0, x0}};
  S4 x = x0;
  const long n = static_cast<long>(std::ceil(t_end / step - 1e-9));
  for (long k = 1; k <= n; ++k) {
    const double dt = std::min(step, t_end - (k - 1) * step);
    S4 k1 = f(x), k2 = f(add(x, dt / 2, k1)), k3 = f(add(x, dt / 2, k2)), k4 = f(add(x, dt, k3));
    for (int i = 0; i < 4; ++i) x[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if (k % sample_every == 0 || k == n) out.push_back({k == n ? t_end : k * step, x});
  }
  return out;
}

double gamma_z(const ModelParams& prm, double p_theta) {
  return (p_theta + prm.mu.to_double() * prm.p.to_double()) / prm.strength.to_double();
}

double gamma_f_of_theta(const ModelParams& prm, double theta) {
  const bool sphere = prm.space == Space::Sphere;
  if (prm.potential == Potential::Newton) return sphere ? 1.0 / std::tan(theta) : 1.0 / std::tanh(theta);
  const double t = sphere ? std::tan(theta) : std::tanh(theta);
  return t * t;
}

namespace {

double f_of_z(const ModelParams& prm, double z) {
  const double s = prm.strength.to_double(), mu = prm.mu.to_double(), eps = prm.eps.to_double();
  if (prm.potential == Potential::Newton) return s * z * z / (2.0 * mu) - eps;
  return -s * z * z / mu + 2.0 * eps;
}

}  // namespace

double gamma_initial_ptheta(const ModelParams& prm, double theta0) {
  const double s = prm.strength.to_double(), mu = prm.mu.to_double(), eps = prm.eps.to_double();
  const double f = gamma_f_of_theta(prm, theta0);
  const double z2 = prm.potential == Potential::Newton ? 2.0 * mu * (eps + f) / s : mu * (2.0 * eps - f) / s;
  if (z2 < 0.0) throw DomainError("theta0 is not reachable on this energy level");
  return s * std::sqrt(z2) - mu * prm.p.to_double();
}

double gamma_residual(const ModelParams& prm, double theta, double p_theta) {
  return f_of_z(prm, gamma_z(prm, p_theta)) - gamma_f_of_theta(prm, theta);
}

ReducedHamiltonian gamma_hamiltonian(const ModelParams& prm) {
  HamiltonianParams<double> hp;
  hp.kind = HamiltonianKind::GammaRestriction;
  hp.space = prm.space;
  hp.potential = prm.potential == Potential::Newton ? PotentialTerm::Newton : PotentialTerm::Oscillator;
  hp.strength = prm.strength.to_double();
  hp.mu = prm.mu.to_double();
  hp.p = prm.p.to_double();
  return ReducedHamiltonian(hp);
}

std::vector<GammaSample> gamma_trajectory(const ModelParams& prm, double theta0, double t_end, double step,
                                          int sample_every) {
  const double pt0 = gamma_initial_ptheta(prm, theta0);
  IntegrateOptions opts;
  opts.step = step;
  opts.sample_interval = step * sample_every;
  PhaseState x0{theta0, pt0, prm.p.to_double(), 0.0, 0.0, prm.space};
  auto rep = integrate(gamma_hamiltonian(prm), x0, t_end, opts);
  std::vector<GammaSample> out;
  out.reserve(rep.samples.size());
  for (const auto& s : rep.samples) {
    if (s.x.theta <= 0.0 || (prm.space == Space::Sphere && s.x.theta >= std::numbers::pi)) {
      throw StepFailure("Gamma reached theta = 0 (collision)");
    }
    out.push_back({s.t, s.x.theta, s.x.p_theta});
  }
  return out;
}

std::array<double, 2> nve_rhs(const ModelParams& prm, double theta, double p_theta, double p1, double p2) {
  const double p = prm.p.to_double(), mu = prm.mu.to_double();
  if (prm.space == Space::Sphere) {
    const double s = std::sin(theta), cot = std::cos(theta) / s;
    return {-p * cot * p1 + (2.0 * p + p_theta - p / (mu * s * s)) * p2, -p_theta * p1 + p * cot * p2};
  }
  const double s = std::sinh(theta), coth = std::cosh(theta) / s;
  return {-p * coth * p1 - (2.0 * p + p_theta + p / (mu * s * s)) * p2, -p_theta * p1 + p * coth * p2};
}

namespace {

using S4 = std::array<double, 4>;

template <class F>
std::vector<NveSample> rk4_nve(F&& f, S4 x, double t0, double t_end, double step, int sample_every) {
  auto add = [](const S4& y, double a, const S4& k) {
    S4 r;
    for (int i = 0; i < 4; ++i) r[i] = y[i] + a * k[i];
    return r;
  };
  auto guarded = [&](const S4& y) {
    S4 r = f(y);
    for (double v : r) {
      if (!std::isfinite(v)) throw StepFailure("normal variational equation hit a singularity");
    }
    return r;
  };
  std::vector<NveSample> out{{t0, x[0], x[1], x[2], x[3]}};
  const double span = t_end - t0;
  if (span <= 0.0) return out;
  const long n = static_cast<long>(std::ceil(span / step - 1e-9));
  for (long k = 1; k <= n; ++k) {
    const double dt = std::min(step, span - (k - 1) * step);
    S4 k1 = guarded(x), k2 = guarded(add(x, dt / 2, k1)), k3 = guarded(add(x, dt / 2, k2)),
       k4 = guarded(add(x, dt, k3));
    for (int i = 0; i < 4; ++i) x[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if (k % sample_every == 0 || k == n) out.push_back({k == n ? t_end : t0 + k * step, x[0], x[1], x[2], x[3]});
  }
  return out;
}

}  // namespace

std::vector<NveSample> nve_time_domain(const ModelParams& prm, const std::vector<GammaSample>& gamma, double p1_0,
                                       double p2_0, double step, int sample_every) {
  if (gamma.empty()) return {};
  const ReducedHamiltonian h0 = gamma_hamiltonian(prm);
  auto f = [&](const S4& y) -> S4 {
    State5 g;
    try {
      g = h0.gradient({y[0], y[1], 0, 0, 0});
    } catch (const DomainError& e) {
      throw StepFailure(std::string("Gamma left the chart: ") + e.what());
    }
    auto d = nve_rhs(prm, y[0], y[1], y[2], y[3]);
    return {g[1], -g[0], d[0], d[1]};
  };
  return rk4_nve(f, {gamma.front().theta, gamma.front().p_theta, p1_0, p2_0}, gamma.front().t, gamma.back().t, step,
                 sample_every);
}

std::vector<NveSample> nve_restricted(const RestrictedNveParams& rp, double theta0, double p_theta0, double p1_0,
                                      double p2_0, double t_end, double step, int sample_every) {
  HamiltonianParams<double> hp;
  hp.kind = HamiltonianKind::RestrictedProblem;
  hp.potential = rp.potential;
  hp.strength = rp.strength;
  hp.omega = rp.omega;
  hp.m2 = 1.0;
  const ReducedHamiltonian h(hp);
  auto f = [&](const S4& y) -> S4 {
    std::array<double, 4> g;
    try {
      g = h.restricted_gradient({y[0], y[1], 0.0, 0.0});
    } catch (const DomainError& e) {
      throw StepFailure(std::string("restricted Gamma left the chart: ") + e.what());
    }
    const double s = std::sin(y[0]), cot = std::cos(y[0]) / s, w = rp.omega;
    return {g[1], -g[0], -w * cot * y[2] + y[3] / (s * s), w * y[1] * y[2] + w * cot * y[3]};
  };
  return rk4_nve(f, {theta0, p_theta0, p1_0, p2_0}, 0.0, t_end, step, sample_every);
}

std::vector<SectionPoint> poincare_section(const ReducedHamiltonian& h, const PhaseState& x0, const Section& section,
                                           double t_end, double step) {
  std::vector<SectionPoint> out;
  if (t_end <= 0.0) return out;
  const Space space = h.space();
  auto g = [&](const State5& y) { return (y[section.coordinate] - section.value) * section.direction; };
  State5 x = x0.as_array();
  double t = 0.0;
  const long n = static_cast<long>(std::ceil(t_end / step - 1e-9));
  for (long k = 1; k <= n; ++k) {
    const double dt = std::min(step, t_end - t);
    State5 y = rk4_step(h, x, t, dt);
    const double gx = g(x), gy = g(y);
    if (gx < 0.0 && gy >= 0.0) {
      double lo = 0.0, hi = dt;
      State5 at = y;
      double tau = dt;
      for (int it = 0; it < 200; ++it) {
        tau = 0.5 * (lo + hi);
        at = rk4_step(h, x, t, tau);
        const double ga = g(at);
        if (std::abs(ga) < 1e-10) break;
        (ga < 0.0 ? lo : hi) = tau;
      }
      out.push_back({static_cast<int>(out.size()), t + tau, PhaseState::from_array(at, space)});
    }
    x = y;
    t = k == n ? t_end : t + dt;
  }
  return out;
}

double orbit_gamma(const PhaseState& x) {
  const double c = PoissonStructure(x.space).casimir(x.as_array());
  return x.space == Space::Sphere ? std::sqrt(c) : c;
}

CylinderChart to_cylinder(const PhaseState& x) {
  const double g = orbit_gamma(x);
  if (x.space == Space::Sphere) {
    if (!(std::abs(x.p2) < g)) throw ChartDomainError("cylinder chart is singular at p2 = +-gamma");
  } else if (x.p0 == 0.0 && x.p1 == 0.0) {
    throw ChartDomainError("cylinder chart is singular at p0 = p1 = 0");
  }
  return {std::atan2(x.p0, x.p1), x.p2};
}

PhaseState from_cylinder(double theta, double p_theta, const CylinderChart& c, double gamma, Space space) {
  const double rad2 = space == Space::Sphere ? gamma * gamma - c.p_phi * c.p_phi : gamma + c.p_phi * c.p_phi;
  if (!(rad2 > 0.0)) throw ChartDomainError("p_phi outside the cylinder chart");
  const double rad = std::sqrt(rad2);
  return {theta, p_theta, rad * std::sin(c.phi), rad * std::cos(c.phi), c.p_phi, space};
}

RChart to_r_chart(Space space, double theta, double p_theta) {
  if (space == Space::Sphere) {
    if (!(theta > 0.0 && theta < std::numbers::pi)) throw ChartDomainError("theta outside (0, pi)");
    const double r = std::tan(theta / 2.0);
    return {r, 2.0 * p_theta / (1.0 + r * r)};
  }
  if (!(theta > 0.0)) throw ChartDomainError("theta must be positive");
  const double r = std::tanh(theta / 2.0);
  return {r, 2.0 * p_theta / (1.0 - r * r)};
}

std::pair<double, double> from_r_chart(Space space, const RChart& c) {
  if (!(c.r > 0.0)) throw ChartDomainError("r must be positive");
  if (space == Space::Sphere) return {2.0 * std::atan(c.r), 0.5 * (1.0 + c.r * c.r) * c.p_r};
  if (!(c.r < 1.0)) throw ChartDomainError("r must be below 1 on the hyperbolic plane");
  return {2.0 * std::atanh(c.r), 0.5 * (1.0 - c.r * c.r) * c.p_r};
}

namespace {

void put(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

void put_row(std::ostream& out, std::initializer_list<double> vals) {
  bool first = true;
  for (double v : vals) {
    if (!first) out << ',';
    first = false;
    put(out, v);
  }
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<Sample>& samples) {
  out << "t,theta,p_theta,p0,p1,p2\n";
  for (const auto& s : samples) {
    put_row(out, {s.t, s.x.theta, s.x.p_theta, s.x.p0, s.x.p1, s.x.p2});
    out << '\n';
  }
}

void write_section_csv(std::ostream& out, const std::vector<SectionPoint>& points) {
  out << "t,theta,p_theta,p0,p1,p2,crossing_index\n";
  for (const auto& s : points) {
    put_row(out, {s.t, s.x.theta, s.x.p_theta, s.x.p0, s.x.p1, s.x.p2});
    out << ',' << s.crossing_index << '\n';
  }
}

void write_nve_csv(std::ostream& out, const std::vector<NveSample>& samples, double p) {
  out << "t,theta,p_theta,p0,p1,p2\n";
  for (const auto& s : samples) {
    put_row(out, {s.t, s.theta, s.p_theta, p, s.p1, s.p2});
    out << '\n';
  }
}

}  // namespace curvcert::dynamics
