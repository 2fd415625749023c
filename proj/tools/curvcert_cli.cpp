// curvcert: certify / simulate / section / nve / sweep
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "curvcert/cert/run.hpp"
#include "curvcert/dynamics/dynamics.hpp"
#include "curvcert/errors.hpp"

using namespace curvcert;

namespace {

struct Flags {
  std::optional<std::string> space, potential, strength, mu, p, eps, config, out;
  std::optional<std::uint64_t> seed;
  std::optional<int> identity_points;
  std::string format = "json";
  // dynamics
  std::optional<std::string> theta0, p_theta0, p0, p1, p2, t_end, step, coupling, section_coordinate, section_value;
  std::optional<int> section_direction;
  bool adaptive = false;
  bool free_motion = false;
  // sweep
  std::optional<std::string> out_dir;
  std::optional<int> threads;
};

void add_model_flags(CLI::App* app, Flags& f) {
  app->add_option("--space", f.space, "sphere or hyperbolic");
  app->add_option("--potential", f.potential, "newton or oscillator");
  app->add_option("--strength", f.strength, "alpha or beta, rational n/d");
  app->add_option("--mu", f.mu, "mass ratio, rational n/d");
  app->add_option("--p", f.p, "momentum p of the particular solution, rational n/d");
  app->add_option("--eps", f.eps, "energy parameter, rational n/d");
  app->add_option("--config", f.config, "JSON run configuration");
  app->add_option("--out", f.out, "output path (stdout when absent)");
  app->add_option("--seed", f.seed, "seed for randomized identity checks");
}

void add_dynamics_flags(CLI::App* app, Flags& f) {
  app->add_option("--theta0", f.theta0, "initial theta, rational");
  app->add_option("--ptheta0", f.p_theta0, "initial p_theta, rational");
  app->add_option("--p0", f.p0, "initial p0, rational");
  app->add_option("--p1", f.p1, "initial p1 (variation p1 for nve), rational");
  app->add_option("--p2", f.p2, "initial p2 (variation p2 for nve), rational");
  app->add_option("--t-end", f.t_end, "final time, rational");
  app->add_option("--step", f.step, "RK4 step, rational");
  app->add_option("--coupling", f.coupling, "weight of the coupling terms; 0 drops them");
  app->add_flag("--adaptive", f.adaptive, "adaptive Dormand-Prince instead of RK4");
  app->add_flag("--free", f.free_motion, "drop the potential");
}

cert::RunConfig build_config(const Flags& f) {
  cert::RunConfig c = f.config ? cert::load_run_config(*f.config) : cert::RunConfig{};
  auto rat = [](const std::optional<std::string>& s, exact::Rational& dst) {
    if (s) dst = exact::Rational::parse(*s);
  };
  if (f.space) c.space = models::space_from_string(*f.space);
  if (f.potential) c.potential = models::potential_from_string(*f.potential);
  rat(f.strength, c.strength);
  rat(f.mu, c.mu);
  rat(f.p, c.p);
  rat(f.eps, c.eps);
  if (f.seed) c.seed = *f.seed;
  if (f.identity_points) c.identity_points = *f.identity_points;
  if (f.out) c.out = *f.out;
  auto& d = c.dynamics;
  rat(f.theta0, d.theta0);
  if (f.p_theta0) d.p_theta0 = exact::Rational::parse(*f.p_theta0);
  rat(f.p0, d.p0);
  rat(f.p1, d.p1);
  rat(f.p2, d.p2);
  rat(f.t_end, d.t_end);
  rat(f.step, d.step);
  rat(f.coupling, d.coupling);
  rat(f.section_value, d.section_value);
  if (f.section_coordinate) d.section_coordinate = *f.section_coordinate;
  if (f.section_direction) d.section_direction = *f.section_direction;
  if (f.adaptive) d.adaptive = true;
  if (f.free_motion) d.free_motion = true;
  if (f.out_dir) c.sweep.out_dir = *f.out_dir;
  if (f.threads) c.sweep.threads = *f.threads;
  return c;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(*path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw InvariantViolation("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

models::ReducedHamiltonian hamiltonian_for(const cert::RunConfig& c) {
  models::HamiltonianParams<double> hp;
  hp.space = c.space;
  hp.kind = c.space == models::Space::Sphere ? models::HamiltonianKind::FullSphere
                                             : models::HamiltonianKind::FullHyperbolic;
  if (c.dynamics.free_motion) {
    hp.potential = models::PotentialTerm::None;
  } else {
    hp.potential = c.potential == models::Potential::Newton ? models::PotentialTerm::Newton
                                                            : models::PotentialTerm::Oscillator;
  }
  hp.strength = c.strength.to_double();
  hp.mu = c.mu.to_double();
  hp.coupling = c.dynamics.coupling.to_double();
  return models::ReducedHamiltonian(hp);
}

dynamics::PhaseState initial_state(const cert::RunConfig& c) {
  const auto& d = c.dynamics;
  return {d.theta0.to_double(), d.p_theta0 ? d.p_theta0->to_double() : 0.0, d.p0.to_double(), d.p1.to_double(),
          d.p2.to_double(), c.space};
}

int coordinate_index(const std::string& name) {
  static const char* names[] = {"theta", "p_theta", "p0", "p1", "p2"};
  for (int i = 0; i < 5; ++i) {
    if (name == names[i]) return i;
  }
  throw ParseError("unknown section coordinate '" + name + "'");
}

int run_certify(const Flags& f) {
  const auto c = build_config(f);
  const auto certificate = cert::certify(c);
  const auto fmt = f.format == "text" ? cert::ReportFormat::Text : cert::ReportFormat::Json;
  emit(c.out, cert::render_report(certificate, fmt));
  return cert::exit_code(certificate);
}

int run_simulate(const Flags& f) {
  const auto c = build_config(f);
  dynamics::IntegrateOptions opts;
  opts.step = c.dynamics.step.to_double();
  opts.sample_interval = c.dynamics.sample_interval.to_double();
  opts.method = c.dynamics.adaptive ? dynamics::Method::DormandPrince : dynamics::Method::RK4;
  if (c.mu == exact::Rational(1)) opts.integrals.push_back(dynamics::mu1_integral(c.space));
  if (c.dynamics.coupling.is_zero()) opts.integrals.push_back(dynamics::p2_integral());
  const auto rep = dynamics::integrate(hamiltonian_for(c), initial_state(c), c.dynamics.t_end.to_double(), opts);
  std::ostringstream csv;
  dynamics::write_trajectory_csv(csv, rep.samples);
  emit(c.out, csv.str());
  std::cerr << "steps " << rep.steps << ", energy drift " << rep.energy_drift << ", Casimir drift "
            << rep.casimir_drift;
  for (const auto& [name, d] : rep.integral_drift) std::cerr << ", " << name << " drift " << d;
  std::cerr << "\n";
  return 0;
}

int run_section(const Flags& f) {
  const auto c = build_config(f);
  dynamics::Section sec;
  sec.coordinate = coordinate_index(c.dynamics.section_coordinate);
  sec.value = c.dynamics.section_value.to_double();
  sec.direction = c.dynamics.section_direction >= 0 ? 1 : -1;
  const auto pts = dynamics::poincare_section(hamiltonian_for(c), initial_state(c), sec, c.dynamics.t_end.to_double(),
                                              c.dynamics.step.to_double());
  std::ostringstream csv;
  dynamics::write_section_csv(csv, pts);
  emit(c.out, csv.str());
  std::cerr << pts.size() << " crossings\n";
  return 0;
}

int run_nve(const Flags& f) {
  const auto c = build_config(f);
  models::ModelParams prm = [&] {
    try {
      return models::derive_params(c.space, c.potential, c.strength, c.mu, c.p, c.eps);
    } catch (const DegenerateParameters& e) {
      std::cerr << "degenerate parameters (" << e.guard() << "): " << e.what() << "\n";
      throw;
    }
  }();
  const double step = c.dynamics.step.to_double();
  const auto gamma = dynamics::gamma_trajectory(prm, c.dynamics.theta0.to_double(), c.dynamics.t_end.to_double(), step);
  const auto nve = dynamics::nve_time_domain(prm, gamma, c.dynamics.p1.to_double(), c.dynamics.p2.to_double(), step);
  std::ostringstream csv;
  dynamics::write_nve_csv(csv, nve, prm.p.to_double());
  emit(c.out, csv.str());
  return 0;
}

int run_sweep(const Flags& f) {
  const auto c = build_config(f);
  const auto runs = cert::run_sweep(c);
  int degenerate = 0;
  for (const auto& r : runs) {
    std::cout << r.index << " " << cert::to_string(r.conclusion) << " " << r.path << "\n";
    if (r.conclusion == cert::Conclusion::Degenerate) ++degenerate;
  }
  return degenerate == static_cast<int>(runs.size()) && !runs.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact differential Galois certificates for the reduced two-body problem on S2 and H2"};
  app.require_subcommand(1);
  Flags f;

  auto* certify = app.add_subcommand("certify", "run the Kovacic pipeline and emit a certificate");
  add_model_flags(certify, f);
  certify->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  certify->add_option("--identity-points", f.identity_points, "random parameter sets for the table check");

  auto* simulate = app.add_subcommand("simulate", "integrate the reduced Hamiltonian, CSV output");
  add_model_flags(simulate, f);
  add_dynamics_flags(simulate, f);

  auto* section = app.add_subcommand("section", "Poincare section points, CSV output");
  add_model_flags(section, f);
  add_dynamics_flags(section, f);
  section->add_option("--coordinate", f.section_coordinate, "theta, p_theta, p0, p1 or p2");
  section->add_option("--value", f.section_value, "section value, rational");
  section->add_option("--direction", f.section_direction, "+1 or -1");

  auto* nve = app.add_subcommand("nve", "integrate the normal variational equations along Gamma");
  add_model_flags(nve, f);
  add_dynamics_flags(nve, f);

  auto* sweep = app.add_subcommand("sweep", "certify a grid of parameter sets in parallel");
  add_model_flags(sweep, f);
  sweep->add_option("--out-dir", f.out_dir, "directory for the certificates");
  sweep->add_option("--threads", f.threads, "worker count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*certify) return run_certify(f);
    if (*simulate) return run_simulate(f);
    if (*section) return run_section(f);
    if (*nve) return run_nve(f);
    if (*sweep) return run_sweep(f);
  } catch (const DegenerateParameters& e) {
    std::cerr << "degenerate input (" << e.guard() << "): " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
