#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvcert/cert/certificate.hpp"

namespace curvcert::cert {

// Initial state and integration settings for simulate / section / nve.
struct DynamicsConfig {
  Rational theta0{3, 4};
  std::optional<Rational> p_theta0;  // nve: derived from eps when absent
  Rational p0{1, 2}, p1{1, 5}, p2{1, 5};
  Rational t_end{100};
  Rational step{1, 1000};
  bool adaptive = false;
  Rational sample_interval{1, 10};
  Rational coupling{1};
  bool free_motion = false;  // drop the potential
  std::string section_coordinate = "p1";
  Rational section_value{0};
  int section_direction = 1;
};

// Lists of values to combine; an empty list keeps the base value.
struct SweepConfig {
  std::vector<Rational> strength, mu, p, eps;
  std::string out_dir = "sweep_out";
  int threads = 0;  // 0: hardware concurrency
};

struct RunConfig {
  Space space = Space::Sphere;
  Potential potential = Potential::Newton;
  Rational strength{1}, mu{1, 2}, p{1}, eps{0};
  std::uint64_t seed = 1;
  int identity_points = 20;
  DynamicsConfig dynamics;
  SweepConfig sweep;
  std::optional<std::string> out;
};

// JSON with the RunConfig field names; every number is a rational string "n" or "n/d".
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

// Runs the whole pipeline. Degenerate input becomes a Degenerate certificate;
// InvariantViolation propagates.
Certificate certify(const RunConfig& config);

// 0 completed, 1 degenerate input.
int exit_code(const Certificate& c);

struct SweepRun {
  std::size_t index;
  std::string path;
  Conclusion conclusion;
};
// Certifies every combination, writing one certificate file per run atomically.
std::vector<SweepRun> run_sweep(const RunConfig& config);

}  // namespace curvcert::cert
