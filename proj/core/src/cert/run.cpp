#include "curvcert/cert/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "curvcert/errors.hpp"
#include "curvcert/kovacic/kovacic.hpp"
#include "curvcert/models/lemmas.hpp"
#include "json.hpp"

namespace curvcert::cert {

using Json = nlohmann::json;
using ratcalc::scalar_to_string;

namespace {

Rational rational_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string()) {
    throw ParseError(std::string("field '") + key + "' must be a rational string \"n\" or \"n/d\"");
  }
  return Rational::parse(v.get<std::string>());
}

std::vector<Rational> rational_list(const Json& j, const char* key) {
  std::vector<Rational> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) throw ParseError(std::string("entries of '") + key + "' must be rational strings");
    out.push_back(Rational::parse(v.get<std::string>()));
  }
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  RunConfig c;
  try {
    const Json j = Json::parse(json_text);
    if (j.contains("space")) c.space = models::space_from_string(j.at("space"));
    if (j.contains("potential")) c.potential = models::potential_from_string(j.at("potential"));
    if (j.contains("strength")) c.strength = rational_field(j, "strength");
    if (j.contains("mu")) c.mu = rational_field(j, "mu");
    if (j.contains("p")) c.p = rational_field(j, "p");
    if (j.contains("eps")) c.eps = rational_field(j, "eps");
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("identity_points")) c.identity_points = j.at("identity_points").get<int>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    if (j.contains("dynamics")) {
      const Json& d = j.at("dynamics");
      auto& dc = c.dynamics;
      if (d.contains("theta0")) dc.theta0 = rational_field(d, "theta0");
      if (d.contains("p_theta0")) dc.p_theta0 = rational_field(d, "p_theta0");
      if (d.contains("p0")) dc.p0 = rational_field(d, "p0");
      if (d.contains("p1")) dc.p1 = rational_field(d, "p1");
      if (d.contains("p2")) dc.p2 = rational_field(d, "p2");
      if (d.contains("t_end")) dc.t_end = rational_field(d, "t_end");
      if (d.contains("step")) dc.step = rational_field(d, "step");
      if (d.contains("sample_interval")) dc.sample_interval = rational_field(d, "sample_interval");
      if (d.contains("coupling")) dc.coupling = rational_field(d, "coupling");
      if (d.contains("adaptive")) dc.adaptive = d.at("adaptive").get<bool>();
      if (d.contains("free_motion")) dc.free_motion = d.at("free_motion").get<bool>();
      if (d.contains("section_coordinate")) dc.section_coordinate = d.at("section_coordinate").get<std::string>();
      if (d.contains("section_value")) dc.section_value = rational_field(d, "section_value");
      if (d.contains("section_direction")) dc.section_direction = d.at("section_direction").get<int>();
    }
    if (j.contains("sweep")) {
      const Json& s = j.at("sweep");
      c.sweep.strength = rational_list(s, "strength");
      c.sweep.mu = rational_list(s, "mu");
      c.sweep.p = rational_list(s, "p");
      c.sweep.eps = rational_list(s, "eps");
      if (s.contains("out_dir")) c.sweep.out_dir = s.at("out_dir").get<std::string>();
      if (s.contains("threads")) c.sweep.threads = s.at("threads").get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  }
  if (c.identity_points < 0) throw ParseError("identity_points must be nonnegative");
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

namespace {

ParamsBlock echo(const RunConfig& c) {
  return {models::to_string(c.space), models::to_string(c.potential), c.strength.to_string(), c.mu.to_string(),
          c.p.to_string(), c.eps.to_string(), "", "", ""};
}

// Reproducible random rationals: only mt19937_64 output and integer arithmetic.
struct ParamSampler {
  std::mt19937_64 rng;
  explicit ParamSampler(std::uint64_t seed) : rng(seed) {}
  long uniform(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational positive() { return Rational(uniform(1, 9), uniform(1, 6)); }
  Rational mu() {
    long d = uniform(2, 9);
    return Rational(uniform(1, d - 1), d);
  }
  Rational nonzero() { return Rational(uniform(1, 7) * (uniform(0, 1) == 0 ? -1 : 1), uniform(1, 5)); }
  Rational any() { return Rational(uniform(-9, 9), uniform(1, 6)); }
};

bool table_matches(const models::ModelParams& prm) {
  return models::pipeline_r(prm).r == models::closed_form_r(prm).reconstruct();
}

std::string location_string(const linode::SingularPoint& s) {
  return s.location ? scalar_to_string(*s.location) : std::string("inf");
}

Certificate degenerate(Certificate c, std::string guard, std::string message) {
  c.conclusion = Conclusion::Degenerate;
  c.guard = std::move(guard);
  c.message = std::move(message);
  return c;
}

}  // namespace

Certificate certify(const RunConfig& config) {
  Certificate cert;
  cert.params = echo(config);

  std::optional<models::ModelParams> prm_opt;
  try {
    prm_opt = models::derive_params(config.space, config.potential, config.strength, config.mu, config.p, config.eps);
  } catch (const DegenerateParameters& e) {
    return degenerate(cert, e.guard(), e.what());
  } catch (const DegenerateTower& e) {
    return degenerate(cert, "kappa_lambda_collision", e.what());
  }
  const models::ModelParams& prm = *prm_opt;
  cert.params.kappa_sq = prm.kappa_sq.to_string();
  cert.params.lambda_sq = prm.lambda_sq.to_string();
  cert.params.z0 = prm.z0.to_string();

  // Pipeline r(z) and the gauge that produced it.
  const auto sys = models::build_system(prm);
  const auto ode = linode::reduce_to_second_order(sys);
  const auto nf = linode::to_normal_form(ode);

  TableMatchDetail detail;
  detail.seed = config.seed;
  detail.gauge_verified = linode::verify_gauge_transform(nf, ode, linode::gauge_log_derivative(sys));
  detail.reference_match = nf.r == models::closed_form_r(prm).reconstruct();
  ParamSampler sampler(config.seed);
  while (detail.random_sets < config.identity_points) {
    Rational s = sampler.positive(), mu = sampler.mu(), p = sampler.nonzero(), eps = sampler.any();
    try {
      auto q = models::derive_params(config.space, config.potential, s, mu, p, eps);
      ++detail.random_sets;
      if (table_matches(q)) ++detail.random_matched;
    } catch (const DegenerateParameters&) {
      // draw again
    } catch (const DegenerateTower&) {
    }
  }
  cert.table_match = detail.reference_match && detail.gauge_verified && detail.random_matched == detail.random_sets;
  cert.table_match_detail = detail;

  const auto poles = linode::locate_poles(nf.r, prm.singular_points());
  const auto spec = linode::singularity_spectrum(nf, poles);
  for (const auto& s : spec.points) {
    cert.spectrum.push_back({s.label, location_string(s), s.order, scalar_to_string(s.alpha),
                             scalar_to_string(s.delta_squared),
                             s.delta_rational ? s.delta_rational->to_string() : std::string("irrational"),
                             s.exponents_string()});
  }

  const auto lemma = models::lemma_report(prm);
  LemmaBlock lb{lemma.name, lemma.hypotheses, lemma.hypotheses_hold, lemma.violated, {}, lemma.conclusion_verified,
                lemma.imaginary_part_identity};
  for (const auto& a : lemma.alphas) lb.alphas.push_back({a.label, a.nonreal, a.method, a.min_abs_imag});
  cert.lemma = lb;
  const bool mu_one = prm.mu == Rational(1);
  if (!lemma.hypotheses_hold && !mu_one) {
    std::string what = "hypotheses violated:";
    for (const auto& v : lemma.violated) what += " [" + v + "]";
    return degenerate(cert, "hypothesis", what);
  }

  const auto case1 = kovacic::case1_search(nf, spec);
  const auto product = kovacic::product_test(nf, spec);
  const auto case2 = kovacic::case2_search(nf, spec);
  const bool case3 = kovacic::case3_possible(spec);
  const auto verdict = kovacic::classify(nf, spec, case1, product, case2, case3);

  Case1Block c1;
  c1.solutions = static_cast<int>(case1.solutions.size());
  for (const auto& s : case1.solutions) {
    RiccatiEntry e{s.omega.to_string(), {}, s.P.to_string()};
    for (const auto& [k, v] : s.exponent_choices) e.exponents[k] = v.to_string();
    c1.data.push_back(std::move(e));
  }
  c1.pruned_points = case1.pruned_points;
  for (const auto& t : product.tested) {
    ProductEntry e{t.exponents, t.degree_P, t.solved, -1, ""};
    if (t.residual && !t.residual->is_zero()) {
      e.residual_numerator_degree = t.residual->num().degree();
      e.residual_leading = scalar_to_string(t.residual->num().leading());
    }
    c1.product_tests.push_back(std::move(e));
  }
  c1.product_found = product.v.has_value();
  cert.case1 = c1;

  Case2Block c2;
  for (size_t k = 0; k < case2.candidates.size(); ++k) {
    const auto& xi = case2.xis[k];
    XiWitness w{case2.candidates[k].to_string(), case2.candidates[k].d.to_string(), !xi.is_zero(), -1, ""};
    if (!xi.is_zero()) {
      w.numerator_degree = xi.num().degree();
      w.leading_coefficient = scalar_to_string(xi.num().leading());
    }
    c2.candidates.push_back(std::move(w));
  }
  if (case2.found) {
    c2.found = true;
    c2.found_candidate = case2.found->e.to_string();
    c2.P = case2.found->P.to_string();
  }
  cert.case2 = c2;
  cert.case3_possible = case3;

  VerdictBlock vb{kovacic::to_string(verdict.classification), kovacic::to_string(verdict.identity_component_abelian),
                  {}, verdict.cyclic_order, verdict.rationale};
  for (auto g : verdict.possible_groups) vb.possible_groups.push_back(kovacic::to_string(g));
  cert.verdict = vb;

  SoundnessBlock sb;
  sb.table_match = *cert.table_match;
  bool nonreal_exponent = false;
  for (const auto* s : spec.finite()) nonreal_exponent = nonreal_exponent || s->delta_nonreal_or_irrational();
  sb.case1_admissible = case1.solutions.empty() || (case1.solutions.size() == 1 && nonreal_exponent);
  sb.case2_absent = !case2.found.has_value();
  sb.case3_impossible = !case3;
  cert.soundness = sb;

  const bool certified = !mu_one && sb.passed() &&
                         verdict.identity_component_abelian == kovacic::Tristate::False;
  cert.conclusion = certified ? Conclusion::NonintegrabilityCertified : Conclusion::NoObstructionFound;
  return cert;
}

int exit_code(const Certificate& c) { return c.conclusion == Conclusion::Degenerate ? 1 : 0; }

std::vector<SweepRun> run_sweep(const RunConfig& config) {
  auto or_base = [](const std::vector<Rational>& v, const Rational& base) {
    return v.empty() ? std::vector<Rational>{base} : v;
  };
  std::vector<RunConfig> runs;
  for (const auto& s : or_base(config.sweep.strength, config.strength)) {
    for (const auto& mu : or_base(config.sweep.mu, config.mu)) {
      for (const auto& p : or_base(config.sweep.p, config.p)) {
        for (const auto& eps : or_base(config.sweep.eps, config.eps)) {
          RunConfig rc = config;
          rc.strength = s;
          rc.mu = mu;
          rc.p = p;
          rc.eps = eps;
          runs.push_back(rc);
        }
      }
    }
  }

  namespace fs = std::filesystem;
  const fs::path dir(config.sweep.out_dir);
  fs::create_directories(dir);

  auto one = [&](std::size_t i) -> SweepRun {
    Certificate c = certify(runs[i]);
    char name[32];
    std::snprintf(name, sizeof name, "run_%04zu.json", i);
    const fs::path final_path = dir / name;
    const fs::path tmp = dir / (std::string(name) + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << to_json_string(c);
      if (!out) throw InvariantViolation("cannot write " + tmp.string());
    }
    fs::rename(tmp, final_path);
    return {i, final_path.string(), c.conclusion};
  };

  unsigned threads = config.sweep.threads > 0 ? static_cast<unsigned>(config.sweep.threads)
                                              : std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepRun> results;
  results.reserve(runs.size());
  for (std::size_t start = 0; start < runs.size(); start += threads) {
    std::vector<std::future<SweepRun>> batch;
    for (std::size_t i = start; i < std::min(runs.size(), start + threads); ++i) {
      batch.push_back(std::async(std::launch::async, one, i));
    }
    for (auto& f : batch) results.push_back(f.get());
  }
  return results;
}

}  // namespace curvcert::cert
