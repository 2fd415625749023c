#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "curvcert/cert/run.hpp"
#include "curvcert/errors.hpp"

using namespace curvcert;
using namespace curvcert::cert;

namespace {
RunConfig config(Space s, Potential p, Rational a, Rational mu, Rational pp, Rational eps) {
  RunConfig c;
  c.space = s;
  c.potential = p;
  c.strength = std::move(a);
  c.mu = std::move(mu);
  c.p = std::move(pp);
  c.eps = std::move(eps);
  c.identity_points = 5;
  return c;
}
}  // namespace

TEST_CASE("reference certification and JSON round trip") {
  auto c = certify(config(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0));
  CHECK(c.conclusion == Conclusion::NonintegrabilityCertified);
  CHECK(exit_code(c) == 0);
  REQUIRE(c.soundness.has_value());
  CHECK(c.soundness->passed());
  REQUIRE(c.case2.has_value());
  REQUIRE(c.case2->candidates.size() == 1);
  CHECK(c.case2->candidates[0].numerator_degree == 6);
  CHECK_FALSE(c.case2->candidates[0].leading_coefficient.empty());
  CHECK(c.spectrum.size() == 6);
  REQUIRE(c.table_match_detail.has_value());
  CHECK(c.table_match_detail->random_matched == c.table_match_detail->random_sets);

  auto text = to_json_string(c);
  auto back = certificate_from_json(text);
  CHECK(back == c);
  CHECK(to_json_string(back) == text);
  CHECK(render_report(c, ReportFormat::Json) == text);
  CHECK(render_report(c, ReportFormat::Text).find("NonintegrabilityCertified") != std::string::npos);
}

TEST_CASE("determinism") {
  auto cfg = config(Space::Hyperbolic, Potential::Oscillator, 1, Rational(1, 2), 1, -1);
  cfg.seed = 42;
  CHECK(to_json_string(certify(cfg)) == to_json_string(certify(cfg)));
}

TEST_CASE("degenerate and integrable runs") {
  auto d = certify(config(Space::Hyperbolic, Potential::Oscillator, 1, Rational(1, 2), 1, 0));
  CHECK(d.conclusion == Conclusion::Degenerate);
  REQUIRE(d.guard.has_value());
  CHECK(*d.guard == "lambda_sq_zero");
  CHECK(exit_code(d) == 1);
  auto js = to_json_string(d);
  CHECK(js.find("\"conclusion\": \"Degenerate\"") != std::string::npos);
  CHECK(certificate_from_json(js) == d);

  auto h = certify(config(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 4, 0));
  CHECK(h.conclusion == Conclusion::Degenerate);
  CHECK(h.guard == std::optional<std::string>("hypothesis"));

  auto m = certify(config(Space::Sphere, Potential::Newton, 2, 1, 1, 0));
  CHECK(m.conclusion == Conclusion::NoObstructionFound);
  REQUIRE(m.case1.has_value());
  CHECK(m.case1->solutions == 2);
  CHECK(exit_code(m) == 0);
}

TEST_CASE("config parsing") {
  auto c = parse_run_config(R"({"space": "hyperbolic", "potential": "oscillator", "strength": "3/2",
                               "mu": "1/3", "p": "-2", "eps": "5/7", "seed": 9,
                               "sweep": {"mu": ["1/3", "2/3"], "threads": 2}})");
  CHECK(c.space == Space::Hyperbolic);
  CHECK(c.potential == Potential::Oscillator);
  CHECK(c.strength == Rational(3, 2));
  CHECK(c.p == Rational(-2));
  CHECK(c.seed == 9);
  CHECK(c.sweep.mu.size() == 2);
  CHECK_THROWS_AS(parse_run_config(R"({"mu": 0.5})"), ParseError);
  CHECK_THROWS_AS(parse_run_config(R"({"mu": "0.5"})"), ParseError);
  CHECK_THROWS_AS(parse_run_config("{not json"), ParseError);
  CHECK_THROWS_AS(certificate_from_json("[]"), ParseError);
}

TEST_CASE("sweep writes one certificate per combination") {
  auto dir = std::filesystem::temp_directory_path() / "curvcert_sweep_test";
  std::filesystem::remove_all(dir);
  auto cfg = config(Space::Sphere, Potential::Newton, 2, Rational(1, 2), 1, 0);
  cfg.sweep.mu = {Rational(1, 2), Rational(1)};
  cfg.sweep.p = {Rational(1), Rational(2)};
  cfg.sweep.out_dir = dir.string();
  cfg.sweep.threads = 2;
  auto runs = run_sweep(cfg);
  REQUIRE(runs.size() == 4);
  for (const auto& r : runs) {
    std::ifstream in(r.path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto c = certificate_from_json(text);
    CHECK(c.conclusion == r.conclusion);
    if (c.params.mu == "1") CHECK(r.conclusion != Conclusion::NonintegrabilityCertified);
  }
  std::filesystem::remove_all(dir);
}
