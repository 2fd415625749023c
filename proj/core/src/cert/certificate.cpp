#include "curvcert/cert/certificate.hpp"

#include <cstdio>
#include <sstream>

#include "curvcert/errors.hpp"
#include "json.hpp"

namespace curvcert::cert {

using Json = nlohmann::ordered_json;

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::NonintegrabilityCertified: return "NonintegrabilityCertified";
    case Conclusion::NoObstructionFound: return "NoObstructionFound";
    case Conclusion::Degenerate: return "Degenerate";
  }
  return "?";
}

Conclusion conclusion_from_string(const std::string& s) {
  for (auto c : {Conclusion::NonintegrabilityCertified, Conclusion::NoObstructionFound, Conclusion::Degenerate}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown conclusion '" + s + "'");
}

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json params_json(const ParamsBlock& p) {
  return Json{{"space", p.space},         {"potential", p.potential}, {"strength", p.strength},
              {"mu", p.mu},               {"p", p.p},                 {"eps", p.eps},
              {"kappa_sq", p.kappa_sq},   {"lambda_sq", p.lambda_sq}, {"z0", p.z0}};
}

ParamsBlock params_from(const Json& j) {
  return {j.at("space"),    j.at("potential"), j.at("strength"), j.at("mu"), j.at("p"),
          j.at("eps"),      j.at("kappa_sq"),  j.at("lambda_sq"), j.at("z0")};
}

Json spectrum_json(const std::vector<SpectrumEntry>& s) {
  Json a = Json::array();
  for (const auto& e : s) {
    a.push_back({{"label", e.label},
                 {"location", e.location},
                 {"order", e.order},
                 {"alpha", e.alpha},
                 {"delta_squared", e.delta_squared},
                 {"delta", e.delta},
                 {"exponents", e.exponents}});
  }
  return a;
}

std::vector<SpectrumEntry> spectrum_from(const Json& a) {
  std::vector<SpectrumEntry> out;
  for (const auto& e : a) {
    out.push_back({e.at("label"), e.at("location"), e.at("order"), e.at("alpha"), e.at("delta_squared"),
                   e.at("delta"), e.at("exponents")});
  }
  return out;
}

Json detail_json(const TableMatchDetail& d) {
  return {{"reference_match", d.reference_match},
          {"random_sets", d.random_sets},
          {"random_matched", d.random_matched},
          {"gauge_verified", d.gauge_verified},
          {"seed", d.seed}};
}

TableMatchDetail detail_from(const Json& j) {
  return {j.at("reference_match"), j.at("random_sets"), j.at("random_matched"), j.at("gauge_verified"),
          j.at("seed")};
}

Json lemma_json(const LemmaBlock& l) {
  Json alphas = Json::array();
  for (const auto& a : l.alphas) {
    alphas.push_back(
        {{"label", a.label}, {"nonreal", a.nonreal}, {"method", a.method}, {"min_abs_imag", a.min_abs_imag}});
  }
  return {{"name", l.name},
          {"hypotheses", l.hypotheses},
          {"hypotheses_hold", l.hypotheses_hold},
          {"violated", l.violated},
          {"alphas", alphas},
          {"conclusion_verified", l.conclusion_verified},
          {"imaginary_part_identity", opt(l.imaginary_part_identity)}};
}

LemmaBlock lemma_from(const Json& j) {
  LemmaBlock l;
  l.name = j.at("name");
  l.hypotheses = j.at("hypotheses");
  l.hypotheses_hold = j.at("hypotheses_hold");
  l.violated = j.at("violated").get<std::vector<std::string>>();
  for (const auto& a : j.at("alphas")) {
    l.alphas.push_back({a.at("label"), a.at("nonreal"), a.at("method"), a.at("min_abs_imag")});
  }
  l.conclusion_verified = j.at("conclusion_verified");
  l.imaginary_part_identity = get_opt<bool>(j, "imaginary_part_identity");
  return l;
}

Json case1_json(const Case1Block& c) {
  Json data = Json::array();
  for (const auto& d : c.data) data.push_back({{"omega", d.omega}, {"exponents", d.exponents}, {"P", d.P}});
  Json prods = Json::array();
  for (const auto& p : c.product_tests) {
    prods.push_back({{"exponents", p.exponents},
                     {"degree_P", p.degree_P},
                     {"solved", p.solved},
                     {"residual_numerator_degree", p.residual_numerator_degree},
                     {"residual_leading", p.residual_leading}});
  }
  return {{"solutions", c.solutions},
          {"data", data},
          {"pruned_points", c.pruned_points},
          {"product_tests", prods},
          {"product_found", c.product_found}};
}

Case1Block case1_from(const Json& j) {
  Case1Block c;
  c.solutions = j.at("solutions");
  for (const auto& d : j.at("data")) {
    c.data.push_back({d.at("omega"), d.at("exponents").get<std::map<std::string, std::string>>(), d.at("P")});
  }
  c.pruned_points = j.at("pruned_points").get<std::vector<std::string>>();
  for (const auto& p : j.at("product_tests")) {
    c.product_tests.push_back({p.at("exponents").get<std::map<std::string, int>>(), p.at("degree_P"), p.at("solved"),
                               p.at("residual_numerator_degree"), p.at("residual_leading")});
  }
  c.product_found = j.at("product_found");
  return c;
}

Json case2_json(const Case2Block& c) {
  Json cands = Json::array();
  for (const auto& x : c.candidates) {
    cands.push_back({{"candidate", x.candidate},
                     {"d", x.d},
                     {"xi_nonzero", x.xi_nonzero},
                     {"numerator_degree", x.numerator_degree},
                     {"leading_coefficient", x.leading_coefficient}});
  }
  return {{"candidates", cands}, {"found", c.found}, {"found_candidate", c.found_candidate}, {"P", c.P}};
}

Case2Block case2_from(const Json& j) {
  Case2Block c;
  for (const auto& x : j.at("candidates")) {
    c.candidates.push_back(
        {x.at("candidate"), x.at("d"), x.at("xi_nonzero"), x.at("numerator_degree"), x.at("leading_coefficient")});
  }
  c.found = j.at("found");
  c.found_candidate = j.at("found_candidate");
  c.P = j.at("P");
  return c;
}

Json verdict_json(const VerdictBlock& v) {
  return {{"classification", v.classification},
          {"identity_component_abelian", v.identity_component_abelian},
          {"possible_groups", v.possible_groups},
          {"cyclic_order", opt(v.cyclic_order)},
          {"rationale", v.rationale}};
}

VerdictBlock verdict_from(const Json& j) {
  return {j.at("classification"), j.at("identity_component_abelian"),
          j.at("possible_groups").get<std::vector<std::string>>(), get_opt<int>(j, "cyclic_order"),
          j.at("rationale")};
}

Json soundness_json(const SoundnessBlock& s) {
  return {{"table_match", s.table_match},
          {"case1_admissible", s.case1_admissible},
          {"case2_absent", s.case2_absent},
          {"case3_impossible", s.case3_impossible},
          {"passed", s.passed()}};
}

SoundnessBlock soundness_from(const Json& j) {
  return {j.at("table_match"), j.at("case1_admissible"), j.at("case2_absent"), j.at("case3_impossible")};
}

template <class T, class F>
Json opt_block(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : Json(nullptr);
}

template <class T, class F>
std::optional<T> block_from(const Json& j, const char* key, F&& f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

}  // namespace

std::string to_json_string(const Certificate& c) {
  Json j;
  j["params"] = params_json(c.params);
  j["spectrum"] = spectrum_json(c.spectrum);
  j["table_match"] = opt(c.table_match);
  j["table_match_detail"] = opt_block(c.table_match_detail, detail_json);
  j["lemma"] = opt_block(c.lemma, lemma_json);
  j["case1"] = opt_block(c.case1, case1_json);
  j["case2"] = opt_block(c.case2, case2_json);
  j["case3_possible"] = opt(c.case3_possible);
  j["verdict"] = opt_block(c.verdict, verdict_json);
  j["soundness"] = opt_block(c.soundness, soundness_json);
  j["conclusion"] = to_string(c.conclusion);
  j["guard"] = opt(c.guard);
  j["message"] = opt(c.message);
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    Certificate c;
    c.params = params_from(j.at("params"));
    c.spectrum = spectrum_from(j.at("spectrum"));
    c.table_match = get_opt<bool>(j, "table_match");
    c.table_match_detail = block_from<TableMatchDetail>(j, "table_match_detail", detail_from);
    c.lemma = block_from<LemmaBlock>(j, "lemma", lemma_from);
    c.case1 = block_from<Case1Block>(j, "case1", case1_from);
    c.case2 = block_from<Case2Block>(j, "case2", case2_from);
    c.case3_possible = get_opt<bool>(j, "case3_possible");
    c.verdict = block_from<VerdictBlock>(j, "verdict", verdict_from);
    c.soundness = block_from<SoundnessBlock>(j, "soundness", soundness_from);
    c.conclusion = conclusion_from_string(j.at("conclusion"));
    c.guard = get_opt<std::string>(j, "guard");
    c.message = get_opt<std::string>(j, "message");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string text_report(const Certificate& c) {
  std::ostringstream o;
  const auto& p = c.params;
  o << "case: " << p.space << " / " << p.potential << "\n";
  o << "parameters: strength=" << p.strength << " mu=" << p.mu << " p=" << p.p << " eps=" << p.eps << "\n";
  if (!p.kappa_sq.empty()) {
    o << "derived: kappa^2=" << p.kappa_sq << " lambda^2=" << p.lambda_sq << " z0=" << p.z0 << "\n";
  }
  if (c.guard) o << "guard: " << *c.guard << "\n";
  if (c.message) o << "note: " << *c.message << "\n";

  if (!c.spectrum.empty()) {
    o << "\nsingular points of y'' = r y:\n";
    for (const auto& s : c.spectrum) {
      o << "  " << s.label << " (order " << s.order << "): Delta^2=" << s.delta_squared << ", Delta=" << s.delta
        << ", exponents " << s.exponents << "\n";
    }
  }
  if (c.table_match) {
    o << "\nclosed-form coefficient tables reproduce r(z): " << yes_no(*c.table_match);
    if (c.table_match_detail) {
      const auto& d = *c.table_match_detail;
      o << " (reference " << yes_no(d.reference_match) << ", random " << d.random_matched << "/" << d.random_sets
        << ", seed " << d.seed << ", gauge " << yes_no(d.gauge_verified) << ")";
    }
    o << "\n";
  }
  if (c.lemma) {
    const auto& l = *c.lemma;
    o << "\n" << l.name << "\n  hypotheses: " << l.hypotheses << " -> " << (l.hypotheses_hold ? "hold" : "violated")
      << "\n";
    for (const auto& v : l.violated) o << "  violated: " << v << "\n";
    for (const auto& a : l.alphas) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", a.min_abs_imag);
      o << "  alpha at " << a.label << ": " << (a.nonreal ? "non-real" : "not shown non-real") << " [" << a.method
        << ", min |Im| " << buf << "]\n";
    }
    if (l.imaginary_part_identity) {
      o << "  imaginary-part identity: " << (*l.imaginary_part_identity ? "holds" : "fails") << "\n";
    }
  }
  if (c.case1) {
    const auto& k = *c.case1;
    o << "\nKovacic case I: " << k.solutions << " solution(s) with rational logarithmic derivative\n";
    for (const auto& d : k.data) o << "  omega = " << d.omega << "\n";
    if (!k.pruned_points.empty()) {
      o << "  pruned (irrational or non-real exponents):";
      for (const auto& s : k.pruned_points) o << " " << s;
      o << "\n";
    }
    o << "  product test candidates: " << k.product_tests.size() << ", solution found: " << yes_no(k.product_found)
      << "\n";
    for (const auto& t : k.product_tests) {
      if (!t.residual_leading.empty()) {
        o << "  residual of v = prod (z - c)^n: degree " << t.residual_numerator_degree << ", leading "
          << t.residual_leading << "\n";
      }
    }
  }
  if (c.case2) {
    const auto& k = *c.case2;
    o << "\nKovacic case II: " << k.candidates.size() << " candidate(s), solution found: " << yes_no(k.found) << "\n";
    for (const auto& x : k.candidates) {
      o << "  e=" << x.candidate << " d=" << x.d << ": Xi " << (x.xi_nonzero ? "nonzero" : "zero") << ", numerator degree "
        << x.numerator_degree << ", leading " << x.leading_coefficient << "\n";
    }
  }
  if (c.case3_possible) o << "\nKovacic case III possible: " << yes_no(*c.case3_possible) << "\n";
  if (c.verdict) {
    const auto& v = *c.verdict;
    o << "\ndifferential Galois group: " << v.classification << "\n  identity component abelian: "
      << v.identity_component_abelian << "\n  possible groups:";
    for (const auto& g : v.possible_groups) o << " " << g;
    o << "\n";
    if (v.cyclic_order) o << "  cyclic order: " << *v.cyclic_order << "\n";
    o << "  rationale: " << v.rationale << "\n";
  }
  if (c.soundness) {
    const auto& s = *c.soundness;
    o << "\nsoundness gate: tables " << yes_no(s.table_match) << ", case I admissible " << yes_no(s.case1_admissible)
      << ", case II absent " << yes_no(s.case2_absent) << ", case III impossible " << yes_no(s.case3_impossible)
      << "\n";
  }
  o << "\nconclusion: " << to_string(c.conclusion) << "\n";
  return o.str();
}

}  // namespace

std::string render_report(const Certificate& c, ReportFormat format) {
  return format == ReportFormat::Json ? to_json_string(c) : text_report(c);
}

}  // namespace curvcert::cert
