#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvcert/models/params.hpp"

namespace curvcert::cert {

using exact::Rational;
using models::Potential;
using models::Space;

enum class Conclusion { NonintegrabilityCertified, NoObstructionFound, Degenerate };
std::string to_string(Conclusion c);
Conclusion conclusion_from_string(const std::string& s);

struct ParamsBlock {
  std::string space, potential, strength, mu, p, eps;
  // Derived values; empty when derivation failed.
  std::string kappa_sq, lambda_sq, z0;
  bool operator==(const ParamsBlock&) const = default;
};

struct SpectrumEntry {
  std::string label;
  std::string location;  // "inf" at infinity
  int order = 0;
  std::string alpha;
  std::string delta_squared;
  std::string delta;  // rational value, or "irrational"
  std::string exponents;
  bool operator==(const SpectrumEntry&) const = default;
};

struct TableMatchDetail {
  bool reference_match = false;
  int random_sets = 0;
  int random_matched = 0;
  bool gauge_verified = false;
  std::uint64_t seed = 0;
  bool operator==(const TableMatchDetail&) const = default;
};

struct AlphaEntry {
  std::string label;
  bool nonreal = false;
  std::string method;
  double min_abs_imag = 0.0;
  bool operator==(const AlphaEntry&) const = default;
};

struct LemmaBlock {
  std::string name;
  std::string hypotheses;
  bool hypotheses_hold = false;
  std::vector<std::string> violated;
  std::vector<AlphaEntry> alphas;
  bool conclusion_verified = false;
  std::optional<bool> imaginary_part_identity;
  bool operator==(const LemmaBlock&) const = default;
};

struct RiccatiEntry {
  std::string omega;
  std::map<std::string, std::string> exponents;
  std::string P;
  bool operator==(const RiccatiEntry&) const = default;
};

struct ProductEntry {
  std::map<std::string, int> exponents;
  int degree_P = 0;
  bool solved = false;
  int residual_numerator_degree = -1;
  std::string residual_leading;  // empty unless a residual was recorded
  bool operator==(const ProductEntry&) const = default;
};

struct Case1Block {
  int solutions = 0;
  std::vector<RiccatiEntry> data;
  std::vector<std::string> pruned_points;
  std::vector<ProductEntry> product_tests;
  bool product_found = false;
  bool operator==(const Case1Block&) const = default;
};

struct XiWitness {
  std::string candidate;
  std::string d;
  bool xi_nonzero = false;
  int numerator_degree = -1;
  std::string leading_coefficient;
  bool operator==(const XiWitness&) const = default;
};

struct Case2Block {
  std::vector<XiWitness> candidates;
  bool found = false;
  std::string found_candidate;
  std::string P;
  bool operator==(const Case2Block&) const = default;
};

struct VerdictBlock {
  std::string classification;
  std::string identity_component_abelian;
  std::vector<std::string> possible_groups;
  std::optional<int> cyclic_order;
  std::string rationale;
  bool operator==(const VerdictBlock&) const = default;
};

// The four conditions required before nonintegrability is claimed.
struct SoundnessBlock {
  bool table_match = false;
  bool case1_admissible = false;
  bool case2_absent = false;
  bool case3_impossible = false;
  bool passed() const { return table_match && case1_admissible && case2_absent && case3_impossible; }
  bool operator==(const SoundnessBlock&) const = default;
};

struct Certificate {
  ParamsBlock params;
  std::vector<SpectrumEntry> spectrum;
  std::optional<bool> table_match;
  std::optional<TableMatchDetail> table_match_detail;
  std::optional<LemmaBlock> lemma;
  std::optional<Case1Block> case1;
  std::optional<Case2Block> case2;
  std::optional<bool> case3_possible;
  std::optional<VerdictBlock> verdict;
  std::optional<SoundnessBlock> soundness;
  Conclusion conclusion = Conclusion::Degenerate;
  std::optional<std::string> guard;
  std::optional<std::string> message;
  bool operator==(const Certificate&) const = default;
};

std::string to_json_string(const Certificate& c);
// Throws ParseError on malformed input.
Certificate certificate_from_json(const std::string& text);

enum class ReportFormat { Json, Text };
std::string render_report(const Certificate& c, ReportFormat format);

}  // namespace curvcert::cert
