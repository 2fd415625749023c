#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvcert/linode/linode.hpp"

namespace curvcert::kovacic {

using exact::Rational;
using exact::TowerContext;
using exact::TowerScalar;
using linode::NormalFormODE;
using linode::SingularitySpectrum;
using ratcalc::Poly;
using ratcalc::RatFunc;

struct ESet {
  std::string label;
  std::optional<TowerScalar> location;  // empty at infinity
  std::vector<int> values;              // ascending
};

struct EChoice {
  std::string label;
  std::optional<TowerScalar> location;
  int e;
};

struct ECandidate {
  std::vector<EChoice> choices;  // infinity last
  Rational d;

  int e_infinity() const;
  std::string to_string() const;
};

std::vector<ESet> e_sets(const SingularitySpectrum& spec);
// Cartesian product filtered to d in Z>=0, sorted lexicographically by e.
std::vector<ECandidate> candidates(const std::vector<ESet>& esets);

// 1/2 sum e_c / (z - c) over finite points.
RatFunc theta(const TowerContext& ctx, const ECandidate& e);
RatFunc xi(const NormalFormODE& r, const RatFunc& theta);
// [Xi, 3 Theta^2 + 3 Theta' - 4 r, 3 Theta, 1]: coefficients of P, P', P'', P'''.
std::vector<RatFunc> step3_operator(const NormalFormODE& r, const RatFunc& theta);

struct CaseTwoSolution {
  ECandidate e;
  RatFunc theta;
  Poly P;
  RatFunc psi;  // Theta + P'/P
};

std::optional<CaseTwoSolution> search_P(const NormalFormODE& r, const ECandidate& e);

struct CaseTwoReport {
  std::vector<ECandidate> candidates;
  std::vector<RatFunc> xis;  // one per candidate
  std::optional<CaseTwoSolution> found;
};
CaseTwoReport case2_search(const NormalFormODE& r, const SingularitySpectrum& spec);

struct RiccatiSolution {
  RatFunc omega;
  std::map<std::string, Rational> exponent_choices;  // includes "inf"
  Poly P;
};

struct CaseOneReport {
  std::vector<RiccatiSolution> solutions;
  // Points whose exponents are not rational; every branch through them is pruned.
  std::vector<std::string> pruned_points;
  bool complete() const { return pruned_points.empty(); }
};
CaseOneReport case1_search(const NormalFormODE& r, const SingularitySpectrum& spec);

struct ProductCandidate {
  std::map<std::string, int> exponents;  // n_c, and -deg v under "inf"
  int degree_P;
  bool solved;
  // Residual v''' - 4 r v' - 2 r' v for v = prod (z - c)^n_c when degree_P = 0.
  std::optional<RatFunc> residual;
};

// Searches rational v = P * prod (z - c)^n_c solving the second symmetric power,
// the product y1 y2 of two independent solutions with rational log-derivatives.
struct ProductTestReport {
  std::vector<ProductCandidate> tested;
  std::optional<RatFunc> v;
};
ProductTestReport product_test(const NormalFormODE& r, const SingularitySpectrum& spec);

// Case III needs every exponent difference rational.
bool case3_possible(const SingularitySpectrum& spec);

enum class Classification {
  FullTriangular_NonAbelian,
  DiagonalOrSmaller_Abelian,
  Finite_Abelian,
  SL2_NonAbelian,
  Inconclusive
};
enum class Tristate { False, True, Unknown };

std::string to_string(Classification c);
std::string to_string(Tristate t);
Classification classification_from_string(const std::string& s);
Tristate tristate_from_string(const std::string& s);

struct GaloisVerdict {
  std::vector<RiccatiSolution> case_one;
  std::optional<CaseTwoSolution> case_two_found;
  bool case_three_possible = false;
  Classification classification = Classification::Inconclusive;
  Tristate identity_component_abelian = Tristate::Unknown;
  std::vector<Classification> possible_groups;
  // Smallest m <= 8 with y1^m rational; empty if none was found.
  std::optional<int> cyclic_order;
  std::string rationale;
};

GaloisVerdict classify(const NormalFormODE& r, const SingularitySpectrum& spec, const CaseOneReport& case1,
                       const ProductTestReport& product, const CaseTwoReport& case2, bool case3);

// Full pipeline on y'' = r y with the supplied candidate pole locations;
// non-Fuchsian input yields an Inconclusive verdict.
GaloisVerdict analyze(const NormalFormODE& r, const std::vector<linode::Pole>& candidate_poles);

}  // namespace curvcert::kovacic
