#include "curvcert/kovacic/kovacic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "curvcert/errors.hpp"
#include "curvcert/ratcalc/linsolve.hpp"

namespace curvcert::kovacic {

using exact::GaussRational;
using linode::SingularPoint;
using ratcalc::differentiate;

namespace {

RatFunc cst(const TowerContext& ctx, const Rational& q) { return RatFunc::constant(ctx, GaussRational(q)); }

// sum w_c / (z - c) over (location, weight) pairs.
RatFunc simple_pole_sum(const TowerContext& ctx, const std::vector<std::pair<TowerScalar, Rational>>& terms) {
  RatFunc sum(ctx);
  for (const auto& [c, w] : terms)
    if (!w.is_zero()) sum += RatFunc::pole(c, 1, TowerScalar(ctx, GaussRational(w)));
  return sum;
}

std::vector<int> order2_set(const SingularPoint& p) {
  std::set<int> s{2};
  if (p.delta_rational) {
    for (const Rational& v : {Rational(2) + Rational(2) * *p.delta_rational, Rational(2) - Rational(2) * *p.delta_rational})
      if (auto n = v.to_long()) s.insert(static_cast<int>(*n));
  }
  return {s.begin(), s.end()};
}

}  // namespace

int ECandidate::e_infinity() const { return choices.back().e; }

std::string ECandidate::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i + 1 < choices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(choices[i].e);
  }
  out += ";" + std::to_string(e_infinity()) + ")";
  return out;
}

std::vector<ESet> e_sets(const SingularitySpectrum& spec) {
  std::vector<ESet> out;
  for (const auto& p : spec.points) {
    ESet s{p.label, p.location, {}};
    if (p.at_infinity()) {
      if (p.order <= 1) s.values = {0, 2, 4};
      else if (p.order == 2) s.values = order2_set(p);
      else s.values = {4 - p.order};
    } else {
      if (p.order == 1) s.values = {4};
      else if (p.order == 2) s.values = order2_set(p);
      else s.values = {p.order};
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ECandidate> candidates(const std::vector<ESet>& esets) {
  std::vector<ECandidate> out;
  if (esets.empty()) return out;
  std::vector<int> pick(esets.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == esets.size()) {
      long sum_finite = 0;
      for (size_t k = 0; k + 1 < esets.size(); ++k) sum_finite += pick[k];
      long twice_d = pick.back() - sum_finite;
      if (twice_d < 0 || twice_d % 2 != 0) return;
      ECandidate c;
      for (size_t k = 0; k < esets.size(); ++k) c.choices.push_back({esets[k].label, esets[k].location, pick[k]});
      c.d = Rational(twice_d / 2);
      out.push_back(std::move(c));
      return;
    }
    for (int v : esets[i].values) {
      pick[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const ECandidate& a, const ECandidate& b) {
    for (size_t k = 0; k < a.choices.size(); ++k)
      if (a.choices[k].e != b.choices[k].e) return a.choices[k].e < b.choices[k].e;
    return false;
  });
  return out;
}

RatFunc theta(const TowerContext& ctx, const ECandidate& e) {
  std::vector<std::pair<TowerScalar, Rational>> terms;
  for (const auto& c : e.choices)
    if (c.location) terms.emplace_back(*c.location, Rational(c.e, 2));
  return simple_pole_sum(ctx, terms);
}

RatFunc xi(const NormalFormODE& nf, const RatFunc& th) {
  const auto& ctx = nf.r.context();
  RatFunc t1 = differentiate(th);
  RatFunc t2 = differentiate(t1);
  return t2 + cst(ctx, 3) * th * t1 + th * th * th - cst(ctx, 4) * nf.r * th - cst(ctx, 2) * differentiate(nf.r);
}

std::vector<RatFunc> step3_operator(const NormalFormODE& nf, const RatFunc& th) {
  const auto& ctx = nf.r.context();
  RatFunc c1 = cst(ctx, 3) * th * th + cst(ctx, 3) * differentiate(th) - cst(ctx, 4) * nf.r;
  return {xi(nf, th), c1, cst(ctx, 3) * th, cst(ctx, 1)};
}

std::optional<CaseTwoSolution> search_P(const NormalFormODE& nf, const ECandidate& e) {
  auto d = e.d.to_long();
  if (!d || *d < 0) return std::nullopt;
  const auto& ctx = nf.r.context();
  RatFunc th = theta(ctx, e);
  auto P = ratcalc::find_polynomial_solution(step3_operator(nf, th), static_cast<int>(*d));
  if (!P) return std::nullopt;
  RatFunc psi = th + RatFunc(P->derivative(), *P);
  return CaseTwoSolution{e, th, *P, psi};
}

CaseTwoReport case2_search(const NormalFormODE& nf, const SingularitySpectrum& spec) {
  CaseTwoReport rep;
  rep.candidates = candidates(e_sets(spec));
  const auto& ctx = nf.r.context();
  for (const auto& c : rep.candidates) {
    rep.xis.push_back(xi(nf, theta(ctx, c)));
    if (!rep.found) rep.found = search_P(nf, c);
  }
  return rep;
}

CaseOneReport case1_search(const NormalFormODE& nf, const SingularitySpectrum& spec) {
  CaseOneReport rep;
  const auto& ctx = nf.r.context();
  std::vector<const SingularPoint*> finite = spec.finite();
  std::vector<std::vector<Rational>> menus;
  for (const auto* p : finite) {
    auto ex = p->rational_exponents();
    if (!ex) {
      rep.pruned_points.push_back(p->label);
      continue;
    }
    std::vector<Rational> m{ex->first};
    if (!(ex->second == ex->first)) m.push_back(ex->second);
    menus.push_back(std::move(m));
  }
  auto inf = spec.infinity().rational_exponents();
  if (!inf) rep.pruned_points.push_back(spec.infinity().label);
  if (!rep.pruned_points.empty()) return rep;

  std::vector<Rational> inf_menu{inf->first};
  if (!(inf->second == inf->first)) inf_menu.push_back(inf->second);

  // Enumerate exponent choices with integral deg P >= 0, smallest degree first.
  struct Choice {
    std::vector<Rational> rho;
    Rational rho_inf;
    long degree;
  };
  std::vector<Choice> choices;
  std::vector<Rational> pick(finite.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i < finite.size()) {
      for (const auto& rho : menus[i]) {
        pick[i] = rho;
        rec(i + 1);
      }
      return;
    }
    Rational sum(0);
    for (const auto& rho : pick) sum += rho;
    for (const auto& rho_inf : inf_menu) {
      auto n = (-rho_inf - sum).to_long();
      if (n && *n >= 0) choices.push_back({pick, rho_inf, *n});
    }
  };
  rec(0);
  std::stable_sort(choices.begin(), choices.end(),
                   [](const Choice& a, const Choice& b) { return a.degree < b.degree; });

  for (const auto& ch : choices) {
    // Two distinct solutions span the solution space; any further one is a combination.
    if (rep.solutions.size() >= 2) break;
    std::vector<std::pair<TowerScalar, Rational>> terms;
    for (size_t k = 0; k < finite.size(); ++k) terms.emplace_back(*finite[k]->location, ch.rho[k]);
    RatFunc phi = simple_pole_sum(ctx, terms);
    std::vector<RatFunc> ops{differentiate(phi) + phi * phi - nf.r, cst(ctx, 2) * phi, cst(ctx, 1)};
    auto P = ratcalc::find_polynomial_solution(ops, static_cast<int>(ch.degree));
    if (!P) continue;
    RatFunc omega = phi + RatFunc(P->derivative(), *P);
    if (!linode::riccati_residual(nf, omega).is_zero())
      throw InvariantViolation("case-1 candidate fails the Riccati equation");
    bool dup = std::any_of(rep.solutions.begin(), rep.solutions.end(),
                           [&](const RiccatiSolution& s) { return s.omega == omega; });
    if (dup) continue;
    RiccatiSolution sol{omega, {}, *P};
    for (size_t k = 0; k < finite.size(); ++k) sol.exponent_choices[finite[k]->label] = ch.rho[k];
    sol.exponent_choices[spec.infinity().label] = ch.rho_inf;
    rep.solutions.push_back(std::move(sol));
  }
  return rep;
}

ProductTestReport product_test(const NormalFormODE& nf, const SingularitySpectrum& spec) {
  ProductTestReport rep;
  const auto& ctx = nf.r.context();
  auto integer_sums = [](const SingularPoint& p, const Rational& mixed) {
    std::set<long> s;
    if (auto n = mixed.to_long()) s.insert(*n);
    if (auto ex = p.rational_exponents()) {
      for (const Rational& v : {ex->first * Rational(2), ex->second * Rational(2)})
        if (auto n = v.to_long()) s.insert(*n);
    }
    return std::vector<long>(s.begin(), s.end());
  };
  std::vector<const SingularPoint*> finite = spec.finite();
  std::vector<std::vector<long>> menus;
  for (const auto* p : finite) menus.push_back(integer_sums(*p, Rational(1)));
  // v ~ z^(-sigma) at infinity.
  std::vector<long> sigmas = integer_sums(spec.infinity(), Rational(-1));

  std::vector<long> pick(finite.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (rep.v) return;
    if (i < finite.size()) {
      for (long n : menus[i]) {
        pick[i] = n;
        rec(i + 1);
      }
      return;
    }
    long sum = std::accumulate(pick.begin(), pick.end(), 0L);
    for (long sigma : sigmas) {
      long degP = -sigma - sum;
      if (degP < 0) continue;
      std::vector<std::pair<TowerScalar, Rational>> terms;
      ProductCandidate cand{{}, static_cast<int>(degP), false, std::nullopt};
      RatFunc w = RatFunc::constant(ctx, GaussRational(1));
      for (size_t k = 0; k < finite.size(); ++k) {
        terms.emplace_back(*finite[k]->location, Rational(pick[k]));
        cand.exponents[finite[k]->label] = static_cast<int>(pick[k]);
        w *= pow(RatFunc(Poly::linear(*finite[k]->location)), static_cast<int>(pick[k]));
      }
      cand.exponents[spec.infinity().label] = static_cast<int>(sigma);
      RatFunc L = simple_pole_sum(ctx, terms);
      auto P = ratcalc::find_polynomial_solution(step3_operator(nf, L), static_cast<int>(degP));
      if (degP == 0) cand.residual = linode::symmetric_power_residual(nf, w);
      if (P) {
        cand.solved = true;
        RatFunc v = RatFunc(*P) * w;
        if (!linode::symmetric_power_residual(nf, v).is_zero())
          throw InvariantViolation("product candidate fails the second symmetric power");
        rep.v = v;
      }
      rep.tested.push_back(std::move(cand));
      if (rep.v) return;
    }
  };
  rec(0);
  return rep;
}

bool case3_possible(const SingularitySpectrum& spec) {
  return std::all_of(spec.points.begin(), spec.points.end(),
                     [](const SingularPoint& p) { return p.delta_rational.has_value(); });
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::FullTriangular_NonAbelian: return "FullTriangular_NonAbelian";
    case Classification::DiagonalOrSmaller_Abelian: return "DiagonalOrSmaller_Abelian";
    case Classification::Finite_Abelian: return "Finite_Abelian";
    case Classification::SL2_NonAbelian: return "SL2_NonAbelian";
    case Classification::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

Classification classification_from_string(const std::string& s) {
  for (auto c : {Classification::FullTriangular_NonAbelian, Classification::DiagonalOrSmaller_Abelian,
                 Classification::Finite_Abelian, Classification::SL2_NonAbelian, Classification::Inconclusive})
    if (to_string(c) == s) return c;
  throw ParseError("unknown classification '" + s + "'");
}

Tristate tristate_from_string(const std::string& s) {
  for (auto t : {Tristate::False, Tristate::True, Tristate::Unknown})
    if (to_string(t) == s) return t;
  throw ParseError("unknown tristate '" + s + "'");
}

namespace {

std::optional<int> smallest_power(const RiccatiSolution& s) {
  for (int m = 1; m <= 8; ++m) {
    bool ok = true;
    for (const auto& [label, rho] : s.exponent_choices)
      if (!(rho * Rational(m)).is_integer()) ok = false;
    if (ok) return m;
  }
  return std::nullopt;
}

}  // namespace

GaloisVerdict classify(const NormalFormODE& /*r*/, const SingularitySpectrum& spec, const CaseOneReport& case1,
                       const ProductTestReport& product, const CaseTwoReport& case2, bool case3) {
  GaloisVerdict v;
  v.case_one = case1.solutions;
  v.case_two_found = case2.found;
  v.case_three_possible = case3;
  const size_t found = case1.solutions.size();

  bool irrational_finite = std::any_of(spec.points.begin(), spec.points.end(), [](const SingularPoint& p) {
    return !p.at_infinity() && !p.delta_rational.has_value();
  });

  if (found >= 2) {
    v.classification = Classification::DiagonalOrSmaller_Abelian;
    v.identity_component_abelian = Tristate::True;
    v.possible_groups = {Classification::DiagonalOrSmaller_Abelian};
    v.cyclic_order = smallest_power(case1.solutions.front());
    v.rationale = "two independent solutions with rational logarithmic derivative";
    if (!v.cyclic_order) v.rationale += "; proper-subgroup status undetermined (no m <= 8)";
    return v;
  }
  if (product.v) {
    v.classification = Classification::Inconclusive;
    v.identity_component_abelian = Tristate::Unknown;
    v.rationale = "second symmetric power has a rational solution; two solutions may exist outside the tower";
    return v;
  }
  if (case2.found) {
    v.classification = Classification::Inconclusive;
    v.identity_component_abelian = Tristate::True;
    v.rationale = "case II solution found (subgroup of the infinite dihedral group)";
    return v;
  }
  if (found == 1) {
    if (irrational_finite) {
      v.classification = Classification::FullTriangular_NonAbelian;
      v.identity_component_abelian = Tristate::False;
      v.possible_groups = {Classification::FullTriangular_NonAbelian};
      v.rationale = "unique solution with rational logarithmic derivative and an irrational finite exponent";
    } else {
      v.classification = Classification::Inconclusive;
      v.identity_component_abelian = Tristate::True;
      v.cyclic_order = smallest_power(case1.solutions.front());
      v.rationale = "unique solution with rational exponents: triangular group T_m";
      if (!v.cyclic_order) {
        v.identity_component_abelian = Tristate::Unknown;
        v.rationale += "; proper-subgroup status undetermined (no m <= 8)";
      }
    }
    return v;
  }
  if (case3) {
    v.classification = Classification::Inconclusive;
    v.identity_component_abelian = Tristate::Unknown;
    v.rationale = "all exponent differences rational: case III not excluded";
    return v;
  }
  v.classification = Classification::SL2_NonAbelian;
  v.identity_component_abelian = Tristate::False;
  if (case1.complete()) {
    v.possible_groups = {Classification::SL2_NonAbelian};
    v.rationale = "no case I, II or III solution";
  } else {
    v.possible_groups = {Classification::FullTriangular_NonAbelian, Classification::SL2_NonAbelian};
    v.rationale = "no two independent case I solutions, no case II, case III impossible; a single case I "
                  "solution would carry an irrational exponent, so the group is the full triangular group or SL2";
  }
  return v;
}

GaloisVerdict analyze(const NormalFormODE& nf, const std::vector<linode::Pole>& candidate_poles) {
  SingularitySpectrum spec;
  try {
    spec = linode::singularity_spectrum(nf, linode::locate_poles(nf.r, candidate_poles));
  } catch (const NonFuchsian& e) {
    GaloisVerdict v;
    v.rationale = std::string("non-Fuchsian input: ") + e.what();
    return v;
  }
  auto c1 = case1_search(nf, spec);
  auto pt = product_test(nf, spec);
  auto c2 = case2_search(nf, spec);
  return classify(nf, spec, c1, pt, c2, case3_possible(spec));
}

}  // namespace curvcert::kovacic
