#pragma once

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "coxgrowth/algnum.hpp"
#include "coxgrowth/families.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/json_io.hpp"
#include "coxgrowth/sequences.hpp"

namespace coxgrowth {

inline const std::string kRadiusNotRateNote =
    "the value (3 - sqrt 5)/2 = 0.381966... sometimes quoted as this growth rate is the radius of "
    "convergence 1/tau = (phi - 1)^2; the growth rate is tau = (3 + sqrt 5)/2 = 2.618033...";

struct ClassifyReport {
  CoxeterSystem system;
  DiagramInvariants invariants;
  SphericityReport sphericity;
  std::optional<std::vector<int>> gamma_star_witness;
  GrowthSeries series;
  NumeratorReport classification;
  std::vector<std::string> notes;
};

/// Full pipeline on one system; rejections propagate as Error.
inline ClassifyReport classify_system(const CoxeterSystem& s, const PerronOptions& opt = {}) {
  ClassifyReport r;
  r.system = s;
  r.invariants = connectivity_report(s);
  r.series = steinberg_series(s);
  r.sphericity = classify_sphericity(s);
  r.gamma_star_witness = contains_gamma_star(s);
  r.classification = classify_growth_numerator(r.series, opt);
  if (r.series.census == census(gamma_star())) r.notes.push_back(kRadiusNotRateNote);
  for (const auto& w : r.sphericity.warnings) r.notes.push_back("advisory: " + w);
  if (r.classification.perron.verdict == Verdict::Indeterminate)
    r.notes.push_back("Perron certification inconclusive: " + r.classification.perron.note);
  return r;
}

inline Json cyclotomic_to_json(const std::vector<CyclotomicFactor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(Json{{"index", f.index}, {"multiplicity", f.multiplicity}});
  return out;
}

inline Json classification_to_json(const AlgebraicClassification& c) {
  Json j{{"verdict", std::string(to_string(c.verdict))}, {"factor", polynomial_to_json(c.stripped_factor)}};
  if (c.tau) j["tau"] = interval_to_json(*c.tau);
  if (c.salem) {
    j["salem"] = Json{{"reciprocal", c.salem->reciprocal},
                      {"degree", c.salem->degree},
                      {"trace_polynomial", polynomial_to_json(c.salem->trace_polynomial)},
                      {"trace_roots_above_two", c.salem->roots_above_two},
                      {"trace_roots_in_band", c.salem->roots_in_band}};
  }
  if (c.pisot) {
    j["pisot"] = Json{{"roots_above_one", c.pisot->roots_above_one}, {"circle_root", c.pisot->circle_root}};
    if (c.pisot->inside_count) j["pisot"]["inside_unit_disk"] = *c.pisot->inside_count;
  }
  if (c.perron) {
    const auto& p = *c.perron;
    Json disks = Json::array();
    for (const auto& d : p.disks) disks.push_back(Json{{"re", d.re}, {"im", d.im}, {"radius", d.radius}});
    j["perron"] = Json{{"method", p.method},
                       {"precision_bits", p.precision_bits},
                       {"tau_low", rational_to_json(p.tau_low)},
                       {"max_other_modulus", p.max_other_modulus},
                       {"gap", p.gap},
                       {"disks", disks}};
    if (p.inside_tau_low) j["perron"]["roots_inside_tau_low"] = *p.inside_tau_low;
    if (!p.witness.empty()) j["perron"]["witness"] = p.witness;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json numerator_report_to_json(const NumeratorReport& r) {
  Json j{{"verdict", std::string(to_string(r.headline))},
         {"stripped_factor", polynomial_to_json(r.stripped)},
         {"cyclotomic_factors", cyclotomic_to_json(r.cyclotomic_factors)},
         {"tau", interval_to_json(r.rate.isolating)},
         {"radius", interval_to_json(r.rate.radius)}};
  if (r.salem) j["salem_check"] = classification_to_json(*r.salem);
  if (r.pisot) j["pisot_check"] = classification_to_json(*r.pisot);
  j["perron_check"] = classification_to_json(r.perron);
  return j;
}

inline Json classify_report_to_json(const ClassifyReport& r) {
  Json labels = Json::object();
  for (const auto& [k, c] : r.invariants.label_multiset) labels[std::to_string(k)] = c;
  Json comps = Json::array();
  for (const auto& c : r.sphericity.components)
    comps.push_back(Json{{"vertices", c.vertices}, {"kind", std::string(to_string(c.kind))}, {"type", c.type_name}});
  Json j{{"system", diagram_to_json(r.system)},
         {"euler_characteristic", r.invariants.euler_characteristic},
         {"dimension", r.invariants.dimension ? Json(*r.invariants.dimension) : Json(nullptr)},
         {"connected", r.invariants.connected},
         {"components", r.invariants.components},
         {"label_multiset", labels},
         {"sphericity", Json{{"global", std::string(to_string(r.sphericity.global))}, {"components", comps}}},
         {"contains_gamma_star", r.gamma_star_witness.has_value()}};
  if (r.gamma_star_witness) j["gamma_star_witness"] = *r.gamma_star_witness;
  j["growth_series"] = Json{{"chi_case", std::string(to_string(r.series.chi_case))},
                            {"canonical", Json{{"numerator", polynomial_to_json(r.series.canonical_numerator)},
                                               {"denominator", polynomial_to_json(r.series.canonical_denominator)}}},
                            {"reduced", Json{{"numerator", polynomial_to_json(r.series.numerator())},
                                             {"denominator", polynomial_to_json(r.series.denominator())}}}};
  j["classification"] = numerator_report_to_json(r.classification);
  j["notes"] = r.notes;
  return j;
}

inline std::string format_double(double d, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << d;
  return os.str();
}

inline std::string classify_report_text(const ClassifyReport& r) {
  std::ostringstream os;
  const auto& c = r.classification;
  os << "system           " << describe(r.system) << "\n";
  os << "chi              " << r.invariants.euler_characteristic << "\n";
  os << "dimension        " << (r.invariants.dimension ? std::to_string(*r.invariants.dimension) : ">= 3") << " (at most 2)\n";
  os << "sphericity       " << to_string(r.sphericity.global) << "\n";
  os << "contains G*      " << (r.gamma_star_witness ? "yes" : "no") << "\n";
  os << "1/f(1/z)         (" << r.series.canonical_numerator.to_string() << ") / ("
     << r.series.canonical_denominator.to_string() << ")\n";
  os << "reduced          (" << r.series.numerator().to_string() << ") / (" << r.series.denominator().to_string() << ")\n";
  os << "stripped factor  " << c.stripped.to_string() << "\n";
  if (!c.cyclotomic_factors.empty()) {
    os << "cyclotomic       ";
    for (const auto& f : c.cyclotomic_factors) os << "Phi_" << f.index << "^" << f.multiplicity << " ";
    os << "\n";
  }
  os << "tau              " << format_double(c.rate.approx, 12) << " (enclosure width "
     << format_double(c.rate.isolating.width().get_d(), 3) << ")\n";
  os << "verdict          " << to_string(c.headline) << "\n";
  os << "perron           " << to_string(c.perron.verdict);
  if (c.perron.perron) os << " via " << c.perron.perron->method;
  os << "\n";
  for (const auto& n : r.notes) os << "note             " << n << "\n";
  return os.str();
}

inline Json sequence_report_to_json(const SequenceReport& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    const double gap = Rational(r.base_tau.high - st.tau.low).get_d();
    steps.push_back(Json{{"n", st.n},
                         {"chi", st.chi},
                         {"system", diagram_to_json(st.system)},
                         {"tau", interval_to_json(st.tau)},
                         {"gap", gap},
                         {"verdict", std::string(to_string(st.verdict))},
                         {"method", st.method}});
  }
  Json added = Json::array();
  for (const auto& e : r.added_edges) added.push_back(Json{{"p", e.p}, {"q", e.q}, {"rule", std::string(to_string(e.rule))}});
  return Json{{"base", diagram_to_json(r.base)},
              {"pathway", r.pathway},
              {"base_tau", interval_to_json(r.base_tau)},
              {"steps", steps},
              {"added_edges", added},
              {"monotone", r.monotone},
              {"order_chain", r.order_chain},
              {"convergence_gap", r.convergence_gap},
              {"epsilon", r.epsilon},
              {"converged", r.converged},
              {"stopping_rule", r.stopping_rule}};
}

inline std::string sequence_report_text(const SequenceReport& r) {
  std::ostringstream os;
  os << "base " << describe(r.base) << "  pathway " << r.pathway << "  tau " << format_double(r.base_tau.approx(), 15)
     << "\n";
  os << std::left << std::setw(8) << "n" << std::setw(5) << "chi" << std::setw(22) << "tau" << std::setw(14) << "gap"
     << "verdict\n";
  for (const auto& st : r.steps) {
    const double gap = Rational(r.base_tau.high - st.tau.low).get_d();
    os << std::left << std::setw(8) << st.n << std::setw(5) << st.chi << std::setw(22) << format_double(st.tau.approx(), 17)
       << std::setw(14) << format_double(gap, 4) << to_string(st.verdict) << " (" << st.method << ")\n";
  }
  os << "monotone " << (r.monotone ? "yes" : "no") << ", order chain " << (r.order_chain ? "yes" : "no") << ", gap "
     << format_double(r.convergence_gap, 4) << (r.converged ? " < " : " >= ") << r.epsilon << " ("
     << r.stopping_rule << ")\n";
  return os.str();
}

inline Json rouche_to_json(const RoucheReport& r, bool with_samples = false) {
  Json j{{"N", r.n},
         {"k", r.k},
         {"a", rational_to_json(r.a)},
         {"a_bound", r.a_bound},
         {"a_above_one", r.a_above_one},
         {"a_within_bound", r.a_within_bound},
         {"n_at_least_nine", r.n_at_least_nine},
         {"r_star", r.r_star},
         {"lambda_a", r.lambda_a},
         {"alpha_k", r.alpha_k},
         {"beta_k", r.beta_k},
         {"Lambda_kN", r.capital_lambda},
         {"alpha_decrement", r.alpha_decrement},
         {"alpha_limit", r.alpha_limit},
         {"lambda_threshold", r.lambda_threshold},
         {"h_lower_bound_small_N", r.h_lower_bound},
         {"sample_count", r.circle_samples.size()},
         {"min_delta", r.min_delta},
         {"all_samples_positive", r.all_samples_positive}};
  if (with_samples) {
    Json s = Json::array();
    for (const auto& c : r.circle_samples) s.push_back(Json::array({c.theta, c.delta}));
    j["circle_samples"] = s;
  }
  return j;
}

inline Json perron_family_to_json(const PerronFamilyReport& r) {
  Json j{{"k", r.k},
         {"N", r.n},
         {"E", r.e},
         {"a", rational_to_json(r.a)},
         {"contains_gamma_star", r.gamma_star_witness.has_value()},
         {"a_in_range", r.a_in_range},
         {"hypotheses_pass", r.hypotheses_pass}};
  if (r.gamma_star_witness) j["gamma_star_witness"] = *r.gamma_star_witness;
  if (r.a > 1) j["rouche"] = rouche_to_json(r.rouche);
  j["classification"] = numerator_report_to_json(r.classification);
  return j;
}

inline Json scan_record_to_json(const ScanRecord& r) {
  return Json{{"system", diagram_to_json(r.system)},
              {"chi", r.chi},
              {"verdict", std::string(to_string(r.headline))},
              {"perron", std::string(to_string(r.perron))},
              {"tau", r.tau}};
}

}  // namespace coxgrowth
