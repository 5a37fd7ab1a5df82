#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/algnum.hpp"
#include "coxgrowth/growth.hpp"

namespace coxgrowth {

enum class StepRule { DisconnectedBridge, TreeChord, HatChord };

constexpr std::string_view to_string(StepRule r) {
  switch (r) {
    case StepRule::DisconnectedBridge: return "disconnected-bridge";
    case StepRule::TreeChord: return "tree-chord";
    case StepRule::HatChord: return "hat-chord";
  }
  return "tree-chord";
}

struct AddedEdge {
  int p = 0;
  int q = 0;
  StepRule rule = StepRule::TreeChord;
  friend bool operator==(const AddedEdge&, const AddedEdge&) = default;
};

struct StepResult {
  CoxeterSystem system;
  AddedEdge added;
};

inline constexpr long kMinimumSequenceLabel = 7;

namespace detail {

inline void require_sequence_base(const CoxeterSystem& s) {
  const auto dim = dimension_at_most_two(s);
  if (!dim.at_most_two) fail(ErrorKind::NotApplicable, "dimension exceeds 2");
  const auto sph = classify_sphericity(s);
  if (sph.global != Sphericity::Other)
    fail(ErrorKind::NotApplicable, std::string("base system is ") + std::string(to_string(sph.global)));
}

inline bool all_labels_two(const CoxeterSystem& s) {
  for (const auto& e : s.edges())
    if (e.label != 2) return false;
  return true;
}

}  // namespace detail

/// One edge addition lowering chi by one; choices are lowest-index.
inline StepResult flattening_step(const CoxeterSystem& s, long n) {
  require(n >= kMinimumSequenceLabel, ErrorKind::NotApplicable, "n must be >= 7, got " + std::to_string(n));
  detail::require_sequence_base(s);
  require(euler_characteristic(s) >= 1, ErrorKind::NotApplicable, "chi must be >= 1");
  const auto comp = presentation_components(s);
  StepResult out{s, {}};
  const int rank = s.rank();
  for (int v = 2; v <= rank; ++v) {
    if (comp[static_cast<std::size_t>(v - 1)] != comp[0]) {
      out.system.set_label(1, v, Label(n));
      out.added = {1, v, StepRule::DisconnectedBridge};
      return out;
    }
  }
  // Connected with chi >= 1: a tree.
  const auto es = s.edges();
  auto heavy = std::find_if(es.begin(), es.end(), [](const Edge& e) { return e.label >= 3; });
  if (heavy == es.end()) fail(ErrorKind::NotApplicable, "connected tree with every label 2");
  // Pivot at the endpoint that has another neighbour, preferring the larger index.
  for (const auto& [p, q] : {std::pair{heavy->i, heavy->j}, std::pair{heavy->j, heavy->i}}) {
    for (int r : s.neighbours(q)) {
      if (r == p) continue;
      out.system.set_label(std::min(p, r), std::max(p, r), Label(n));
      out.added = {std::min(p, r), std::max(p, r), StepRule::TreeChord};
      return out;
    }
  }
  fail(ErrorKind::NotApplicable, "tree has a single edge");
}

struct Flattening {
  CoxeterSystem system;
  std::vector<AddedEdge> added;
};

/// Repeats the step chi times with the same label, ending at chi = 0.
inline Flattening flatten_to_chi_zero(const CoxeterSystem& s, long n) {
  require(n >= kMinimumSequenceLabel, ErrorKind::NotApplicable, "n must be >= 7, got " + std::to_string(n));
  detail::require_sequence_base(s);
  const int chi = euler_characteristic(s);
  require(chi >= 0, ErrorKind::NotApplicable, "chi must be >= 0");
  Flattening f{s, {}};
  for (int i = 0; i < chi; ++i) {
    StepResult r = flattening_step(f.system, n);
    f.system = std::move(r.system);
    f.added.push_back(r.added);
  }
  require(euler_characteristic(f.system) == 0, ErrorKind::InvariantBreach, "flattening did not reach chi = 0");
  require(dimension_at_most_two(f.system).at_most_two, ErrorKind::InvariantBreach, "flattening raised the dimension");
  return f;
}

/// Census after adding chi edges labelled n.
inline LabelCensus flattened_census(const LabelCensus& base, long n) {
  LabelCensus c = base;
  if (base.chi() > 0) c.labels[n] += base.chi();
  return c;
}

/// Numerator P of the chi >= 1 branch; the edgeless case reads [2] - N.
inline IntPolynomial base_numerator(const LabelCensus& c) {
  if (c.edges() == 0) return block(2) - IntPolynomial::constant(Integer(c.rank));
  return chi_positive_from_census(c);
}

/// Exponent m with (z - 1) P_n = z^m P - reciprocal(P) for the flattened census.
inline long bridging_exponent(int chi, long n) { return chi == 1 ? n + 1 : n; }

struct BridgingCheck {
  int chi = 0;
  long n = 0;
  IntPolynomial p;          // base numerator
  IntPolynomial p_n;        // canonical numerator after flattening
  bool literal_holds = false;    // z^n for chi = 1, z^{n+1} for chi >= 2
  bool corrected_holds = false;  // z^{n+1} for chi = 1, z^n for chi >= 2
};

inline BridgingCheck bridging_identity(const LabelCensus& base, long n) {
  const int chi = base.chi();
  require(chi >= 1, ErrorKind::NotApplicable, "chi must be >= 1");
  require(n >= kMinimumSequenceLabel, ErrorKind::NotApplicable, "n must be >= 7");
  require(!base.labels.contains(n), ErrorKind::NotApplicable, "n = " + std::to_string(n) + " collides with a label");
  BridgingCheck b;
  b.chi = chi;
  b.n = n;
  b.p = base_numerator(base);
  b.p_n = canonical_numerator(flattened_census(base, n));
  const IntPolynomial lhs = IntPolynomial{-1, 1} * b.p_n;
  const IntPolynomial rev = reciprocal_polynomial(b.p);
  auto holds = [&](long m) { return lhs == b.p.shifted(static_cast<std::size_t>(m)) - rev; };
  b.literal_holds = holds(chi == 1 ? n : n + 1);
  b.corrected_holds = holds(bridging_exponent(chi, n));
  return b;
}

/// Exact check of the bridging identity (exponents as derived, see BridgingCheck).
inline bool bridging_identity_check(const CoxeterSystem& s, long n) {
  require(euler_characteristic(s) >= 1, ErrorKind::NotApplicable, "chi must be >= 1");
  (void)flatten_to_chi_zero(s, n);
  return bridging_identity(census(s), n).corrected_holds;
}

/// Salem certificate for a flattened numerator without touching its full factorisation.
struct FlattenedVerdict {
  Verdict verdict = Verdict::Indeterminate;
  IsolatingInterval tau;
  std::string method;  // "generic" or "structured"
  std::string note;
};

/// Structured route: P = C T with C cyclotomic and T having one root outside the
/// closed disk and none on it. Then h = z^m T - sigma reciprocal(T) carries the only
/// root of P_n outside the disk, and P_n is reciprocal.
inline std::optional<FlattenedVerdict> structured_salem(const LabelCensus& base, long n,
                                                        const Rational& width = default_isolation_width()) {
  const int chi = base.chi();
  if (chi < 1 || base.labels.contains(n)) return std::nullopt;
  const IntPolynomial p = base_numerator(base);
  if (p.coeff(0) == 0) return std::nullopt;
  const auto strip = strip_cyclotomic_factors(p);
  const IntPolynomial& t = strip.stripped;
  if (t.degree() < 1 || t.coeff(0) == 0) return std::nullopt;
  try {
    if (schur_cohn_inside_count(t) != t.degree() - 1) return std::nullopt;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OnCircleOrDegenerate) return std::nullopt;
    throw;
  }
  int phi1 = 0;
  for (const auto& f : strip.factors)
    if (f.index == 1) phi1 = f.multiplicity;
  const long m = bridging_exponent(chi, n);
  const IntPolynomial t_rev = reciprocal_polynomial(t);
  const IntPolynomial h = t.shifted(static_cast<std::size_t>(m)) - (phi1 % 2 == 0 ? t_rev : -t_rev);
  const IntPolynomial p_n = canonical_numerator(flattened_census(base, n));
  const IntPolynomial c = strip.reconstruct() == p ? *divide_exact(p, t) : IntPolynomial{};
  if (c.is_zero() || IntPolynomial{-1, 1} * p_n != c * h)
    fail(ErrorKind::InvariantBreach, "structured factorisation of the flattened numerator failed");
  if (!is_reciprocal(p_n) && !is_reciprocal(-p_n))
    fail(ErrorKind::InvariantBreach, "flattened numerator is not reciprocal");
  // h < 0 on (1, tau_n) and h > 0 beyond: find a negative point, then bisect.
  Rational high(cauchy_root_bound(h) + 1);
  require(h.sign_at(high) > 0, ErrorKind::InvariantBreach, "h not positive beyond the root bound");
  Rational low = 1 + (high - 1) / 2;
  int guard = 0;
  while (h.sign_at(low) >= 0) {
    require(++guard < 4096, ErrorKind::InvariantBreach, "no negative value of h above 1");
    high = low;
    low = 1 + (low - 1) / 2;
  }
  while (high - low > width) {
    const Rational mid = (low + high) / 2;
    if (h.sign_at(mid) < 0) low = mid;
    else high = mid;
  }
  FlattenedVerdict v;
  v.method = "structured";
  v.tau = {low, high, true};
  const double tau = v.tau.approx();
  const long trace = std::lround(tau + 1 / tau);
  const IntPolynomial quad{1, -trace, 1};
  const bool quadratic = quad.sign_at(low) * quad.sign_at(high) <= 0 && divide_exact(p_n, quad).has_value();
  v.verdict = quadratic ? Verdict::QuadraticSalem : Verdict::Salem;
  v.note = "verdict refers to the minimal polynomial of tau, a factor of h";
  return v;
}

/// Default switch from the full pipeline to the structured route.
inline constexpr long kStructuredThreshold = 30;

inline FlattenedVerdict classify_flattened(const CoxeterSystem& flat, const LabelCensus& base, long n,
                                           long threshold = kStructuredThreshold) {
  if (n > threshold) {
    if (auto v = structured_salem(base, n)) return *v;
  }
  const auto rep = classify_growth_numerator(steinberg_series(flat));
  FlattenedVerdict v;
  v.method = "generic";
  v.verdict = rep.headline;
  v.tau = rep.rate.isolating;
  return v;
}

struct SequenceStep {
  long n = 0;
  CoxeterSystem system;
  int chi = 0;
  IsolatingInterval tau;
  Verdict verdict = Verdict::Indeterminate;
  std::string method;
};

struct SequenceReport {
  CoxeterSystem base;
  std::string pathway;  // "trivial", "flatten" or "hat"
  IsolatingInterval base_tau;
  std::vector<SequenceStep> steps;
  std::vector<AddedEdge> added_edges;
  bool monotone = true;
  bool order_chain = true;
  double convergence_gap = 0.0;  // base_tau.high - last step tau.low
  double epsilon = 1e-6;
  bool converged = true;
  std::string stopping_rule = "heuristic: the limit is guaranteed but no rate is known";
};

namespace detail {

inline void require_schedule(const std::vector<long>& ns, long minimum) {
  require(!ns.empty(), ErrorKind::ConfigError, "empty n schedule");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    require(ns[i] >= minimum, ErrorKind::ConfigError,
            "schedule entries must be >= " + std::to_string(minimum) + ", got " + std::to_string(ns[i]));
    if (i > 0) require(ns[i] > ns[i - 1], ErrorKind::ConfigError, "schedule must be strictly increasing");
  }
}

inline void finish_report(SequenceReport& r, const CoxeterSystem& anchor) {
  const Rational tol(1, Integer(1) << 40);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& st = r.steps[i];
    if (!partial_order_leq(st.system, anchor, identity_injection(anchor.rank()))) r.order_chain = false;
    if (i > 0) {
      const auto& prev = r.steps[i - 1];
      if (prev.tau.low > st.tau.high + tol) r.monotone = false;
      if (!partial_order_leq(prev.system, st.system, identity_injection(anchor.rank()))) r.order_chain = false;
    }
  }
  if (!r.steps.empty()) {
    // Certified upper bound on tau(base) - tau_n; never negative.
    const Rational gap = r.base_tau.high - r.steps.back().tau.low;
    r.convergence_gap = gap.get_d();
  }
  r.converged = r.convergence_gap < r.epsilon;
}

}  // namespace detail

/// The all-label-2 path on N vertices with the chord (1, N) labelled n.
inline CoxeterSystem hat_system(int rank, std::optional<long> chord = std::nullopt) {
  require(rank >= 4, ErrorKind::NotApplicable, "hat system needs rank >= 4");
  CoxeterSystem s(rank);
  for (int i = 1; i < rank; ++i) s.set_label(i, i + 1, Label(2));
  if (chord) s.set_label(1, rank, Label(*chord));
  return s;
}

inline SequenceReport hat_system_sequence(int rank, const std::vector<long>& ns, double epsilon = 1e-6) {
  require(rank >= 4, ErrorKind::NotApplicable, "hat system needs rank >= 4");
  detail::require_schedule(ns, 3);
  SequenceReport r;
  r.pathway = "hat";
  r.epsilon = epsilon;
  r.base = hat_system(rank);
  r.base_tau = growth_rate(steinberg_series(r.base)).isolating;
  require(r.base_tau.contains(Rational(rank - 2)), ErrorKind::InvariantBreach, "hat system growth rate is not N - 2");
  const LabelCensus base = census(r.base);
  for (long n : ns) {
    SequenceStep st;
    st.n = n;
    st.system = hat_system(rank, n);
    st.chi = euler_characteristic(st.system);
    const FlattenedVerdict v = classify_flattened(st.system, base, n);
    st.tau = v.tau;
    st.verdict = v.verdict;
    st.method = v.method;
    r.steps.push_back(std::move(st));
    r.added_edges.push_back({1, rank, StepRule::HatChord});
  }
  detail::finish_report(r, r.base);
  for (const auto& st : r.steps)
    if (st.tau.low >= Rational(rank - 2)) r.monotone = false;
  return r;
}

/// Growth rates along the flattened sequence, compared with the base rate.
inline SequenceReport convergence_report(const CoxeterSystem& s, const std::vector<long>& ns, double epsilon = 1e-6) {
  detail::require_sequence_base(s);
  const int chi = euler_characteristic(s);
  if (chi == 1 && detail::all_labels_two(s) && s.rank() >= 4 && connectivity_report(s).is_tree) {
    SequenceReport r = hat_system_sequence(s.rank(), ns, epsilon);
    r.base = s;
    const IsolatingInterval own = growth_rate(steinberg_series(s)).isolating;
    require(own.contains(Rational(s.rank() - 2)), ErrorKind::InvariantBreach, "label-2 tree growth rate is not N - 2");
    return r;
  }
  detail::require_schedule(ns, kMinimumSequenceLabel);
  SequenceReport r;
  r.base = s;
  r.epsilon = epsilon;
  r.base_tau = growth_rate(steinberg_series(s)).isolating;
  if (chi == 0) {
    r.pathway = "trivial";
    SequenceStep st;
    st.system = s;
    st.tau = r.base_tau;
    st.verdict = classify_growth_numerator(steinberg_series(s)).headline;
    st.method = "generic";
    r.steps.push_back(std::move(st));
    r.convergence_gap = 0.0;
    r.converged = true;
    return r;
  }
  require(chi > 0, ErrorKind::NotApplicable, "chi must be >= 0");
  r.pathway = "flatten";
  const LabelCensus base = census(s);
  for (long n : ns) {
    const Flattening f = flatten_to_chi_zero(s, n);
    SequenceStep st;
    st.n = n;
    st.system = f.system;
    st.chi = 0;
    const FlattenedVerdict v = classify_flattened(f.system, base, n);
    st.tau = v.tau;
    st.verdict = v.verdict;
    st.method = v.method;
    r.steps.push_back(std::move(st));
    if (r.added_edges.empty()) r.added_edges = f.added;
  }
  detail::finish_report(r, s);
  return r;
}

}  // namespace coxgrowth
