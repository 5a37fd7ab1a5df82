#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/diagram.hpp"
#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/sphericity.hpp"
#include "coxgrowth/sturm.hpp"

namespace coxgrowth {

enum class ChiCase { ChiZero, ChiOne, ChiTwoPlus, EdgelessOrOther };

constexpr std::string_view to_string(ChiCase c) {
  switch (c) {
    case ChiCase::ChiZero: return "ChiZero";
    case ChiCase::ChiOne: return "ChiOne";
    case ChiCase::ChiTwoPlus: return "ChiTwoPlus";
    case ChiCase::EdgelessOrOther: return "EdgelessOrOther";
  }
  return "EdgelessOrOther";
}

/// Data the growth series depends on: rank and the label multiset.
struct LabelCensus {
  int rank = 0;
  std::map<long, int> labels;  // distinct label -> edge count

  int edges() const {
    int e = 0;
    for (const auto& [k, c] : labels) e += c;
    return e;
  }
  int chi() const { return rank - edges(); }
  std::vector<long> distinct() const {
    std::vector<long> out;
    for (const auto& [k, c] : labels) out.push_back(k);
    return out;
  }
  friend auto operator<=>(const LabelCensus&, const LabelCensus&) = default;
};

inline LabelCensus census(const CoxeterSystem& s) { return {s.rank(), s.label_multiset()}; }

/// 1/f(z^{-1}) in canonical (block denominator) and reduced forms.
struct GrowthSeries {
  LabelCensus census;
  IntPolynomial canonical_numerator;
  IntPolynomial canonical_denominator;  // [2, k_1, ..., k_r] over distinct labels
  RationalFunction inverse_form = RationalFunction::from_coprime(IntPolynomial{1}, IntPolynomial{1});
  ChiCase chi_case = ChiCase::EdgelessOrOther;

  const IntPolynomial& numerator() const { return inverse_form.numerator(); }
  const IntPolynomial& denominator() const { return inverse_form.denominator(); }
  int chi() const { return census.chi(); }
};

inline ChiCase chi_case_of(const LabelCensus& c) {
  if (c.edges() == 0) return ChiCase::EdgelessOrOther;
  switch (c.chi()) {
    case 0: return ChiCase::ChiZero;
    case 1: return ChiCase::ChiOne;
    default: return c.chi() >= 2 ? ChiCase::ChiTwoPlus : ChiCase::EdgelessOrOther;
  }
}

namespace detail {

/// [k_1, ..., k_r] with the block at position skip omitted or shortened by one.
inline IntPolynomial blocks_except(const std::vector<long>& ks, std::size_t at, long delta_or_skip) {
  IntPolynomial r{1};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i != at) {
      r = r.times_block(static_cast<std::size_t>(ks[i]));
    } else if (delta_or_skip > 0) {
      r = r.times_block(static_cast<std::size_t>(ks[i] - delta_or_skip));
    }
  }
  return r;
}

/// Divides the numerator by every cyclotomic factor it shares with the block denominator.
inline RationalFunction reduce_against_blocks(const IntPolynomial& num, const std::vector<long>& blocks) {
  std::map<long, int> multiplicity;  // Phi_d exponent in the denominator
  for (long m : blocks)
    for (long d : divisors(m))
      if (d >= 2) ++multiplicity[d];
  IntPolynomial n = num;
  IntPolynomial den{1};
  for (long m : blocks) den = den.times_block(static_cast<std::size_t>(m));
  for (const auto& [d, mult] : multiplicity) {
    const IntPolynomial phi = cyclotomic(d);
    for (int i = 0; i < mult; ++i) {
      auto q = divide_exact(n, phi);
      if (!q) break;
      n = std::move(*q);
      den = *divide_exact(den, phi);
    }
  }
  return RationalFunction::from_coprime(std::move(n), std::move(den));
}

}  // namespace detail

/// Canonical numerator [2,K] - N[K] + sum E_i [K without k_i] for any census.
inline IntPolynomial canonical_numerator(const LabelCensus& c) {
  const std::vector<long> ks = c.distinct();
  IntPolynomial kb = block_product(ks);
  IntPolynomial num = kb.times_block(2) - kb * Integer(c.rank);
  std::size_t i = 0;
  for (const auto& [k, e] : c.labels) num += detail::blocks_except(ks, i++, 0) * Integer(e);
  return num;
}

inline IntPolynomial canonical_denominator(const LabelCensus& c) {
  std::vector<long> bs{2};
  for (long k : c.distinct()) bs.push_back(k);
  return block_product(bs);
}

/// Growth series from the census alone, skipping hypothesis checks.
inline GrowthSeries series_from_census(const LabelCensus& c) {
  GrowthSeries gs;
  gs.census = c;
  gs.canonical_numerator = canonical_numerator(c);
  gs.canonical_denominator = canonical_denominator(c);
  std::vector<long> bs{2};
  for (long k : c.distinct()) bs.push_back(k);
  gs.inverse_form = detail::reduce_against_blocks(gs.canonical_numerator, bs);
  gs.chi_case = chi_case_of(c);
  return gs;
}

/// Rejects systems outside the scope of the growth pipeline.
inline void require_growth_hypotheses(const CoxeterSystem& s) {
  const auto dim = dimension_at_most_two(s);
  if (!dim.at_most_two) {
    const auto& w = *dim.witness;
    fail(ErrorKind::DimensionTooHigh, "rank-3 spherical parabolic on {" + std::to_string(w[0]) + "," +
                                          std::to_string(w[1]) + "," + std::to_string(w[2]) +
                                          "}: dimension >= 3");
  }
  const auto sph = classify_sphericity(s);
  if (sph.global != Sphericity::Other)
    fail(ErrorKind::NotApplicable, "system is " + std::string(to_string(sph.global)));
}

inline GrowthSeries steinberg_series(const CoxeterSystem& s) {
  require_growth_hypotheses(s);
  return series_from_census(census(s));
}

/// 1 - N/[2] + sum E_i/[2,k_i] assembled term by term over the full denominator.
inline bool steinberg_identity_holds(const GrowthSeries& gs) {
  const auto& c = gs.census;
  const IntPolynomial D = gs.canonical_denominator;
  const IntPolynomial b2 = block(2);
  IntPolynomial direct = D - *divide_exact(D, b2) * Integer(c.rank);
  for (const auto& [k, e] : c.labels) direct += *divide_exact(D, b2 * block(k)) * Integer(e);
  return direct == gs.canonical_numerator && gs.inverse_form.equals(gs.canonical_numerator, D);
}

/// Numerator over [2, K] when chi = 0, cross-checked through the (z - 1)^r form.
inline IntPolynomial chi_zero_numerator(const CoxeterSystem& s) {
  require(euler_characteristic(s) == 0, ErrorKind::WrongChi, "chi must be 0");
  const GrowthSeries gs = steinberg_series(s);
  // (z - 1)^r P = (z + 1) prod (z^k - 1) + sum E_i (z - z^{k_i}) prod_{j != i} (z^{k_j} - 1).
  const std::vector<long> ks = gs.census.distinct();
  IntPolynomial all{1};
  for (long k : ks) all *= IntPolynomial::z_pow_minus_one(static_cast<std::size_t>(k));
  IntPolynomial rhs = IntPolynomial{1, 1} * all;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    IntPolynomial others{1};
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (j != i) others *= IntPolynomial::z_pow_minus_one(static_cast<std::size_t>(ks[j]));
    IntPolynomial lin = IntPolynomial{0, 1} - IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(ks[i]));
    rhs += lin * others * Integer(gs.census.labels.at(ks[i]));
  }
  IntPolynomial p = rhs;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto q = divide_exact(p, IntPolynomial{-1, 1});
    require(q.has_value(), ErrorKind::InvariantBreach, "(z - 1)^r does not divide the chi-zero form");
    p = std::move(*q);
  }
  require(p == gs.canonical_numerator, ErrorKind::InvariantBreach, "chi-zero numerator disagrees with Steinberg");
  return p;
}

/// The chi = 1 / chi >= 2 polynomial P (the chi = 1 canonical numerator is z P).
inline IntPolynomial chi_positive_from_census(const LabelCensus& c) {
  const int chi = c.chi();
  require(chi >= 1, ErrorKind::WrongChi, "chi must be >= 1, got " + std::to_string(chi));
  require(c.edges() > 0, ErrorKind::Edgeless, "edgeless systems have the closed form (z - (N - 1))/[2]");
  const std::vector<long> ks = c.distinct();
  const IntPolynomial kb = block_product(ks);
  IntPolynomial p;
  if (chi == 1) {
    p = kb;
    std::size_t i = 0;
    for (const auto& [k, e] : c.labels) p -= detail::blocks_except(ks, i++, 1) * Integer(e);
  } else {
    p = kb.times_block(2) - kb * Integer(chi);
    std::size_t i = 0;
    for (const auto& [k, e] : c.labels) p -= detail::blocks_except(ks, i++, 1).shifted(1) * Integer(e);
  }
  return p;
}

inline IntPolynomial chi_positive_numerator(const CoxeterSystem& s) {
  const int chi = euler_characteristic(s);
  require(chi >= 1, ErrorKind::WrongChi, "chi must be >= 1, got " + std::to_string(chi));
  require(s.edge_count() > 0, ErrorKind::Edgeless, "edgeless systems have the closed form (z - (N - 1))/[2]");
  const GrowthSeries gs = steinberg_series(s);
  const IntPolynomial p = chi_positive_from_census(gs.census);
  const IntPolynomial expected = chi == 1 ? p.shifted(1) : p;
  require(gs.inverse_form.equals(expected, gs.canonical_denominator), ErrorKind::InvariantBreach,
          "chi-positive numerator disagrees with Steinberg");
  const Integer p0 = p.coeff(0);
  require(p0 == (chi == 1 ? 1 - gs.census.edges() : 1 - chi), ErrorKind::InvariantBreach, "unexpected P(0)");
  if (s.rank() >= 3) require(p.evaluate(Integer(1)) < 0, ErrorKind::InvariantBreach, "expected P(1) < 0");
  return p;
}

struct GrowthRate {
  IsolatingInterval isolating;           // tau on the squarefree reduced numerator
  IntPolynomial minimal_candidate;       // cyclotomic-free factor holding tau
  double approx = 0.0;
  IsolatingInterval radius;              // holds 1/tau in [low, high)
};

inline GrowthRate growth_rate_of(const IntPolynomial& reduced_numerator, const Rational& width) {
  const IntPolynomial p = reduced_numerator.without_z_factors();
  auto iv = largest_real_root(p, width);
  if (!iv || iv->high < 1)
    fail(ErrorKind::ClassificationAnomaly, "no real root >= 1 in " + reduced_numerator.to_string());
  GrowthRate g;
  g.isolating = *iv;
  if (g.isolating.low < 1 && p.evaluate(Integer(1)) != 0) g.isolating.low = 1;
  const IntPolynomial sf = squarefree_part(p);
  g.minimal_candidate = squarefree_part(strip_cyclotomic_factors(sf).stripped);
  g.approx = g.isolating.approx();
  Rational rl = 1 / g.isolating.high;
  Rational rh = g.isolating.low > 0 ? Rational(1 / g.isolating.low) : Rational(1);
  g.radius = {rl, rh, true};
  return g;
}

inline GrowthRate growth_rate(const GrowthSeries& gs, const Rational& width = default_isolation_width()) {
  return growth_rate_of(gs.numerator(), width);
}

/// Taylor coefficients a_0..a_{count-1} of f(z) = Q~(z)/P~(z).
inline std::vector<Integer> series_coefficients(const GrowthSeries& gs, std::size_t count) {
  require(count >= 1, ErrorKind::ZeroInput, "count must be >= 1");
  const IntPolynomial& P = gs.numerator();
  const IntPolynomial& Q = gs.denominator();
  require(P.degree() == Q.degree(), ErrorKind::SeriesAnomaly, "numerator and denominator degrees differ");
  const IntPolynomial A = reciprocal_polynomial(P);
  const IntPolynomial B = reciprocal_polynomial(Q);
  require(A.coeff(0) == 1, ErrorKind::SeriesAnomaly, "reversed numerator must start with 1");
  std::vector<Integer> a(count);
  for (std::size_t l = 0; l < count; ++l) {
    Integer v = B.coeff(l);
    const std::size_t top = std::min(l, A.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) v -= A[j] * a[l - j];
    if (v < 0) fail(ErrorKind::SeriesAnomaly, "negative coefficient a_" + std::to_string(l));
    a[l] = v;
  }
  return a;
}

/// N(N - 1) minus the number of commuting pairs.
inline Integer expected_a2(const CoxeterSystem& s) {
  const long n = s.rank();
  long commuting = 0;
  for (const auto& e : s.edges()) commuting += e.label == 2 ? 1 : 0;
  return Integer(n * (n - 1) - commuting);
}

}  // namespace coxgrowth
