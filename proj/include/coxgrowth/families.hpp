#pragma once

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/algnum.hpp"
#include "coxgrowth/enumerate.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/inclusion.hpp"
#include "coxgrowth/parallel.hpp"

namespace coxgrowth {

enum class FamilyKind { Wheel, Windmill, Friendship, TriangulatedBouquet };

constexpr std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::Windmill: return "windmill";
    case FamilyKind::Friendship: return "friendship";
    case FamilyKind::TriangulatedBouquet: return "bouquet";
  }
  return "wheel";
}

inline FamilyKind family_kind_from_string(std::string_view s) {
  if (s == "wheel") return FamilyKind::Wheel;
  if (s == "windmill") return FamilyKind::Windmill;
  if (s == "friendship") return FamilyKind::Friendship;
  if (s == "bouquet" || s == "triangulated-bouquet") return FamilyKind::TriangulatedBouquet;
  fail(ErrorKind::BadFamily, "unknown family kind '" + std::string(s) + "'");
}

/// size: N for wheels, clique order q for windmills, cycle length for bouquets.
/// copies: l for windmills, friendship graphs and bouquets.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Wheel;
  int size = 0;
  int copies = 0;
  long label = 3;

  static FamilySpec wheel(int n, long k) { return {FamilyKind::Wheel, n, 0, k}; }
  static FamilySpec windmill(int q, int l, long k) { return {FamilyKind::Windmill, q, l, k}; }
  static FamilySpec friendship(int l, long k) { return {FamilyKind::Friendship, 3, l, k}; }
  static FamilySpec bouquet(int cycle_len, int l, long k) { return {FamilyKind::TriangulatedBouquet, cycle_len, l, k}; }

  std::string name() const {
    switch (kind) {
      case FamilyKind::Wheel: return "W(" + std::to_string(size) + ")";
      case FamilyKind::Windmill: return "Wd(" + std::to_string(size) + "," + std::to_string(copies) + ")";
      case FamilyKind::Friendship: return "F(" + std::to_string(copies) + ")";
      case FamilyKind::TriangulatedBouquet: return "T(" + std::to_string(size) + "," + std::to_string(copies) + ")";
    }
    return "";
  }
};

inline void validate_family(const FamilySpec& f) {
  require(f.label >= 3, ErrorKind::BadFamily, "family label must be >= 3");
  switch (f.kind) {
    case FamilyKind::Wheel: require(f.size >= 6, ErrorKind::BadFamily, "wheel needs N >= 6"); break;
    case FamilyKind::Windmill:
      require(f.size >= 3 && f.copies >= 2, ErrorKind::BadFamily, "windmill needs q >= 3 and l >= 2");
      break;
    case FamilyKind::Friendship:
      require(f.size == 3 && f.copies >= 3, ErrorKind::BadFamily, "friendship graph needs l >= 3");
      break;
    case FamilyKind::TriangulatedBouquet:
      require(f.size >= 3 && f.copies >= 1, ErrorKind::BadFamily, "bouquet needs cycle length >= 3 and l >= 1");
      break;
  }
  const long rank = f.kind == FamilyKind::Wheel ? f.size : 1L + static_cast<long>(f.copies) * (f.size - 1);
  require(rank <= 4096, ErrorKind::BadFamily, "family member too large");
}

/// Vertex 1 is the hub in every family.
inline CoxeterSystem generate_family(const FamilySpec& f) {
  validate_family(f);
  const Label k(f.label);
  if (f.kind == FamilyKind::Wheel) {
    const int n = f.size;
    CoxeterSystem s(n);
    for (int v = 2; v <= n; ++v) {
      s.set_label(1, v, k);
      s.set_label(v, v == n ? 2 : v + 1, k);
    }
    return s;
  }
  const int per = f.size - 1;
  const int n = 1 + f.copies * per;
  CoxeterSystem s(n);
  for (int c = 0; c < f.copies; ++c) {
    const int first = 2 + c * per;
    for (int i = 0; i < per; ++i) s.set_label(1, first + i, k);
    if (f.kind == FamilyKind::TriangulatedBouquet) {
      for (int i = 0; i + 1 < per; ++i) s.set_label(first + i, first + i + 1, k);
    } else {
      for (int i = 0; i < per; ++i)
        for (int j = i + 1; j < per; ++j) s.set_label(first + i, first + j, k);
    }
  }
  return s;
}

/// (1 + phi)^2 / 3 = phi + 2/3.
inline double hypothesis_bound() { return (1 + std::sqrt(5.0)) / 2 + 2.0 / 3.0; }

/// a <= phi + 2/3  <=>  6a - 7 <= 3 sqrt 5  <=>  6a - 7 <= 0 or (6a - 7)^2 <= 45.
inline bool within_hypothesis_bound(const Rational& a) {
  const Rational x = 6 * a - 7;
  return x <= 0 || x * x <= 45;
}

struct CircleSample {
  double theta = 0;
  double delta = 0;  // |h_N| - |R_{k,N}| at r* e^{i theta}
};

struct RoucheReport {
  int n = 0;
  long k = 0;
  Rational a;
  double a_bound = 0;
  bool a_above_one = false;
  bool a_within_bound = false;
  bool n_at_least_nine = false;
  double r_star = 0;
  double lambda_a = 0;
  double alpha_k = 0;
  double beta_k = 0;
  double capital_lambda = 0;  // N alpha_k + beta_k
  double alpha_decrement = 0;  // alpha_k - alpha_{k+1} = r*^k (2 - a + (a - 1) r*)
  double alpha_limit = 0;
  double lambda_threshold = 0;  // -lim beta / lim alpha
  double h_lower_bound = 0;     // |1 + (2 - N)(r* + r*^2)|, the small-N branch
  std::vector<CircleSample> circle_samples;
  double min_delta = 0;
  bool all_samples_positive = false;
};

/// Quantities of the Rouche argument at 128-bit precision; diagnostic only.
inline RoucheReport rouche_bound(int n, long k, const Rational& a, int samples = 10000) {
  require(n >= 3 && k >= 3, ErrorKind::NotApplicable, "Rouche bound needs N >= 3 and k >= 3");
  require(a > 1, ErrorKind::NotApplicable, "Rouche bound needs a > 1");
  require(samples >= 1, ErrorKind::ConfigError, "sample count must be positive");
  using R = BigFloat<128>;
  const R sqrt5 = sqrt(R(5));
  const R r = (R(3) - sqrt5) / 2;
  const R am1 = R(a.get_num().get_str()) / R(a.get_den().get_str()) - 1;
  const R av = am1 + 1;
  const R rk = pow(r, static_cast<int>(k));
  const R geo = (1 - rk) / (1 - r);
  RoucheReport rep;
  rep.n = n;
  rep.k = k;
  rep.a = a;
  rep.a_bound = hypothesis_bound();
  rep.a_above_one = a > 1;
  rep.a_within_bound = within_hypothesis_bound(a);
  rep.n_at_least_nine = n >= 9;
  rep.r_star = static_cast<double>(r);
  const R alpha = 1 + 2 * r - geo - am1 * rk;
  const R beta = -3 - 4 * r + 2 * geo + am1 * rk;
  rep.alpha_k = static_cast<double>(alpha);
  rep.beta_k = static_cast<double>(beta);
  rep.capital_lambda = static_cast<double>(R(n) * alpha + beta);
  rep.lambda_a = static_cast<double>((3 - av + am1 * r) / (2 - av + am1 * r));
  rep.alpha_decrement = static_cast<double>(rk * (2 - av + am1 * r));
  const R alpha_lim = 1 + 2 * r - 1 / (1 - r);
  const R beta_lim = -3 - 4 * r + 2 / (1 - r);
  rep.alpha_limit = static_cast<double>(alpha_lim);
  rep.lambda_threshold = static_cast<double>(-beta_lim / alpha_lim);
  rep.h_lower_bound = static_cast<double>(abs(1 + R(2 - n) * (r + r * r)));

  const R two_pi = 2 * boost::math::constants::pi<R>();
  const R coef = R(2 - n);
  const R top = am1 * R(n - 1);
  rep.circle_samples.reserve(static_cast<std::size_t>(samples));
  rep.all_samples_positive = true;
  rep.min_delta = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    const R theta = two_pi * j / samples;
    const Complex<R> z{r * cos(theta), r * sin(theta)};
    const Complex<R> z2 = z * z;
    const Complex<R> h = Complex<R>{1 + coef * (z.re + z2.re), coef * (z.im + z2.im)};
    // R_{k,N} = (2 - N)(z^3 + ... + z^{k-1}) + (a - 1)(N - 1) z^k.
    Complex<R> sum{R(0), R(0)};
    Complex<R> pw = z2;
    for (long e = 3; e <= k - 1; ++e) {
      pw = pw * z;
      sum = sum + pw;
    }
    pw = pw * z;
    const Complex<R> rem{coef * sum.re + top * pw.re, coef * sum.im + top * pw.im};
    const double delta = static_cast<double>(sqrt(h.norm()) - sqrt(rem.norm()));
    rep.circle_samples.push_back({static_cast<double>(theta), delta});
    rep.min_delta = std::min(rep.min_delta, delta);
    if (!(delta > 0)) rep.all_samples_positive = false;
  }
  return rep;
}

struct PerronFamilyReport {
  long k = 0;
  int n = 0;
  int e = 0;
  Rational a;
  std::optional<std::vector<int>> gamma_star_witness;
  bool a_in_range = false;
  bool hypotheses_pass = false;
  RoucheReport rouche;
  NumeratorReport classification;
};

inline long uniform_label(const CoxeterSystem& s) {
  const auto m = s.label_multiset();
  require(!m.empty(), ErrorKind::NotApplicable, "edgeless system has no uniform label");
  require(m.size() == 1, ErrorKind::MixedLabels, "edges carry " + std::to_string(m.size()) + " distinct labels");
  const long k = m.begin()->first;
  require(k >= 3, ErrorKind::MixedLabels, "uniform label must be >= 3");
  return k;
}

inline PerronFamilyReport perron_family_check(const CoxeterSystem& s, int samples = 10000) {
  PerronFamilyReport rep;
  rep.k = uniform_label(s);
  rep.n = s.rank();
  rep.e = s.edge_count();
  require(rep.n >= 3, ErrorKind::NotApplicable, "rank must be >= 3");
  rep.a = make_rational(Integer(rep.e), Integer(rep.n - 1));
  rep.gamma_star_witness = contains_gamma_star(s);
  rep.a_in_range = rep.a > 1 && within_hypothesis_bound(rep.a);
  rep.hypotheses_pass = rep.gamma_star_witness.has_value() && rep.a_in_range;
  if (rep.a > 1) rep.rouche = rouche_bound(rep.n, rep.k, rep.a, samples);
  rep.classification = classify_growth_numerator(steinberg_series(s));
  return rep;
}

struct ScanRecord {
  CoxeterSystem system;
  int chi = 0;
  Verdict headline = Verdict::Indeterminate;
  Verdict perron = Verdict::Indeterminate;
  double tau = 0;
};

struct ScanOptions {
  int max_rank = 4;
  long max_label = 4;
  int min_chi = -1000;
  int max_chi = 1000;
  double orbit_budget = 5e6;
};

struct ScanResult {
  std::vector<ScanRecord> records;  // non-Perron findings first
  std::size_t systems = 0;
  std::size_t distinct_censuses = 0;
  std::size_t non_perron = 0;
};

namespace detail {

inline std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace detail

/// Admissible systems (dimension <= 2, neither spherical nor affine) up to isomorphism.
template <class F>
void for_each_admissible_system(int max_rank, long max_label, int min_chi, int max_chi, F&& visit) {
  std::vector<long> labels;
  for (long k = 2; k <= max_label; ++k) labels.push_back(k);
  for (int n = 3; n <= max_rank; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int e = std::max(0, n - max_chi); e <= std::min(pairs, n - min_chi); ++e)
      for (const auto& g : graphs_with_edges(n, e))
        for_each_labelling(g, labels, [&](const CoxeterSystem& s) {
          if (!dimension_at_most_two(s).at_most_two) return;
          if (classify_sphericity(s).global != Sphericity::Other) return;
          visit(s);
        });
  }
}

/// Growth data depends on the census only, so each census is classified once.
inline ScanResult perron_scan(const ScanOptions& opt) {
  require(opt.max_rank >= 3 && opt.max_rank <= kMaxEnumerationRank, ErrorKind::ScanTooLarge,
          "max rank must lie in 3..8");
  require(opt.max_label >= 2 && opt.max_label <= 7, ErrorKind::ScanTooLarge, "max label must lie in 2..7");
  require(opt.min_chi <= opt.max_chi, ErrorKind::ConfigError, "empty chi range");
  const double est = estimated_orbits(opt.max_rank, static_cast<int>(opt.max_label - 1), opt.min_chi, opt.max_chi);
  require(est <= opt.orbit_budget, ErrorKind::ScanTooLarge,
          "about " + detail::scientific(est) + " systems exceed the scan budget of " + detail::scientific(opt.orbit_budget) +
              "; narrow --chi or the bounds");
  std::vector<CoxeterSystem> systems;
  for_each_admissible_system(opt.max_rank, opt.max_label, opt.min_chi, opt.max_chi,
                             [&](const CoxeterSystem& s) { systems.push_back(s); });
  std::vector<LabelCensus> keys;
  for (const auto& s : systems) keys.push_back(census(s));
  std::vector<LabelCensus> unique = keys;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  struct Cell {
    Verdict headline = Verdict::Indeterminate;
    Verdict perron = Verdict::Indeterminate;
    double tau = 0;
  };
  const auto cells = parallel_map(unique, [](const LabelCensus& c) {
    const auto rep = classify_growth_numerator(series_from_census(c));
    return Cell{rep.headline, rep.perron.verdict, rep.rate.approx};
  });
  ScanResult out;
  out.systems = systems.size();
  out.distinct_censuses = unique.size();
  std::vector<ScanRecord> perron, other;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto it = std::lower_bound(unique.begin(), unique.end(), keys[i]);
    const Cell& c = cells[static_cast<std::size_t>(it - unique.begin())];
    ScanRecord r{systems[i], keys[i].chi(), c.headline, c.perron, c.tau};
    (c.perron == Verdict::Perron ? perron : other).push_back(std::move(r));
  }
  out.non_perron = other.size();
  out.records = std::move(other);
  out.records.insert(out.records.end(), perron.begin(), perron.end());
  return out;
}

}  // namespace coxgrowth
