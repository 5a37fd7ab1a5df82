#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "coxgrowth/enumerate.hpp"
#include "coxgrowth/families.hpp"
#include "coxgrowth/parallel.hpp"
#include "coxgrowth/report.hpp"
#include "coxgrowth/sequences.hpp"
#include "coxgrowth/unit_disk.hpp"

namespace coxgrowth {

struct CriterionResult {
  std::string id;
  std::string name;
  bool passed = false;
  bool documented_deviation = false;  // known disagreement with a stated value, analysed separately
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned precision_bits = 128;
  int property_instances = 500;
  int rouche_samples = 10000;
  std::vector<long> schedule{7, 10, 20, 50, 100, 500, 2000};
  double epsilon = 1e-6;
};

/// Exit status of a verify run: only undocumented failures count.
inline bool verify_ok(const std::vector<CriterionResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed && !r.documented_deviation) return false;
  return true;
}

namespace oracle {

/// Complex roots from the companion matrix, independent of the exact pipeline.
inline std::vector<std::complex<double>> roots(const IntPolynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  const double lead = p.leading().get_d();
  for (int i = 0; i < d; ++i) c(0, i) = -p[static_cast<std::size_t>(d - 1 - i)].get_d() / lead;
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

/// 1/W_T(z) summed over spherical T (empty set, vertices, finite edges) at a rational point.
inline Rational steinberg_sum(const CoxeterSystem& s, const Rational& z) {
  auto block_at = [&](long k) {
    Rational v = 0, pw = 1;
    for (long i = 0; i < k; ++i) {
      v += pw;
      pw *= z;
    }
    return v;
  };
  Rational total = 1;
  total -= Rational(s.rank()) / block_at(2);
  for (const auto& e : s.edges()) total += 1 / (block_at(2) * block_at(e.label));
  return total;
}

/// N(N - 1) words of length two, minus one per commuting pair.
inline Integer length_two_count(const CoxeterSystem& s) {
  long n = s.rank(), c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!s.label(i, j).is_infinite() && s.label(i, j).value() == 2) ++c;
  return Integer(n * (n - 1) - c);
}

}  // namespace oracle

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline bool admissible(const CoxeterSystem& s) {
  return dimension_at_most_two(s).at_most_two && classify_sphericity(s).global == Sphericity::Other;
}

/// Uniform admissible system with rank in [rmin, rmax], chi in [cmin, cmax], labels 2..kmax.
inline CoxeterSystem random_system(std::mt19937_64& rng, int rmin, int rmax, int cmin, int cmax, long kmax) {
  for (;;) {
    const int n = rmin + static_cast<int>(rng() % static_cast<std::uint64_t>(rmax - rmin + 1));
    const int chi = cmin + static_cast<int>(rng() % static_cast<std::uint64_t>(cmax - cmin + 1));
    const int e = n - chi;
    const int pairs = n * (n - 1) / 2;
    if (e < 0 || e > pairs) continue;
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    CoxeterSystem s(n);
    for (int t = 0; t < e; ++t)
      s.set_label(all[static_cast<std::size_t>(t)].first, all[static_cast<std::size_t>(t)].second,
                  Label(2 + static_cast<long>(rng() % static_cast<std::uint64_t>(kmax - 1))));
    if (admissible(s)) return s;
  }
}

/// (2x - 3)^2 against 5: sign of 2x - 3 - sqrt 5, exact.
inline int sign_against_golden_square(const Rational& x) {
  const Rational y = 2 * x - 3;
  if (y < 0) return -1;
  const Rational d = y * y - 5;
  return d < 0 ? -1 : (d > 0 ? 1 : 0);
}

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string failures() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline std::string guarded(const std::function<std::string(Tally&)>& body, Tally& t) {
  try {
    return body(t);
  } catch (const Error& e) {
    t.check(false, std::string("exception: ") + e.what());
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  return {};
}

inline CriterionResult run_criterion(const std::string& id, const std::string& name,
                                     const std::function<std::string(Tally&)>& body) {
  const auto t0 = Clock::now();
  Tally t;
  const std::string detail = guarded(body, t);
  CriterionResult r{id, name, t.ok(), false, detail, seconds_since(t0)};
  if (!t.ok()) r.detail += (r.detail.empty() ? "" : "; ") + std::string("failed: ") + t.failures();
  return r;
}

}  // namespace detail

inline CriterionResult criterion_gamma_star_numerator(const VerifyOptions&) {
  return detail::run_criterion("1", "G* canonical numerator and P(-1) = 0", [](detail::Tally& t) {
    const auto t0 = detail::Clock::now();
    const GrowthSeries gs = steinberg_series(gamma_star());
    const IntPolynomial expected{1, -2, -2, 1};
    t.check(gs.canonical_numerator == expected, "numerator " + gs.canonical_numerator.to_string());
    t.check(gs.canonical_denominator == IntPolynomial{1, 2, 2, 1}, "denominator " + gs.canonical_denominator.to_string());
    Integer at_minus_one = 0;
    for (std::size_t i = 0; i < gs.canonical_numerator.size(); ++i)
      at_minus_one += (i % 2 ? -1 : 1) * gs.canonical_numerator[i];
    t.check(at_minus_one == 0, "P(-1) = " + at_minus_one.get_str());
    const double secs = detail::seconds_since(t0);
    t.check(secs < 1.0, "runtime " + std::to_string(secs) + " s");
    return "P = " + gs.canonical_numerator.to_string() + " over [2,3], P(-1) = " + at_minus_one.get_str();
  });
}

inline CriterionResult criterion_gamma_star_rate(const VerifyOptions& opt) {
  return detail::run_criterion("2", "G* growth rate enclosure and radius flag", [&](detail::Tally& t) {
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;
    const ClassifyReport rep = classify_system(gamma_star(), PerronOptions{opt.precision_bits, 6});
    const IsolatingInterval& iv = rep.classification.rate.isolating;
    t.check(detail::sign_against_golden_square(iv.low) < 0, "low end not below (3+sqrt5)/2");
    t.check(detail::sign_against_golden_square(iv.high) >= 0, "high end below (3+sqrt5)/2");
    const Rational width = iv.high - iv.low;
    t.check(width < Rational(1, 1000000000000), "width " + std::to_string(width.get_d()));
    const R phi = (1 + boost::multiprecision::sqrt(R(5))) / 2;
    const R inv = 1 / (R(iv.midpoint().get_num().get_str()) / R(iv.midpoint().get_den().get_str()));
    const double err = static_cast<double>(boost::multiprecision::abs(inv - (phi - 1) * (phi - 1)));
    t.check(err < 1e-12, "|1/tau - (phi-1)^2| = " + std::to_string(err));
    t.check(rep.classification.headline == Verdict::QuadraticSalem, "verdict");
    bool flagged = false;
    for (const auto& n : rep.notes) flagged = flagged || n == kRadiusNotRateNote;
    t.check(flagged, "radius-vs-rate note missing");
    std::ostringstream os;
    os << "tau in (" << iv.low.get_d() << ", " << iv.high.get_d() << "], width " << width.get_d()
       << ", |1/tau - (phi-1)^2| = " << err << ", report flags 0.381966 as the radius";
    return os.str();
  });
}

inline CriterionResult criterion_chi_zero_salem(const VerifyOptions& opt) {
  return detail::run_criterion("3", "chi = 0, rank <= 6, labels 2..7: Salem-type", [&](detail::Tally& t) {
    const auto t0 = detail::Clock::now();
    std::vector<LabelCensus> keys;
    std::size_t systems = 0;
    for_each_admissible_system(6, 7, 0, 0, [&](const CoxeterSystem& s) {
      ++systems;
      keys.push_back(census(s));
    });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    const PerronOptions po{opt.precision_bits, 6};
    struct Cell {
      Verdict verdict = Verdict::Indeterminate;
      bool numeric_shape = false;
      std::string error;
    };
    const auto cells = parallel_map(keys, [&](const LabelCensus& c) {
      Cell cell;
      try {
        const auto rep = classify_growth_numerator(series_from_census(c), po);
        cell.verdict = rep.headline;
        // Independent shape check: one root outside, one inside, the rest near the circle.
        int outside = 0, inside = 0;
        for (const auto& z : oracle::roots(rep.stripped)) {
          const double m = std::abs(z);
          if (m > 1 + 1e-6) ++outside;
          else if (m < 1 - 1e-6) ++inside;
        }
        cell.numeric_shape = outside == 1 && inside == 1;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      return cell;
    });
    std::size_t quadratic = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      t.check(cells[i].error.empty(), "exception " + cells[i].error);
      t.check(is_salem_type(cells[i].verdict), "verdict " + std::string(to_string(cells[i].verdict)));
      t.check(cells[i].numeric_shape, "companion-matrix root moduli disagree");
      quadratic += cells[i].verdict == Verdict::QuadraticSalem;
    }
    const double secs = detail::seconds_since(t0);
    t.check(secs < 300, "runtime " + std::to_string(secs) + " s");
    return std::to_string(systems) + " systems up to isomorphism, " + std::to_string(keys.size()) +
           " growth censuses, " + std::to_string(quadratic) + " quadratic";
  });
}

inline CriterionResult criterion_chi_positive_pisot(const VerifyOptions& opt) {
  return detail::run_criterion("4", "chi >= 1: edgeless, label-2 trees, random Pisot", [&](detail::Tally& t) {
    const PerronOptions po{opt.precision_bits, 6};
    for (int n = 3; n <= 8; ++n) {
      const auto rep = classify_growth_numerator(steinberg_series(CoxeterSystem(n)), po);
      t.check(rep.headline == Verdict::IntegerPisot, "edgeless " + std::to_string(n));
      t.check(rep.stripped == IntPolynomial{-(n - 1), 1}, "edgeless factor " + rep.stripped.to_string());
      t.check(rep.rate.isolating.contains(Rational(n - 1)), "edgeless tau");
    }
    std::size_t tree_count = 0;
    for (int n = 4; n <= 8; ++n)
      for (const auto& g : trees(n)) {
        CoxeterSystem s(n);
        for (const auto& [i, j] : g.edges()) s.set_label(i + 1, j + 1, Label(2));
        const auto gs = steinberg_series(s);
        const auto rate = growth_rate(gs);
        t.check(gs.numerator().sign_at(Rational(n - 2)) == 0, "tree root N-2");
        t.check(rate.isolating.contains(Rational(n - 2)), "tree tau != N-2 on " + describe(s));
        ++tree_count;
      }
    std::mt19937_64 rng(opt.seed ^ 0x4444u);
    std::vector<CoxeterSystem> sample;
    for (int i = 0; i < 300; ++i) sample.push_back(detail::random_system(rng, 3, 7, 1, 7, 7));
    const auto verdicts = parallel_map(sample, [&](const CoxeterSystem& s) {
      try {
        return classify_growth_numerator(steinberg_series(s), po).headline;
      } catch (const Error&) {
        return Verdict::Indeterminate;
      }
    });
    for (std::size_t i = 0; i < sample.size(); ++i)
      t.check(is_pisot_type(verdicts[i]), describe(sample[i]) + " is " + std::string(to_string(verdicts[i])));
    return "edgeless N = 3..8, " + std::to_string(tree_count) + " label-2 trees, 300 random systems";
  });
}

/// Returns the identity with derived exponents and, as a documented deviation,
/// the stated exponents z^n (chi = 1) and z^{n+1} (chi >= 2).
inline std::pair<CriterionResult, CriterionResult> criterion_bridging(const VerifyOptions& opt) {
  std::size_t literal_holds = 0, total = 0;
  CriterionResult corrected = detail::run_criterion(
      "5", "bridging identity, exponents n+1 (chi = 1) and n (chi >= 2)", [&](detail::Tally& t) {
        std::mt19937_64 rng(opt.seed ^ 0x5555u);
        int drawn = 0;
        while (drawn < 100) {
          const CoxeterSystem s = detail::random_system(rng, 3, 8, 1, 3, 6);
          Flattening probe;
          try {
            probe = flatten_to_chi_zero(s, 7);
          } catch (const Error&) {
            continue;  // all-label-2 trees take the hat pathway instead
          }
          ++drawn;
          const int chi = euler_characteristic(s);
          const IntPolynomial p = base_numerator(census(s));
          const IntPolynomial rev = reciprocal_polynomial(p);
          for (long n : {7L, 11L, 23L}) {
            // P_n straight from the Steinberg series of the flattened system.
            const IntPolynomial pn = steinberg_series(flatten_to_chi_zero(s, n).system).canonical_numerator;
            const IntPolynomial lhs = IntPolynomial{-1, 1} * pn;
            const long m = chi == 1 ? n + 1 : n;
            const long lit = chi == 1 ? n : n + 1;
            t.check(lhs == p.shifted(static_cast<std::size_t>(m)) - rev, describe(s) + " n=" + std::to_string(n));
            literal_holds += lhs == p.shifted(static_cast<std::size_t>(lit)) - rev;
            ++total;
          }
        }
        return std::to_string(total) + " exact identities over 100 systems";
      });
  CriterionResult literal{"5-literal",
                          "bridging identity with exponents n (chi = 1) and n+1 (chi >= 2)",
                          total > 0 && literal_holds == total,
                          true,
                          std::to_string(literal_holds) + "/" + std::to_string(total) +
                              " hold; the exponents are swapped relative to the Steinberg numerators",
                          0};
  return {corrected, literal};
}

inline CriterionResult criterion_convergence(const VerifyOptions& opt) {
  return detail::run_criterion("6", "flattened sequences converge from below", [&](detail::Tally& t) {
    std::mt19937_64 rng(opt.seed ^ 0x6666u);
    std::vector<CoxeterSystem> sample;
    while (sample.size() < 20) {
      const CoxeterSystem s = detail::random_system(rng, 3, 7, 1, 3, 6);
      try {
        (void)flatten_to_chi_zero(s, 7);
      } catch (const Error&) {
        continue;
      }
      sample.push_back(s);
    }
    const auto reports = parallel_map(sample, [&](const CoxeterSystem& s) { return convergence_report(s, opt.schedule, opt.epsilon); });
    double worst = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const auto& r = reports[i];
      const std::string who = describe(sample[i]);
      t.check(r.monotone, who + " not monotone");
      t.check(r.order_chain, who + " order chain");
      t.check(r.convergence_gap >= 0 && r.convergence_gap < opt.epsilon, who + " gap " + std::to_string(r.convergence_gap));
      for (const auto& st : r.steps) t.check(is_salem_type(st.verdict), who + " step " + std::to_string(st.n));
      worst = std::max(worst, r.convergence_gap);
    }
    std::ostringstream os;
    os << "20 systems, schedule up to n = " << opt.schedule.back() << ", largest final gap " << worst;
    return os.str();
  });
}

inline std::vector<FamilySpec> perron_family_grid() {
  std::vector<FamilySpec> g;
  for (long k = 3; k <= 6; ++k) {
    for (int n = 6; n <= 12; ++n) g.push_back(FamilySpec::wheel(n, k));
    for (int l = 2; l <= 5; ++l) g.push_back(FamilySpec::windmill(4, l, k));
    for (int l = 3; l <= 6; ++l) g.push_back(FamilySpec::friendship(l, k));
    g.push_back(FamilySpec::bouquet(5, 3, k));
    g.push_back(FamilySpec::bouquet(6, 3, k));
  }
  return g;
}

inline std::pair<CriterionResult, CriterionResult> criterion_perron_families(const VerifyOptions& opt) {
  CriterionResult grid = detail::run_criterion("7", "family grid: hypotheses exact, passing instances Perron", [&](detail::Tally& t) {
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;
    const auto t0 = detail::Clock::now();
    const auto specs = perron_family_grid();
    const auto reps = parallel_map(specs, [&](const FamilySpec& f) { return perron_family_check(generate_family(f), 64); });
    const R bound = (1 + (1 + boost::multiprecision::sqrt(R(5))) / 2) * (1 + (1 + boost::multiprecision::sqrt(R(5))) / 2) / 3;
    std::size_t passing = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const auto& r = reps[i];
      const R a = R(r.a.get_num().get_str()) / R(r.a.get_den().get_str());
      const bool expected = a > 1 && a <= bound;
      t.check(r.hypotheses_pass == (expected && r.gamma_star_witness.has_value()), specs[i].name() + " hypothesis");
      t.check(r.gamma_star_witness.has_value(), specs[i].name() + " has no G*");
      if (r.hypotheses_pass) {
        ++passing;
        t.check(r.classification.perron.verdict == Verdict::Perron,
                specs[i].name() + " is " + std::string(to_string(r.classification.perron.verdict)));
      }
    }
    const double secs = detail::seconds_since(t0);
    t.check(secs < 600, "runtime " + std::to_string(secs) + " s");
    return std::to_string(specs.size()) + " instances, " + std::to_string(passing) + " pass the hypotheses, all certified Perron";
  });
  // Stated values: T(4,.) has a = 7/3 and fails; bouquet edge count (2c-1)/(c-1) (N-1).
  std::string detail;
  bool stated = true;
  for (int l = 1; l <= 4; ++l) {
    const CoxeterSystem s = generate_family(FamilySpec::bouquet(4, l, 3));
    const Rational a = make_rational(Integer(s.edge_count()), Integer(s.rank() - 1));
    const bool fails = !(a > 1 && within_hypothesis_bound(a));
    stated = stated && a == Rational(7, 3) && fails;
    if (l == 3) detail = "T(4,3) built as described has N = " + std::to_string(s.rank()) + ", E = " + std::to_string(s.edge_count()) +
                         ", a = " + a.get_str() + (fails ? " (fails)" : " (passes the bound)");
  }
  CriterionResult bouquet{"7-bouquet", "T(4,.) fails the hypothesis with a = 7/3", stated, true,
                          detail + "; each glued cycle adds 2c-3 edges, so a = (2c-3)/(c-1), not (2c-1)/(c-1)", 0};
  return {grid, bouquet};
}

inline CriterionResult criterion_rouche(const VerifyOptions& opt) {
  return detail::run_criterion("8", "Rouche limits and circle sampling", [&](detail::Tally& t) {
    const double s5 = std::sqrt(5.0);
    const double alpha_lim = (7 - 3 * s5) / 2;
    const double threshold = (11 + std::sqrt(45.0)) / 2;
    double min_delta = 1e300;
    for (int n = 9; n <= 12; ++n) {
      const auto r = perron_family_check(generate_family(FamilySpec::wheel(n, 3)), opt.rouche_samples);
      t.check(std::abs(r.rouche.alpha_limit - alpha_lim) < 1e-10, "alpha limit " + format_double(r.rouche.alpha_limit, 17));
      t.check(std::abs(r.rouche.lambda_threshold - threshold) < 1e-10, "threshold " + format_double(r.rouche.lambda_threshold, 17));
      t.check(static_cast<int>(r.rouche.circle_samples.size()) == opt.rouche_samples, "sample count");
      t.check(opt.rouche_samples >= 10000, "fewer than 10^4 samples");
      t.check(r.rouche.all_samples_positive, "W" + std::to_string(n) + " min delta " + format_double(r.rouche.min_delta, 6));
      min_delta = std::min(min_delta, r.rouche.min_delta);
    }
    std::ostringstream os;
    os << "lim alpha = (7-3sqrt5)/2, threshold = (11+sqrt45)/2, " << opt.rouche_samples << " angles per wheel, min delta "
       << min_delta;
    return os.str();
  });
}

inline CriterionResult criterion_properties(const VerifyOptions& opt) {
  return detail::run_criterion("9", "property suites", [&](detail::Tally& t) {
    const int count = opt.property_instances;
    t.check(count >= 500, "fewer than 500 instances");
    std::mt19937_64 rng(opt.seed ^ 0x9999u);

    // Steinberg: exact rational evaluation of the subgroup sum, and canonical vs reduced form.
    for (int i = 0; i < count; ++i) {
      const CoxeterSystem s = detail::random_system(rng, 3, 7, -6, 3, 7);
      const GrowthSeries gs = steinberg_series(s);
      t.check(gs.numerator() * gs.canonical_denominator == gs.canonical_numerator * gs.denominator(), "forms " + describe(s));
      for (int k = 0; k < 2; ++k) {
        const Rational z = make_rational(Integer(1 + static_cast<long>(rng() % 9)), Integer(1 + static_cast<long>(rng() % 7)));
        t.check(gs.canonical_numerator.evaluate(z) / gs.canonical_denominator.evaluate(z) == oracle::steinberg_sum(s, z),
                "Steinberg sum " + describe(s));
      }
    }
    // Cyclotomic reconstruction.
    for (int i = 0; i < count; ++i) {
      std::vector<Integer> c(3 + rng() % 5);
      for (auto& v : c) v = Integer(static_cast<long>(rng() % 11) - 5);
      c.front() = Integer(1 + static_cast<long>(rng() % 4));
      c.back() = 1;
      IntPolynomial p(c);
      std::map<long, int> planted;
      for (int f = 0; f < 1 + static_cast<int>(rng() % 3); ++f) {
        const long d = 1 + static_cast<long>(rng() % 12);
        ++planted[d];
        p *= cyclotomic(d);
      }
      const auto sp = strip_cyclotomic_factors(p);
      t.check(sp.reconstruct() == p, "reconstruct");
      for (const auto& [d, m] : planted) {
        int found = 0;
        for (const auto& f : sp.factors) found += f.index == d ? f.multiplicity : 0;
        t.check(found >= m, "missed Phi_" + std::to_string(d));
      }
      for (long d = 1; d <= cyclotomic_index_bound(std::max(1, sp.stripped.degree())); ++d)
        t.check(sp.stripped.degree() < 1 || !divide_exact(sp.stripped, cyclotomic(d)).has_value(),
                "residual Phi_" + std::to_string(d));
    }
    // Sturm and Schur-Cohn on planted roots.
    for (int i = 0; i < count; ++i) {
      IntPolynomial p = IntPolynomial::constant(1);
      int real_in = 0, disk_in = 0;
      const Rational lo(-2), hi(3);
      for (int f = 0; f < 1 + static_cast<int>(rng() % 4); ++f) {
        // Linear factor q z - r with r/q off the unit circle.
        const long q = 1 + static_cast<long>(rng() % 4);
        long r = static_cast<long>(rng() % 17) - 8;
        if (std::abs(r) == q || r == 0) continue;
        const Rational root = make_rational(Integer(r), Integer(q));
        if (p.sign_at(root) == 0) continue;  // keep roots simple
        p *= IntPolynomial{-r, q};
        real_in += root > lo && root <= hi;
        disk_in += abs(root) < 1;
      }
      // Quadratic z^2 + b z + c with complex roots of modulus sqrt(c).
      const long b = static_cast<long>(rng() % 3) - 1, c = 2 + static_cast<long>(rng() % 5);
      p *= IntPolynomial{c, b, 1};
      if (rng() % 2) p *= IntPolynomial{1, 0, 4}, disk_in += 2;  // roots +-i/2
      t.check(sturm_real_roots(p, lo, hi).count == real_in, "Sturm count on " + p.to_string());
      t.check(schur_cohn_inside_count(p) == disk_in, "Schur-Cohn count on " + p.to_string());
      t.check(unit_disk_count_via_half_plane(p) == disk_in, "half-plane count on " + p.to_string());
    }
    // Series coefficients.
    for (int i = 0; i < count; ++i) {
      const CoxeterSystem s = detail::random_system(rng, 3, 7, -6, 3, 7);
      const auto a = series_coefficients(steinberg_series(s), 51);
      t.check(a[0] == 1, "a0");
      t.check(a[1] == s.rank(), "a1");
      t.check(a[2] == oracle::length_two_count(s), "a2 " + describe(s));
      for (const auto& v : a) t.check(v >= 0, "negative coefficient");
    }
    return std::to_string(count) + " seeded instances per suite, " + std::to_string(t.checks()) + " checks";
  });
}

/// Runs every criterion in order; `sink` sees each result as soon as it is known.
inline std::vector<CriterionResult> run_verify(const VerifyOptions& opt,
                                               const std::function<void(const CriterionResult&)>& sink = {}) {
  std::vector<CriterionResult> out;
  auto emit = [&](CriterionResult r) {
    if (sink) sink(r);
    out.push_back(std::move(r));
  };
  emit(criterion_gamma_star_numerator(opt));
  emit(criterion_gamma_star_rate(opt));
  emit(criterion_chi_zero_salem(opt));
  emit(criterion_chi_positive_pisot(opt));
  auto [bridging, literal] = criterion_bridging(opt);
  emit(std::move(bridging));
  emit(std::move(literal));
  emit(criterion_convergence(opt));
  auto [grid, bouquet] = criterion_perron_families(opt);
  emit(std::move(grid));
  emit(std::move(bouquet));
  emit(criterion_rouche(opt));
  emit(criterion_properties(opt));
  return out;
}

inline std::string criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " ("
     << format_double(r.seconds, 3) << " s)";
  if (!r.passed && r.documented_deviation) os << " [documented deviation]";
  return os.str();
}

inline Json verify_to_json(const std::vector<CriterionResult>& rs, const VerifyOptions& opt) {
  Json items = Json::array();
  for (const auto& r : rs)
    items.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"documented_deviation", r.documented_deviation},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
  return Json{{"seed", opt.seed}, {"precision_bits", opt.precision_bits}, {"ok", verify_ok(rs)}, {"criteria", items}};
}

}  // namespace coxgrowth
