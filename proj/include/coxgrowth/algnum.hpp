#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/inclusion.hpp"
#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/sturm.hpp"
#include "coxgrowth/unit_disk.hpp"

namespace coxgrowth {

enum class Verdict {
  Salem,
  QuadraticSalem,
  Pisot,
  IntegerPisot,
  Perron,
  NotSalem,
  NotPisot,
  NotPerron,
  Indeterminate,
};

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Salem: return "Salem";
    case Verdict::QuadraticSalem: return "QuadraticSalem";
    case Verdict::Pisot: return "Pisot";
    case Verdict::IntegerPisot: return "IntegerPisot";
    case Verdict::Perron: return "Perron";
    case Verdict::NotSalem: return "NotSalem";
    case Verdict::NotPisot: return "NotPisot";
    case Verdict::NotPerron: return "NotPerron";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

inline bool is_salem_type(Verdict v) { return v == Verdict::Salem || v == Verdict::QuadraticSalem; }
inline bool is_pisot_type(Verdict v) { return v == Verdict::Pisot || v == Verdict::IntegerPisot; }

struct SalemCertificate {
  bool reciprocal = false;
  int degree = 0;
  IntPolynomial trace_polynomial;  // q(z + 1/z) = z^{-d} p(z)
  int roots_above_two = 0;
  int roots_in_band = 0;           // roots of q in [-2, 2]
};

struct PisotCertificate {
  int roots_above_one = 0;
  std::optional<int> inside_count;  // empty when a unit-circle root was met
  bool circle_root = false;
};

struct InclusionDisk {
  double re = 0;
  double im = 0;
  double radius = 0;
};

struct PerronCertificate {
  std::string method;  // "degree-one", "inclusion-disks", "exact-radius-count"
  unsigned precision_bits = 0;
  Rational tau_low;
  double max_other_modulus = 0;  // upper bound over the non-dominant disks
  double gap = 0;                // tau_low minus that bound
  std::vector<InclusionDisk> disks;
  std::optional<int> inside_tau_low;
  std::string witness;  // for NotPerron
};

struct AlgebraicClassification {
  Verdict verdict = Verdict::Indeterminate;
  IntPolynomial stripped_factor;
  std::vector<CyclotomicFactor> cyclotomic_factors;
  std::optional<IsolatingInterval> tau;
  std::optional<SalemCertificate> salem;
  std::optional<PisotCertificate> pisot;
  std::optional<PerronCertificate> perron;
  std::string note;
};

namespace detail {

inline void require_monic_squarefree(const IntPolynomial& p) {
  require(!p.is_zero() && p.degree() >= 1, ErrorKind::ZeroInput, "classification needs a nonconstant polynomial");
  require(p.is_monic(), ErrorKind::NotMonic, p.to_string() + " is not monic");
  require(is_squarefree(p), ErrorKind::NotSquarefree, p.to_string() + " is not squarefree");
}

}  // namespace detail

/// q with z^{-d} p(z) = q(z + 1/z) for a palindromic p of degree 2d.
inline IntPolynomial trace_polynomial(const IntPolynomial& p) {
  require(p.degree() % 2 == 0 && is_reciprocal(p), ErrorKind::NotApplicable, "needs an even palindromic input");
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
  // Dickson recursion D_0 = 2, D_1 = w, D_j = w D_{j-1} - D_{j-2}.
  IntPolynomial q = IntPolynomial::constant(p[d]);
  IntPolynomial prev{2};
  IntPolynomial cur{0, 1};
  for (std::size_t j = 1; j <= d; ++j) {
    q += cur * p[d + j];
    IntPolynomial next = cur.shifted(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

inline AlgebraicClassification classify_salem(const IntPolynomial& p) {
  detail::require_monic_squarefree(p);
  AlgebraicClassification r;
  r.stripped_factor = p;
  SalemCertificate cert;
  cert.degree = p.degree();
  cert.reciprocal = is_reciprocal(p);
  r.verdict = Verdict::NotSalem;
  if (!cert.reciprocal) {
    r.note = "not reciprocal";
  } else if (p.degree() % 2 == 1) {
    r.note = "odd reciprocal degree forces the root -1";
  } else if (p.degree() == 2) {
    // z^2 + c z + 1 with -c > 2 has roots tau > 1 and 1/tau.
    if (-p[1] > 2) {
      r.verdict = Verdict::QuadraticSalem;
      r.note = "reciprocal quadratic: degree below the strict Salem minimum of 4";
      r.tau = largest_real_root(p);
      cert.trace_polynomial = trace_polynomial(p);
      cert.roots_above_two = 1;
    } else {
      r.note = "reciprocal quadratic without a real root above 1";
    }
  } else {
    const IntPolynomial q = trace_polynomial(p);
    cert.trace_polynomial = q;
    const IntPolynomial qs = squarefree_part(q);
    const RealRootCounter counter(qs);
    cert.roots_above_two = counter.count_above(Rational(2));
    cert.roots_in_band = counter.count(Rational(-2), Rational(2)) + (qs.sign_at(Rational(-2)) == 0 ? 1 : 0);
    const int d = p.degree() / 2;
    if (qs.degree() == d && cert.roots_above_two == 1 && cert.roots_in_band == d - 1) {
      r.verdict = Verdict::Salem;
      r.tau = largest_real_root(p);
    } else {
      r.note = "trace polynomial has " + std::to_string(cert.roots_above_two) + " roots above 2 and " +
               std::to_string(cert.roots_in_band) + " in [-2, 2], expected 1 and " + std::to_string(d - 1);
    }
  }
  r.salem = cert;
  return r;
}

inline AlgebraicClassification classify_pisot(const IntPolynomial& p) {
  detail::require_monic_squarefree(p);
  AlgebraicClassification r;
  r.stripped_factor = p;
  PisotCertificate cert;
  r.verdict = Verdict::NotPisot;
  if (p.degree() == 1) {
    const Integer root = -p[0];
    cert.roots_above_one = root > 1 ? 1 : 0;
    cert.inside_count = 0;
    if (root >= 2) {
      r.verdict = Verdict::IntegerPisot;
      r.tau = IsolatingInterval{Rational(root - 1), Rational(root), true};
    } else {
      r.note = "integer root below 2";
    }
    r.pisot = cert;
    return r;
  }
  const RealRootCounter counter(p);
  cert.roots_above_one = counter.count_above(Rational(1));
  try {
    cert.inside_count = schur_cohn_inside_count(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OnCircleOrDegenerate) throw;
    cert.circle_root = true;
    r.note = "root on the unit circle";
  }
  if (cert.roots_above_one == 1 && cert.inside_count && *cert.inside_count == p.degree() - 1) {
    r.verdict = Verdict::Pisot;
    r.tau = largest_real_root(p);
  } else if (r.note.empty()) {
    r.note = std::to_string(cert.roots_above_one) + " real roots above 1 and " +
             (cert.inside_count ? std::to_string(*cert.inside_count) : std::string("?")) +
             " roots inside the unit disk";
  }
  r.pisot = cert;
  return r;
}

struct PerronOptions {
  unsigned start_bits = 64;  // first rung of 64 -> 128 -> 256 -> 512
  int exact_refinements = 6;
};

namespace detail {

enum class DiskOutcome { Certified, Refuted, Inconclusive };

template <unsigned Bits>
DiskOutcome perron_by_disks(const IntPolynomial& p, const IsolatingInterval& tau, PerronCertificate& cert) {
  const AberthResult roots = aberth_roots<Bits>(p);
  const auto radii = inclusion_radii_squared(p, roots.centers);
  if (!radii) return DiskOutcome::Inconclusive;
  const std::size_t n = roots.centers.size();
  const Rational mid = tau.midpoint();
  std::size_t ti = 0;
  Rational best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex<Rational> d{roots.centers[i].re - mid, roots.centers[i].im};
    const Rational m = d.norm();
    if (best < 0 || m < best) {
      best = m;
      ti = i;
    }
  }
  cert.precision_bits = Bits;
  cert.tau_low = tau.low;
  cert.disks.clear();
  for (std::size_t i = 0; i < n; ++i)
    cert.disks.push_back({roots.approx[i].first, roots.approx[i].second, std::sqrt((*radii)[i].get_d())});
  auto isolated = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (!sum_of_roots_below((*radii)[i], (*radii)[j], (roots.centers[i] - roots.centers[j]).norm())) return false;
    }
    return true;
  };
  const Rational low2 = tau.low * tau.low;
  const Rational high2 = tau.high * tau.high;
  bool all_below = isolated(ti);
  double worst = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == ti) continue;
    const Rational c2 = roots.centers[j].norm();
    worst = std::max(worst, std::sqrt(c2.get_d()) + std::sqrt((*radii)[j].get_d()));
    if (!sum_of_roots_below(c2, (*radii)[j], low2)) all_below = false;
    if (difference_of_roots_above(c2, (*radii)[j], high2) && isolated(j)) {
      cert.witness = "isolated inclusion disk around (" + std::to_string(roots.approx[j].first) + ", " +
                     std::to_string(roots.approx[j].second) + ") lies beyond |z| = tau";
      return DiskOutcome::Refuted;
    }
  }
  cert.max_other_modulus = worst;
  cert.gap = tau.low.get_d() - worst;
  if (all_below) {
    cert.method = "inclusion-disks";
    return DiskOutcome::Certified;
  }
  return DiskOutcome::Inconclusive;
}

template <unsigned Bits>
DiskOutcome perron_rung_if(unsigned start, const IntPolynomial& p, const IsolatingInterval& tau,
                           PerronCertificate& cert) {
  if (Bits < start) return DiskOutcome::Inconclusive;
  return perron_by_disks<Bits>(p, tau, cert);
}

}  // namespace detail

/// Checks that tau isolates the largest real root of p and that it exceeds 1.
inline IsolatingInterval validate_tau_interval(const IntPolynomial& p, IsolatingInterval tau) {
  require(tau.low < tau.high, ErrorKind::BadIsolation, "empty tau interval");
  const RealRootCounter counter(p);
  require(counter.count(tau.low, tau.high) == 1, ErrorKind::BadIsolation, "interval does not isolate one root");
  require(counter.count_above(tau.high) == 0, ErrorKind::BadIsolation, "a real root lies above the interval");
  if (tau.low < 1) {
    require(tau.high > 1 && counter.count(Rational(1), tau.high) == 1, ErrorKind::BadIsolation,
            "the isolated root does not exceed 1");
    tau.low = 1;
  }
  return tau;
}

inline AlgebraicClassification classify_perron(const IntPolynomial& p, const IsolatingInterval& tau_in,
                                               const PerronOptions& opt = {}) {
  detail::require_monic_squarefree(p);
  AlgebraicClassification r;
  r.stripped_factor = p;
  IsolatingInterval tau = validate_tau_interval(p, tau_in);
  r.tau = tau;
  PerronCertificate cert;
  if (p.degree() == 1) {
    cert.method = "degree-one";
    cert.tau_low = tau.low;
    r.verdict = Verdict::Perron;
    r.perron = cert;
    return r;
  }
  // Precision ladder: stop at the first decisive rung.
  detail::DiskOutcome outcome = detail::perron_rung_if<64>(opt.start_bits, p, tau, cert);
  if (outcome == detail::DiskOutcome::Inconclusive) outcome = detail::perron_rung_if<128>(opt.start_bits, p, tau, cert);
  if (outcome == detail::DiskOutcome::Inconclusive) outcome = detail::perron_rung_if<256>(opt.start_bits, p, tau, cert);
  if (outcome == detail::DiskOutcome::Inconclusive) outcome = detail::perron_rung_if<512>(opt.start_bits, p, tau, cert);
  if (outcome == detail::DiskOutcome::Certified) {
    r.verdict = Verdict::Perron;
    r.perron = cert;
    return r;
  }
  if (outcome == detail::DiskOutcome::Refuted) {
    r.verdict = Verdict::NotPerron;
    r.perron = cert;
    return r;
  }
  // Exact fallback: count roots strictly inside |z| < tau.low and |z| < tau.high.
  const int n = p.degree();
  for (int attempt = 0; attempt <= opt.exact_refinements; ++attempt) {
    try {
      const int below = inside_radius_count(p, tau.low);
      cert.inside_tau_low = below;
      if (below == n - 1) {
        cert.method = "exact-radius-count";
        cert.tau_low = tau.low;
        r.verdict = Verdict::Perron;
        r.tau = tau;
        r.perron = cert;
        return r;
      }
      // Any radius above tau works; step past a rational tau sitting on the endpoint.
      const Rational above = p.sign_at(tau.high) != 0 ? tau.high : tau.high + tau.width();
      if (inside_radius_count(p, above) < n) {
        cert.method = "exact-radius-count";
        cert.witness = "a root other than tau has modulus >= tau";
        r.verdict = Verdict::NotPerron;
        r.perron = cert;
        return r;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OnCircleOrDegenerate) throw;
    }
    tau = refine_interval(p, tau, tau.width() / Rational(Integer(1) << 32));
  }
  r.verdict = Verdict::Indeterminate;
  r.note = "modulus comparison stayed ambiguous; an equal-modulus conjugate is likely";
  r.perron = cert;
  return r;
}

/// Everything the pipeline concludes about one growth series.
struct NumeratorReport {
  Verdict headline = Verdict::Indeterminate;
  int chi = 0;
  IntPolynomial stripped;  // canonical numerator without z powers and cyclotomic factors
  std::vector<CyclotomicFactor> cyclotomic_factors;
  GrowthRate rate;
  std::optional<AlgebraicClassification> salem;
  std::optional<AlgebraicClassification> pisot;
  AlgebraicClassification perron;
};

inline NumeratorReport classify_growth_numerator(const GrowthSeries& gs, const PerronOptions& opt = {}) {
  NumeratorReport rep;
  rep.chi = gs.chi();
  rep.rate = growth_rate(gs);
  const auto strip = strip_cyclotomic_factors(gs.canonical_numerator.without_z_factors());
  rep.stripped = squarefree_part(strip.stripped);
  rep.cyclotomic_factors = strip.factors;
  if (rep.stripped.degree() < 1)
    fail(ErrorKind::ClassificationAnomaly, "numerator is entirely cyclotomic: " + gs.canonical_numerator.to_string());
  // tau is a root of the stripped factor.
  const IsolatingInterval& tau = rep.rate.isolating;
  const int sl = rep.stripped.sign_at(tau.low);
  const int sh = rep.stripped.sign_at(tau.high);
  if (!(sh == 0 || sl * sh < 0))
    fail(ErrorKind::ClassificationAnomaly, "cyclotomic stripping removed the factor holding tau");
  auto decorate = [&](AlgebraicClassification c) {
    c.cyclotomic_factors = strip.factors;
    if (!c.tau) c.tau = tau;
    return c;
  };
  rep.perron = decorate(classify_perron(rep.stripped, tau, opt));
  if (rep.chi == 0) {
    rep.salem = decorate(classify_salem(rep.stripped));
    if (rep.salem->verdict == Verdict::QuadraticSalem) rep.pisot = decorate(classify_pisot(rep.stripped));
    rep.headline = rep.salem->verdict;
  } else if (rep.chi >= 1) {
    rep.pisot = decorate(classify_pisot(rep.stripped));
    rep.headline = rep.pisot->verdict;
  } else {
    rep.headline = rep.perron.verdict;
  }
  if ((rep.salem && is_salem_type(rep.salem->verdict)) || (rep.pisot && is_pisot_type(rep.pisot->verdict))) {
    if (rep.perron.verdict != Verdict::Perron)
      fail(ErrorKind::ClassificationAnomaly, "Salem/Pisot verdict without a Perron certificate");
  }
  return rep;
}

}  // namespace coxgrowth
