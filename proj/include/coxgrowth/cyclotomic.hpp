#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

inline long totient(long n) {
  require(n >= 1, ErrorKind::InvalidBlock, "totient needs n >= 1");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline int mobius(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace detail {

/// In-place multiplication by z^d - 1.
inline void times_binomial(std::vector<Integer>& c, std::size_t d) {
  c.resize(c.size() + d);
  for (std::size_t i = c.size(); i-- > 0;) {
    Integer shifted = i >= d ? c[i - d] : Integer(0);
    c[i] = shifted - c[i];
  }
}

/// In-place exact division by z^d - 1.
inline void divide_binomial(std::vector<Integer>& c, std::size_t d) {
  // c = q (z^d - 1)  =>  q_i = q_{i-d} - c_i.
  const std::size_t nq = c.size() - d;
  std::vector<Integer> q(nq);
  for (std::size_t i = 0; i < nq; ++i) q[i] = (i >= d ? q[i - d] : Integer(0)) - c[i];
  c = std::move(q);
}

inline IntPolynomial compute_cyclotomic(long n) {
  // Phi_n = prod_{d | n} (z^d - 1)^{mu(n/d)}; multiply first so every division is exact.
  std::vector<Integer> c{Integer(1)};
  const auto ds = divisors(n);
  for (long d : ds)
    if (mobius(n / d) == 1) times_binomial(c, static_cast<std::size_t>(d));
  for (long d : ds)
    if (mobius(n / d) == -1) divide_binomial(c, static_cast<std::size_t>(d));
  return IntPolynomial(std::move(c));
}

}  // namespace detail

/// The n-th cyclotomic polynomial; results are memoized process-wide.
inline IntPolynomial cyclotomic(long n) {
  require(n >= 1, ErrorKind::InvalidBlock, "cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<long, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPolynomial phi = detail::compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(phi)).first->second;
}

/// Least B such that every n > B has totient(n) > d, from the lower bound
/// phi(n) > n / (e^gamma ln ln n + 2.50637 / ln ln n), valid for n >= 3.
inline long cyclotomic_index_bound(long d) {
  if (d <= 0) return 2;
  auto lower = [](double n) {
    const double ll = std::log(std::log(n));
    return n / (1.7810724179901979 * ll + 2.50637 / ll);
  };
  // The lower bound is increasing for n >= 30.
  double hi = 64.0;
  while (lower(hi) <= static_cast<double>(d)) hi *= 2.0;
  double lo = 30.0;
  if (lower(lo) > static_cast<double>(d)) return 30;
  while (hi - lo > 1.0) {
    const double mid = std::floor((lo + hi) / 2.0);
    if (lower(mid) > static_cast<double>(d)) hi = mid;
    else lo = mid;
  }
  return static_cast<long>(hi) + 1;
}

struct CyclotomicFactor {
  long index = 0;
  int multiplicity = 0;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct StrippedPolynomial {
  IntPolynomial stripped;
  std::vector<CyclotomicFactor> factors;

  IntPolynomial reconstruct() const {
    IntPolynomial r = stripped;
    for (const auto& f : factors)
      for (int i = 0; i < f.multiplicity; ++i) r *= cyclotomic(f.index);
    return r;
  }
};

namespace detail {

/// Sound rejection filter: false only when p(e^{2 pi i/n}) is provably nonzero.
inline bool may_vanish_at_root_of_unity(const IntPolynomial& p, long n) {
  using R = long double;
  const R angle = 2.0L * 3.14159265358979323846264338327950288L / static_cast<R>(n);
  const std::complex<R> zeta(std::cos(angle), std::sin(angle));
  std::complex<R> acc(0, 0);
  R magnitude = 0;
  const auto c = p.coeffs();
  for (const auto& v : c)
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 900) return true;
  for (std::size_t i = c.size(); i-- > 0;) {
    const R a = static_cast<R>(c[i].get_d());
    acc = acc * zeta + a;
    magnitude += std::fabs(a) * static_cast<R>(i + 1);
  }
  const R u = std::numeric_limits<double>::epsilon();
  const R slack = 64.0L * u * static_cast<R>(c.size() + 4) * magnitude + 1e-300L;
  return std::abs(acc) <= slack;
}

}  // namespace detail

/// Divides out Phi_n for n <= index_bound while it divides p.
/// A negative bound selects the complete default scan for deg p.
inline StrippedPolynomial strip_cyclotomic_factors(const IntPolynomial& p, long index_bound = -1) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "cannot strip the zero polynomial");
  StrippedPolynomial out{p, {}};
  if (index_bound < 0) index_bound = cyclotomic_index_bound(p.degree());
  for (long n = 1; n <= index_bound && out.stripped.degree() >= 1; ++n) {
    const long phi = totient(n);
    if (phi > out.stripped.degree()) continue;
    if (!detail::may_vanish_at_root_of_unity(out.stripped, n)) continue;
    const IntPolynomial phin = cyclotomic(n);
    int mult = 0;
    while (out.stripped.degree() >= phin.degree()) {
      auto q = divide_exact(out.stripped, phin);
      if (!q) break;
      out.stripped = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.push_back({n, mult});
  }
  return out;
}

}  // namespace coxgrowth
