#pragma once

#include <optional>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

/// Exactly one real root of the referenced polynomial lies in (low, high].
struct IsolatingInterval {
  Rational low;
  Rational high;
  bool multiplicity_one = true;

  Rational width() const { return high - low; }
  Rational midpoint() const { return (low + high) / 2; }
  double approx() const { return midpoint().get_d(); }
  bool contains(const Rational& x) const { return low < x && x <= high; }
};

/// Remainder chain s0 = a, s1 = b, s_{k+1} = -rem(s_{k-1}, s_k), each term
/// scaled by a positive rational so that signs are preserved.
class SturmChain {
 public:
  SturmChain(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return;
    chain_.push_back(a.primitive_part() * Integer(sgn(a.leading())));
    if (b.is_zero()) return;
    chain_.push_back(b.primitive_part() * Integer(sgn(b.leading())));
    while (true) {
      const IntPolynomial& x = chain_[chain_.size() - 2];
      const IntPolynomial& y = chain_.back();
      auto [r, mult_sign] = pseudo_remainder(x, y);
      if (r.is_zero()) break;
      // prem = m * rem with sign(m) = mult_sign; we need -rem up to a positive factor.
      const Integer c = r.content();
      IntPolynomial next = *divide_exact(r, IntPolynomial::constant(c));
      if (mult_sign > 0) next = -next;
      chain_.push_back(std::move(next));
    }
  }

  /// Standard chain p, p' for root counting.
  static SturmChain for_roots(const IntPolynomial& p) { return SturmChain(p, p.derivative()); }

  const std::vector<IntPolynomial>& terms() const noexcept { return chain_; }

  int variations_at(const Rational& x) const {
    return count_variations([&](const IntPolynomial& s) { return s.sign_at(x); });
  }
  int variations_at_plus_infinity() const {
    return count_variations([](const IntPolynomial& s) { return s.sign_at_plus_infinity(); });
  }
  int variations_at_minus_infinity() const {
    return count_variations([](const IntPolynomial& s) { return s.sign_at_minus_infinity(); });
  }

 private:
  template <class SignFn>
  int count_variations(SignFn sign) const {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int v = sign(s);
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  }

  std::vector<IntPolynomial> chain_;
};

/// Counts real roots of a squarefree polynomial in (low, high].
class RealRootCounter {
 public:
  explicit RealRootCounter(const IntPolynomial& squarefree)
      : p_(squarefree), chain_(SturmChain::for_roots(squarefree)) {
    require(!p_.is_zero(), ErrorKind::ZeroInput, "root counting on the zero polynomial");
  }

  const IntPolynomial& polynomial() const noexcept { return p_; }

  int count(const Rational& low, const Rational& high) const {
    return chain_.variations_at(low) - chain_.variations_at(high);
  }
  int count_above(const Rational& low) const {
    return chain_.variations_at(low) - chain_.variations_at_plus_infinity();
  }
  int count_below_or_at(const Rational& high) const {
    return chain_.variations_at_minus_infinity() - chain_.variations_at(high);
  }
  int count_all() const {
    return chain_.variations_at_minus_infinity() - chain_.variations_at_plus_infinity();
  }

 private:
  IntPolynomial p_;
  SturmChain chain_;
};

inline Rational default_isolation_width() {
  Rational w(1);
  w /= Rational(Integer(1) << 64);
  return w;
}

/// Shrinks an isolating interval of a simple root by sign bisection.
inline IsolatingInterval refine_interval(const IntPolynomial& p, IsolatingInterval iv, const Rational& width) {
  int s_high = p.sign_at(iv.high);
  if (s_high == 0) {
    if (iv.width() > width) iv.low = iv.high - width / 2;
    return iv;
  }
  while (iv.width() > width) {
    const Rational mid = iv.midpoint();
    const int sm = p.sign_at(mid);
    if (sm == 0) {
      iv.high = mid;
      iv.low = mid - width / 2;
      return iv;
    }
    if (sm != s_high) {
      iv.low = mid;
    } else {
      iv.high = mid;
    }
  }
  return iv;
}

struct RealRootIsolation {
  int count = 0;
  std::vector<IsolatingInterval> intervals;  // ascending
};

namespace detail {

inline void isolate_recursive(const RealRootCounter& counter, const Rational& low, const Rational& high, int n,
                              std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back({low, high, true});
    return;
  }
  const Rational mid = (low + high) / 2;
  const int left = counter.count(low, mid);
  isolate_recursive(counter, low, mid, left, out);
  isolate_recursive(counter, mid, high, n - left, out);
}

}  // namespace detail

/// Real roots in (low, high], each isolated then refined to the given width.
inline RealRootIsolation sturm_real_roots(const IntPolynomial& p, const Rational& low, const Rational& high,
                                          const Rational& width = default_isolation_width()) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "root isolation on the zero polynomial");
  require(low < high, ErrorKind::BadIsolation, "empty interval");
  const IntPolynomial sf = squarefree_part(p);
  RealRootIsolation result;
  if (sf.degree() < 1) return result;
  const RealRootCounter counter(sf);
  result.count = counter.count(low, high);
  detail::isolate_recursive(counter, low, high, result.count, result.intervals);
  for (auto& iv : result.intervals) iv = refine_interval(sf, iv, width);
  return result;
}

/// Largest real root of p, if any, isolated to the given width.
inline std::optional<IsolatingInterval> largest_real_root(const IntPolynomial& p,
                                                          const Rational& width = default_isolation_width()) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "root isolation on the zero polynomial");
  const IntPolynomial sf = squarefree_part(p);
  if (sf.degree() < 1) return std::nullopt;
  const RealRootCounter counter(sf);
  const Rational bound(cauchy_root_bound(sf));
  if (counter.count(-bound, bound) == 0) return std::nullopt;
  Rational low = -bound;
  Rational high = bound;
  // Bisect keeping the topmost root inside (low, high].
  while (counter.count(low, high) > 1) {
    const Rational mid = (low + high) / 2;
    if (counter.count(mid, high) >= 1) low = mid;
    else high = mid;
  }
  return refine_interval(sf, {low, high, true}, width);
}

}  // namespace coxgrowth
