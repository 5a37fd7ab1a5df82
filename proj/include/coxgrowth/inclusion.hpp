#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <optional>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

/// Multiprecision reals with a fixed mantissa width in bits.
template <unsigned Bits>
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<(Bits * 30103u + 99999u) / 100000u>, boost::multiprecision::et_off>;

template <class R>
struct Complex {
  R re{0};
  R im{0};

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  R norm() const { return re * re + im * im; }
};

/// Exact dyadic value of a multiprecision float.
template <class R>
Rational to_rational(const R& x) {
  if (x == 0) return Rational(0);
  mpz_class m;
  const long e = mpfr_get_z_2exp(m.get_mpz_t(), x.backend().data());
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

struct AberthResult {
  std::vector<Complex<Rational>> centers;  // exact dyadic copies of the approximations
  std::vector<std::pair<double, double>> approx;
  bool converged = false;
  int iterations = 0;
};

/// Simultaneous Aberth-Ehrlich iteration at Bits of precision.
template <unsigned Bits>
AberthResult aberth_roots(const IntPolynomial& p, int max_iterations = 2000) {
  using R = BigFloat<Bits>;
  using C = Complex<R>;
  const int n = p.degree();
  AberthResult out;
  if (n < 1) return out;
  std::vector<R> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = R(p[static_cast<std::size_t>(i)].get_str());
  std::vector<R> da(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) da[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(i)] * i;

  // Start on a circle of radius |a0/an|^{1/n}, rotated off the real axis.
  R radius = abs(a[0] / a[static_cast<std::size_t>(n)]);
  radius = radius > 0 ? R(pow(radius, R(1) / n)) : R(1);
  const R two_pi = R(2) * boost::math::constants::pi<R>();
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const R t = two_pi * k / n + R(0.4);
    z[static_cast<std::size_t>(k)] = {radius * cos(t), radius * sin(t)};
  }
  auto eval = [&](const std::vector<R>& c, const C& x) {
    C acc{R(0), R(0)};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + C{c[i], R(0)};
    return acc;
  };
  const R tol = ldexp(R(1), -static_cast<int>(Bits) + 6);
  for (int it = 0; it < max_iterations; ++it) {
    R worst = 0;
    for (int k = 0; k < n; ++k) {
      C& zk = z[static_cast<std::size_t>(k)];
      const C pv = eval(a, zk);
      if (pv.re == 0 && pv.im == 0) continue;
      const C dv = eval(da, zk);
      const C w = pv / dv;
      C s{R(0), R(0)};
      for (int j = 0; j < n; ++j)
        if (j != k) s = s + C{R(1), R(0)} / (zk - z[static_cast<std::size_t>(j)]);
      const C corr = w / (C{R(1), R(0)} - w * s);
      zk = zk - corr;
      const R scale = sqrt(zk.norm());
      const R rel = sqrt(corr.norm()) / (scale > 1 ? scale : R(1));
      if (rel > worst) worst = rel;
    }
    out.iterations = it + 1;
    if (worst < tol) {
      out.converged = true;
      break;
    }
  }
  for (const auto& zk : z) {
    out.centers.push_back({to_rational(zk.re), to_rational(zk.im)});
    out.approx.emplace_back(static_cast<double>(zk.re), static_cast<double>(zk.im));
  }
  return out;
}

/// Squared radii of the Weierstrass inclusion disks D(c_i, n |W_i|); the
/// union holds every root and a component of m disks holds exactly m roots.
inline std::optional<std::vector<Rational>> inclusion_radii_squared(const IntPolynomial& p,
                                                                    const std::vector<Complex<Rational>>& c) {
  const std::size_t n = c.size();
  const Rational lead2 = Rational(p.leading()) * Rational(p.leading());
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex<Rational> acc{Rational(0), Rational(0)};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * c[i] + Complex<Rational>{Rational(p[k]), Rational(0)};
    Rational prod = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational d = (c[i] - c[j]).norm();
      if (d == 0) return std::nullopt;
      prod *= d;
    }
    out[i] = Rational(static_cast<long>(n * n)) * acc.norm() / (lead2 * prod);
  }
  return out;
}

/// sqrt(a) + sqrt(b) < sqrt(c) for nonnegative rationals.
inline bool sum_of_roots_below(const Rational& a, const Rational& b, const Rational& c) {
  // sqrt(a) + sqrt(b) < sqrt(c)  <=>  c - a - b > 0 and (c - a - b)^2 > 4ab.
  const Rational x = c - a - b;
  return x > 0 && x * x > 4 * a * b;
}

/// sqrt(a) - sqrt(b) > sqrt(c) for nonnegative rationals, i.e. sqrt(a) > sqrt(b) + sqrt(c).
inline bool difference_of_roots_above(const Rational& a, const Rational& b, const Rational& c) {
  return sum_of_roots_below(b, c, a);
}

}  // namespace coxgrowth
