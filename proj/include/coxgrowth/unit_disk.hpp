#pragma once

#include <vector>

#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/sturm.hpp"

namespace coxgrowth {

namespace detail {

/// p(x + 1) by repeated synthetic division.
inline IntPolynomial taylor_shift_one(const IntPolynomial& p, long step) {
  std::vector<Integer> c(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += step * c[j];
  return IntPolynomial(std::move(c));
}

/// p(s x) for an integer s.
inline IntPolynomial scale_argument(const IntPolynomial& p, const Integer& s) {
  std::vector<Integer> c(p.coeffs().begin(), p.coeffs().end());
  Integer pw = 1;
  for (auto& v : c) {
    v *= pw;
    pw *= s;
  }
  return IntPolynomial(std::move(c));
}

/// Sum of sign(s1/s0) jumps from -inf to +inf over the real line.
inline int cauchy_index(const IntPolynomial& numerator, const IntPolynomial& denominator) {
  if (numerator.is_zero()) return 0;
  const SturmChain chain(denominator, numerator);
  return chain.variations_at_minus_infinity() - chain.variations_at_plus_infinity();
}

}  // namespace detail

/// (w - 1)^n p((w + 1)/(w - 1)): maps the open unit disk to the open left half-plane.
inline IntPolynomial cayley_transform(const IntPolynomial& p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  // z = 1 + 2/u with u = w - 1.
  IntPolynomial s = detail::scale_argument(detail::taylor_shift_one(p, 1), Integer(2));
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i < s.size(); ++i) c[n - i] = s[i];
  return detail::taylor_shift_one(IntPolynomial(std::move(c)), -1);
}

/// Roots in the open unit disk via the half-plane Cauchy index; exact,
/// and valid whenever p has no root on the unit circle.
inline int unit_disk_count_via_half_plane(const IntPolynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "unit-disk count of the zero polynomial");
  const int n = p.degree();
  if (n <= 0) return 0;
  if (p.evaluate(Integer(1)) == 0) fail(ErrorKind::OnCircleOrDegenerate, "root at z = 1");
  const IntPolynomial q = cayley_transform(p);
  // q(iy) = A(y) + i B(y).
  std::vector<Integer> a(q.size()), b(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    const bool neg = (k % 4) >= 2;
    Integer v = neg ? Integer(-q[k]) : q[k];
    if (k % 2 == 0) a[k] = v;
    else b[k] = v;
  }
  const IntPolynomial A(std::move(a));
  const IntPolynomial B(std::move(b));
  const IntPolynomial g = gcd(A, B);
  if (g.degree() >= 1) {
    const RealRootCounter counter(squarefree_part(g));
    if (counter.count_all() > 0) fail(ErrorKind::OnCircleOrDegenerate, "root on the unit circle");
  }
  const int diff = (q.degree() % 2 == 0) ? -detail::cauchy_index(B, A) : detail::cauchy_index(A, B);
  const int nl = (q.degree() + diff) / 2;
  return nl;
}

/// Number of roots strictly inside the unit disk. Uses the Schur-Cohn
/// transform a0 p - an p*; singular steps defer to the half-plane count.
/// Throws OnCircleOrDegenerate when p has a root on the unit circle.
inline int schur_cohn_inside_count(const IntPolynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "unit-disk count of the zero polynomial");
  IntPolynomial cur = p;
  int offset = 0;  // roots already accounted for
  int sign = 1;    // +1: inside(p) = offset + inside(cur); -1: offset - inside(cur)
  while (true) {
    const std::size_t v = cur.z_valuation();
    if (v > 0) {
      offset += sign * static_cast<int>(v);
      cur = cur.without_z_factors();
    }
    if (cur.degree() <= 0) return offset;
    const Integer a0 = abs(cur[0]);
    const Integer an = abs(cur.leading());
    if (a0 == an) return offset + sign * unit_disk_count_via_half_plane(cur);
    const int n = cur.degree();
    IntPolynomial t = cur * cur[0] - reciprocal_polynomial(cur) * cur.leading();
    if (t.is_zero()) return offset + sign * unit_disk_count_via_half_plane(cur);
    if (a0 < an) {
      offset += sign * n;
      sign = -sign;
    }
    cur = t.primitive_part();
  }
}

/// Roots of p with modulus strictly below rho = u/v (u, v > 0).
inline int inside_radius_count(const IntPolynomial& p, const Rational& rho) {
  require(rho > 0, ErrorKind::BadIsolation, "radius must be positive");
  const Integer& u = rho.get_num();
  const Integer& v = rho.get_den();
  const std::size_t n = p.size();
  std::vector<Integer> c(n);
  Integer up = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer vp;
    mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
    c[i] = p[i] * up * vp;
    up *= u;
  }
  return schur_cohn_inside_count(IntPolynomial(std::move(c)));
}

}  // namespace coxgrowth
