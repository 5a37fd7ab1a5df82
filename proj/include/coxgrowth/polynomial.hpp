#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Dense univariate polynomial over arbitrary-precision integers.
/// Coefficient i multiplies z^i; trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(const Integer& v) { return IntPolynomial(std::vector<Integer>{v}); }
  static IntPolynomial monomial(const Integer& coeff, std::size_t degree) {
    std::vector<Integer> c(degree + 1);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
  }
  /// z^n - 1
  static IntPolynomial z_pow_minus_one(std::size_t n) {
    std::vector<Integer> c(n + 1);
    c[0] = -1;
    c[n] += 1;
    return IntPolynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::span<const Integer> coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  /// Coefficient of z^i, zero beyond the degree.
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& operator[](std::size_t i) const { return c_.at(i); }
  const Integer& leading() const {
    require(!c_.empty(), ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Multiplicity of z as a factor (number of leading zero coefficients).
  std::size_t z_valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return v;
  }
  IntPolynomial without_z_factors() const {
    const std::size_t v = z_valuation();
    return IntPolynomial(std::vector<Integer>(c_.begin() + static_cast<std::ptrdiff_t>(v), c_.end()));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const Integer& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  /// Multiply by z^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> r(k, Integer(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
  }

  /// Multiply by [m] = 1 + z + ... + z^{m-1} as a sliding window sum.
  IntPolynomial times_block(std::size_t m) const {
    require(m >= 1, ErrorKind::InvalidBlock, "block size must be at least 1");
    if (is_zero() || m == 1) return *this;
    const std::size_t n = c_.size() + m - 1;
    std::vector<Integer> r(n);
    Integer window = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < c_.size()) window += c_[i];
      if (i >= m) window -= c_[i - m];
      r[i] = window;
    }
    return IntPolynomial(std::move(r));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(r));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& v : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (c_.back() < 0) g = -g;
    IntPolynomial r = *this;
    for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Evaluates v^deg * p(u/v) for x = u/v with v > 0; same sign as p(x).
  Integer evaluate_homogeneous(const Rational& x) const {
    if (is_zero()) return 0;
    const Integer& u = x.get_num();
    const Integer& v = x.get_den();
    Integer acc = c_.back();
    Integer vpow = 1;
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
      vpow *= v;
      acc = acc * u + c_[k] * vpow;
    }
    return acc;
  }

  Rational evaluate(const Rational& x) const {
    if (is_zero()) return 0;
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(degree()));
    return make_rational(evaluate_homogeneous(x), den);
  }

  int sign_at(const Rational& x) const { return sgn(evaluate_homogeneous(x)); }
  int sign_at_plus_infinity() const { return is_zero() ? 0 : sgn(c_.back()); }
  int sign_at_minus_infinity() const {
    if (is_zero()) return 0;
    const int s = sgn(c_.back());
    return (degree() % 2 == 0) ? s : -s;
  }

  double evaluate_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  /// Human readable form in ascending powers, e.g. "1 - 2z - 2z^2 + z^3".
  std::string to_string(std::string_view var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Integer a = abs(c_[i]);
      if (first) {
        if (c_[i] < 0) os << "-";
      } else {
        os << (c_[i] < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || a != 1) os << a.get_str();
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

/// [m] = 1 + z + ... + z^{m-1}.
inline IntPolynomial block(long m) {
  require(m >= 1, ErrorKind::InvalidBlock, "block [m] needs m >= 1, got " + std::to_string(m));
  return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(m), Integer(1)));
}

/// [m_1, ..., m_r] = [m_1] ... [m_r]; the empty product is 1.
inline IntPolynomial block_product(std::span<const long> ms) {
  IntPolynomial r{1};
  for (long m : ms) {
    require(m >= 1, ErrorKind::InvalidBlock, "block [m] needs m >= 1, got " + std::to_string(m));
    r = r.times_block(static_cast<std::size_t>(m));
  }
  return r;
}
inline IntPolynomial block_product(std::initializer_list<long> ms) {
  return block_product(std::span<const long>(ms.begin(), ms.size()));
}

/// z^{deg p} p(1/z): the coefficient list reversed.
inline IntPolynomial reciprocal_polynomial(const IntPolynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "reciprocal of the zero polynomial");
  std::vector<Integer> r(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(r));
}

inline bool is_reciprocal(const IntPolynomial& p) { return !p.is_zero() && p == reciprocal_polynomial(p); }

/// Division by a divisor whose leading coefficient must divide every step;
/// returns the quotient when the division is exact over the integers.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  require(!b.is_zero(), ErrorKind::ZeroInput, "division by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<Integer> q(dq + 1);
  const Integer& lb = b.leading();
  const bool monic = lb == 1;
  const auto bc = b.coeffs();
  for (std::size_t k = dq + 1; k-- > 0;) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (monic) {
      q[k] = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    }
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) r[k + j] -= q[k] * bc[j];
    }
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

/// lc(b)^{deg a - deg b + 1} a = q b + r; returns r together with the sign of the multiplier.
inline std::pair<IntPolynomial, int> pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  require(!b.is_zero(), ErrorKind::ZeroInput, "pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return {a, 1};
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.leading();
  const auto bc = b.coeffs();
  const int steps = a.degree() - b.degree() + 1;
  for (std::size_t top = r.size(); top-- > db;) {
    const Integer t = r[top];
    for (auto& v : r) v *= lb;
    if (t != 0) {
      const std::size_t shift = top - db;
      for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= t * bc[j];
    }
  }
  r.resize(db);
  const int mult_sign = (lb < 0 && steps % 2 == 1) ? -1 : 1;
  return {IntPolynomial(std::move(r)), mult_sign};
}

/// Greatest common divisor, primitive with positive leading coefficient.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).first.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

/// p / gcd(p, p'), primitive and sign-normalized.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "squarefree part of zero polynomial");
  if (p.degree() <= 0) return IntPolynomial{1};
  const IntPolynomial g = gcd(p, p.derivative());
  const IntPolynomial pp = p.primitive_part();
  if (g.degree() == 0) return pp;
  auto q = divide_exact(pp, g);
  require(q.has_value(), ErrorKind::InvariantBreach, "gcd does not divide its argument");
  return q->primitive_part();
}

inline bool is_squarefree(const IntPolynomial& p) {
  return !p.is_zero() && (p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0);
}

/// Cauchy bound: every complex root has modulus below 1 + max |a_i / a_n|.
inline Integer cauchy_root_bound(const IntPolynomial& p) {
  require(!p.is_zero(), ErrorKind::ZeroInput, "root bound of zero polynomial");
  Rational best = 0;
  const Integer lead = abs(p.leading());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational q = make_rational(abs(p[i]), lead);
    if (q > best) best = q;
  }
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return c + 1;
}

/// A quotient of integer polynomials in lowest terms with positive
/// denominator leading coefficient.
class RationalFunction {
 public:
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    require(!den_.is_zero(), ErrorKind::ZeroInput, "zero denominator");
    reduce();
  }

  /// Builds from a pair already known to be coprime; only the sign is normalized.
  static RationalFunction from_coprime(IntPolynomial numerator, IntPolynomial denominator) {
    RationalFunction r;
    r.num_ = std::move(numerator);
    r.den_ = std::move(denominator);
    require(!r.den_.is_zero(), ErrorKind::ZeroInput, "zero denominator");
    if (r.den_.leading() < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }

  /// a/b == c/d by cross multiplication.
  bool equals(const IntPolynomial& n, const IntPolynomial& d) const { return num_ * d == n * den_; }

 private:
  RationalFunction() = default;

  void reduce() {
    const IntPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    // Remove a common integer factor as well.
    Integer c;
    const Integer cn = num_.content();
    const Integer cd = den_.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
      num_ = *divide_exact(num_, IntPolynomial::constant(c));
      den_ = *divide_exact(den_, IntPolynomial::constant(c));
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace coxgrowth
