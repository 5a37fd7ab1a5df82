#pragma once

// Independent floating-point references used only by tests.

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace oracle {

/// Complex roots from the companion matrix eigenvalues.
inline std::vector<std::complex<double>> roots(const coxgrowth::IntPolynomial& p) {
  const int n = p.degree();
  std::vector<std::complex<double>> out;
  if (n < 1) return out;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.leading().get_d();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p[static_cast<std::size_t>(i)].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

inline coxgrowth::IntPolynomial random_poly(std::mt19937_64& rng, int degree, long range, bool monic) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<coxgrowth::Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = d(rng);
  if (monic) c.back() = 1;
  while (c.back() == 0) c.back() = d(rng);
  return coxgrowth::IntPolynomial(std::move(c));
}

}  // namespace oracle
