#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/sturm.hpp"
#include "coxgrowth/unit_disk.hpp"
#include "oracles.hpp"

using namespace coxgrowth;

TEST(Sturm, QuadraticRoots) {
  auto r = sturm_real_roots(IntPolynomial{1, -3, 1}, Rational(0), Rational(4));
  ASSERT_EQ(r.count, 2);
  EXPECT_NEAR(r.intervals[0].approx(), (3 - std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_NEAR(r.intervals[1].approx(), (3 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_LE(r.intervals[1].width(), default_isolation_width());
}

TEST(Sturm, LinearAndNoRoots) {
  auto r = sturm_real_roots(IntPolynomial{-4, 1}, Rational(0), Rational(10));
  ASSERT_EQ(r.count, 1);
  EXPECT_TRUE(r.intervals[0].contains(Rational(4)));
  EXPECT_EQ(sturm_real_roots(IntPolynomial{1, 0, 1}, Rational(-10), Rational(10)).count, 0);
  EXPECT_THROW(sturm_real_roots(IntPolynomial{}, Rational(0), Rational(1)), Error);
}

TEST(Sturm, RootOnRightEndpointCounts) {
  // (z - 1)(z - 2): interval (1, 2] holds exactly the root 2.
  const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-2, 1};
  EXPECT_EQ(sturm_real_roots(p, Rational(1), Rational(2)).count, 1);
  EXPECT_EQ(sturm_real_roots(p, Rational(0), Rational(1)).count, 1);
}

TEST(Sturm, LargestRealRoot) {
  auto iv = largest_real_root(IntPolynomial{1, -2, -2, 1});
  ASSERT_TRUE(iv);
  EXPECT_NEAR(iv->approx(), (3 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_FALSE(largest_real_root(IntPolynomial{1, 0, 1}));
}

TEST(Sturm, CountMatchesFloatingRoots) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int t = 0; t < 600; ++t) {
    IntPolynomial p = oracle::random_poly(rng, 1 + static_cast<int>(t % 12), 12, false);
    const IntPolynomial sf = squarefree_part(p);
    auto roots = oracle::roots(sf);
    int real = 0;
    bool ambiguous = false;
    for (auto r : roots) {
      if (std::fabs(r.imag()) < 1e-6) {
        ++real;
        if (std::fabs(r.imag()) > 1e-12) ambiguous = true;
      }
    }
    if (ambiguous) continue;
    const Rational b(cauchy_root_bound(sf));
    ASSERT_EQ(sturm_real_roots(p, -b, b).count, real) << p.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 500);
}

TEST(SchurCohn, Examples) {
  EXPECT_EQ(schur_cohn_inside_count(IntPolynomial{1, -3, 1}), 1);
  EXPECT_EQ(schur_cohn_inside_count(IntPolynomial{-4, 1}), 0);
  EXPECT_EQ(schur_cohn_inside_count(IntPolynomial{-1, -1, 1}), 1);
  EXPECT_EQ(schur_cohn_inside_count(IntPolynomial{0, 0, -4, 1}), 2);
  EXPECT_EQ(schur_cohn_inside_count(IntPolynomial{-1, 2}), 1);
}

TEST(SchurCohn, CircleRootsAreReported) {
  EXPECT_THROW(schur_cohn_inside_count(cyclotomic(5)), Error);
  EXPECT_THROW(schur_cohn_inside_count(IntPolynomial{1, -3, 1} * cyclotomic(2)), Error);
  EXPECT_THROW(schur_cohn_inside_count(IntPolynomial{-1, 1}), Error);
  try {
    schur_cohn_inside_count(cyclotomic(7) * IntPolynomial{-5, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OnCircleOrDegenerate);
  }
}

TEST(SchurCohn, HalfPlaneSmallCases) {
  EXPECT_EQ(unit_disk_count_via_half_plane(IntPolynomial{1, -3, 1}), 1);
  EXPECT_EQ(unit_disk_count_via_half_plane(IntPolynomial{-1, 3}), 1);
  EXPECT_EQ(unit_disk_count_via_half_plane(IntPolynomial{1, 3, 0, 1}), 1);
}

TEST(SchurCohn, MatchesFloatingModuli) {
  std::mt19937_64 rng(1234);
  int checked = 0;
  for (int t = 0; t < 1500 && checked < 600; ++t) {
    IntPolynomial p = oracle::random_poly(rng, 1 + static_cast<int>(t % 10), 9, false);
    auto roots = oracle::roots(p);
    int inside = 0;
    bool separated = true;
    for (auto r : roots) {
      const double m = std::abs(r);
      if (std::fabs(m - 1.0) < 1e-6) separated = false;
      if (m < 1.0) ++inside;
    }
    if (!separated) continue;
    ASSERT_EQ(schur_cohn_inside_count(p), inside) << p.to_string();
    ASSERT_EQ(unit_disk_count_via_half_plane(p), inside) << p.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 500);
}

TEST(SchurCohn, SelfInversiveInputs) {
  // Palindromic with off-circle pairs and circle roots removed.
  const IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  EXPECT_THROW(schur_cohn_inside_count(lehmer), Error);
  const IntPolynomial pair = IntPolynomial{1, -3, 1} * IntPolynomial{1, -5, 1};
  EXPECT_EQ(schur_cohn_inside_count(pair), 2);
}

TEST(InsideRadius, ScaledCount) {
  const IntPolynomial p = IntPolynomial{-1, 2} * IntPolynomial{-3, 1} * IntPolynomial{5, 1};
  EXPECT_EQ(inside_radius_count(p, Rational(1)), 1);
  EXPECT_EQ(inside_radius_count(p, Rational(4)), 2);
  EXPECT_EQ(inside_radius_count(p, Rational(11, 2)), 3);
  EXPECT_EQ(inside_radius_count(p, Rational(1, 4)), 0);
}

TEST(Cayley, MapsDiskToLeftHalfPlane) {
  // Root z = 1/2 maps to w = (z + 1)/(z - 1) = -3.
  const IntPolynomial q = cayley_transform(IntPolynomial{-1, 2});
  EXPECT_EQ(q.evaluate(Integer(-3)), 0);
}
