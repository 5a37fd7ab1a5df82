#include <gtest/gtest.h>

#include <random>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/polynomial.hpp"
#include "oracles.hpp"

using namespace coxgrowth;

TEST(Block, SmallBlocks) {
  EXPECT_EQ(block(1), (IntPolynomial{1}));
  EXPECT_EQ(block(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(block(3), (IntPolynomial{1, 1, 1}));
  EXPECT_THROW(block(0), Error);
}

TEST(Block, Products) {
  EXPECT_EQ(block_product({2, 3}), (IntPolynomial{1, 2, 2, 1}));
  EXPECT_EQ(block_product({2, 2}), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(block_product(std::initializer_list<long>{}), (IntPolynomial{1}));
  EXPECT_EQ(block(4).times_block(3), block(4) * block(3));
}

TEST(Block, ValueAtOneIsProduct) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(1, 9);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> ms(static_cast<std::size_t>(d(rng) % 5));
    long prod = 1;
    for (auto& m : ms) prod *= (m = d(rng));
    EXPECT_EQ(block_product(ms).evaluate(Integer(1)), prod);
  }
}

TEST(Reciprocal, Reversal) {
  const IntPolynomial p{1, -2, -2, 1};
  EXPECT_EQ(reciprocal_polynomial(p), p);
  EXPECT_EQ(reciprocal_polynomial(IntPolynomial{-4, 1}), (IntPolynomial{1, -4}));
  EXPECT_THROW(reciprocal_polynomial(IntPolynomial{}), Error);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    IntPolynomial q = oracle::random_poly(rng, 6, 9, false);
    if (q[0] == 0) continue;
    EXPECT_EQ(reciprocal_polynomial(reciprocal_polynomial(q)), q);
  }
}

TEST(Cyclotomic, KnownValues) {
  EXPECT_EQ(cyclotomic(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPolynomial{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient -2.
  const IntPolynomial phi105 = cyclotomic(105);
  bool has_minus_two = false;
  for (const auto& c : phi105.coeffs()) has_minus_two |= (c == -2);
  EXPECT_TRUE(has_minus_two);
}

TEST(Cyclotomic, DivisorProductIsZPowMinusOne) {
  for (long n = 1; n <= 200; ++n) {
    IntPolynomial prod{1};
    for (long d : divisors(n)) prod *= cyclotomic(d);
    ASSERT_EQ(prod, IntPolynomial::z_pow_minus_one(static_cast<std::size_t>(n))) << n;
    ASSERT_EQ(cyclotomic(n).degree(), totient(n));
  }
}

TEST(Cyclotomic, IndexBoundCoversTotient) {
  for (long d = 1; d <= 300; ++d) {
    const long bound = cyclotomic_index_bound(d);
    for (long n = bound + 1; n <= bound + 2000; ++n) ASSERT_GT(totient(n), d) << d << " " << n;
  }
}

TEST(Strip, Examples) {
  auto r = strip_cyclotomic_factors(IntPolynomial{1, -2, -2, 1});
  EXPECT_EQ(r.stripped, (IntPolynomial{1, -3, 1}));
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_EQ(r.factors[0], (CyclotomicFactor{2, 1}));

  auto s = strip_cyclotomic_factors(cyclotomic(6));
  EXPECT_EQ(s.stripped, (IntPolynomial{1}));
  EXPECT_EQ(s.factors, (std::vector<CyclotomicFactor>{{6, 1}}));

  auto u = strip_cyclotomic_factors(IntPolynomial{1, -3, 1});
  EXPECT_EQ(u.stripped, (IntPolynomial{1, -3, 1}));
  EXPECT_TRUE(u.factors.empty());
}

TEST(Strip, RandomReconstruction) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> idx(1, 40), cnt(0, 4);
  for (int t = 0; t < 500; ++t) {
    IntPolynomial core = oracle::random_poly(rng, static_cast<int>(cnt(rng)) + 1, 6, true);
    IntPolynomial p = core;
    const long k = cnt(rng);
    for (long i = 0; i < k; ++i) p *= cyclotomic(idx(rng));
    auto r = strip_cyclotomic_factors(p);
    ASSERT_EQ(r.reconstruct(), p);
    // Nothing cyclotomic remains.
    auto again = strip_cyclotomic_factors(r.stripped);
    ASSERT_TRUE(again.factors.empty());
  }
}

TEST(Squarefree, Examples) {
  const IntPolynomial zm1{-1, 1};
  const IntPolynomial zp2{2, 1};
  EXPECT_EQ(squarefree_part(zm1 * zm1 * zp2), zm1 * zp2);
  EXPECT_EQ(squarefree_part(IntPolynomial{1, -3, 1}), (IntPolynomial{1, -3, 1}));
  const IntPolynomial zp1{1, 1};
  EXPECT_EQ(squarefree_part(zp1 * zp1 * zp1), zp1);
  EXPECT_FALSE(is_squarefree(zp1 * zp1));
  EXPECT_TRUE(is_squarefree(zp1 * zm1));
}

TEST(Gcd, CommonFactor) {
  const IntPolynomial a = IntPolynomial{1, 1} * IntPolynomial{-3, 0, 1};
  const IntPolynomial b = IntPolynomial{1, 1} * IntPolynomial{5, 2};
  EXPECT_EQ(gcd(a, b), (IntPolynomial{1, 1}));
  EXPECT_EQ(gcd(a * Integer(6), b * Integer(4)), (IntPolynomial{1, 1}));
}

TEST(DivideExact, ExactAndInexact) {
  const IntPolynomial a = IntPolynomial{1, 2, 1};
  EXPECT_EQ(*divide_exact(a, IntPolynomial{1, 1}), (IntPolynomial{1, 1}));
  EXPECT_FALSE(divide_exact(a, IntPolynomial{2, 1}).has_value());
  EXPECT_EQ(*divide_exact(a * Integer(3), IntPolynomial{3, 3}), (IntPolynomial{1, 1}));
}

TEST(Evaluate, HomogeneousSign) {
  const IntPolynomial p{1, -3, 1};
  EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(-1, 4));
  EXPECT_EQ(p.sign_at(Rational(3)), 1);
  EXPECT_EQ(p.sign_at(Rational(1)), -1);
  EXPECT_EQ(p.to_string(), "1 - 3z + z^2");
  EXPECT_EQ((IntPolynomial{1, -2, -2, 1}).to_string(), "1 - 2z - 2z^2 + z^3");
}

TEST(RationalFunctionTest, ReducesAndNormalizes) {
  const RationalFunction f(IntPolynomial{1, -2, -2, 1}, block_product({2, 3}));
  EXPECT_EQ(f.numerator(), (IntPolynomial{1, -3, 1}));
  EXPECT_EQ(f.denominator(), (IntPolynomial{1, 1, 1}));
  const RationalFunction g(IntPolynomial{2, 2}, IntPolynomial{-4, -4, 0});
  EXPECT_EQ(g.numerator(), (IntPolynomial{-1}));
  EXPECT_EQ(g.denominator(), (IntPolynomial{2}));
  EXPECT_THROW(RationalFunction(IntPolynomial{1}, IntPolynomial{}), Error);
}

TEST(RootBound, CauchyBoundDominatesRoots) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    IntPolynomial p = oracle::random_poly(rng, 8, 20, false);
    const double b = cauchy_root_bound(p).get_d();
    for (auto r : oracle::roots(p)) EXPECT_LT(std::abs(r), b);
  }
}
