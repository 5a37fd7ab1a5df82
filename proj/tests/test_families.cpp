#include <gtest/gtest.h>

#include <cmath>

#include "coxgrowth/families.hpp"

using namespace coxgrowth;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantBreach;
}

}  // namespace

TEST(Families, EdgeCounts) {
  for (int n = 6; n <= 15; ++n) {
    const CoxeterSystem w = generate_family(FamilySpec::wheel(n, 3));
    EXPECT_EQ(w.rank(), n);
    EXPECT_EQ(w.edge_count(), 2 * (n - 1));
  }
  for (int l = 2; l <= 6; ++l) {
    const CoxeterSystem w = generate_family(FamilySpec::windmill(4, l, 3));
    EXPECT_EQ(w.rank(), 3 * l + 1);
    EXPECT_EQ(w.edge_count(), 6 * l);
  }
  for (int l = 3; l <= 7; ++l) {
    const CoxeterSystem f = generate_family(FamilySpec::friendship(l, 4));
    EXPECT_EQ(f.rank(), 2 * l + 1);
    EXPECT_EQ(f.edge_count(), 3 * l);
  }
  const CoxeterSystem f4 = generate_family(FamilySpec::friendship(4, 3));
  EXPECT_EQ(f4.rank(), 9);
  EXPECT_EQ(f4.edge_count(), 12);
  // l cycles of length c through v, every other vertex joined to v: E = l (2c - 3).
  for (int c = 3; c <= 7; ++c)
    for (int l = 1; l <= 4; ++l) {
      const CoxeterSystem t = generate_family(FamilySpec::bouquet(c, l, 3));
      EXPECT_EQ(t.rank(), l * (c - 1) + 1);
      EXPECT_EQ(t.edge_count(), l * (2 * c - 3));
      for (int v = 2; v <= t.rank(); ++v) EXPECT_TRUE(t.has_edge(1, v));
    }
}

TEST(Families, StructuralInvariants) {
  std::vector<FamilySpec> specs;
  for (int n = 6; n <= 12; ++n) specs.push_back(FamilySpec::wheel(n, 3));
  for (int l = 2; l <= 5; ++l) specs.push_back(FamilySpec::windmill(4, l, 4));
  for (int l = 3; l <= 6; ++l) specs.push_back(FamilySpec::friendship(l, 5));
  specs.push_back(FamilySpec::bouquet(5, 3, 3));
  specs.push_back(FamilySpec::bouquet(6, 3, 6));
  for (const auto& f : specs) {
    const CoxeterSystem s = generate_family(f);
    EXPECT_LE(euler_characteristic(s), -1) << f.name();
    const auto w = contains_gamma_star(s);
    ASSERT_TRUE(w) << f.name();
    EXPECT_TRUE(partial_order_leq(gamma_star(), s, *w));
    EXPECT_TRUE(dimension_at_most_two(s).at_most_two);
  }
}

TEST(Families, Validation) {
  EXPECT_EQ(kind_of([] { generate_family(FamilySpec::wheel(5, 3)); }), ErrorKind::BadFamily);
  EXPECT_EQ(kind_of([] { generate_family(FamilySpec::friendship(2, 3)); }), ErrorKind::BadFamily);
  EXPECT_EQ(kind_of([] { generate_family(FamilySpec::wheel(7, 2)); }), ErrorKind::BadFamily);
  EXPECT_EQ(kind_of([] { family_kind_from_string("lollipop"); }), ErrorKind::BadFamily);
}

TEST(Hypothesis, ExactBound) {
  EXPECT_TRUE(within_hypothesis_bound(Rational(2)));
  EXPECT_TRUE(within_hypothesis_bound(Rational(9, 4)));
  EXPECT_FALSE(within_hypothesis_bound(Rational(7, 3)));
  EXPECT_TRUE(within_hypothesis_bound(Rational(11, 5)));
  // Straddle the surd closely.
  const double b = hypothesis_bound();
  EXPECT_TRUE(within_hypothesis_bound(make_rational(Integer(2284), Integer(1000))));
  EXPECT_FALSE(within_hypothesis_bound(make_rational(Integer(2285), Integer(1000))));
  EXPECT_NEAR(b, 2.2847006554165614, 1e-15);
}

TEST(Rouche, LimitsAndMonotonicity) {
  const RoucheReport r = rouche_bound(9, 3, Rational(2), 16);
  EXPECT_NEAR(r.alpha_limit, (7 - 3 * std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_NEAR(r.lambda_threshold, (11 + std::sqrt(45.0)) / 2, 1e-12);
  EXPECT_NEAR(r.capital_lambda, 9 * r.alpha_k + r.beta_k, 1e-12);
  EXPECT_GT(r.capital_lambda, 0);
  for (const Rational a : {Rational(3, 2), Rational(2), Rational(9, 4)}) {
    double prev = rouche_bound(9, 3, a, 1).alpha_k;
    for (long k = 4; k <= 40; ++k) {
      const RoucheReport cur = rouche_bound(9, k, a, 1);
      EXPECT_LT(cur.alpha_k, prev);
      EXPECT_NEAR(prev - cur.alpha_k, rouche_bound(9, k - 1, a, 1).alpha_decrement, 1e-14);
      prev = cur.alpha_k;
    }
  }
  for (long k = 3; k <= 10; ++k) {
    double prev = rouche_bound(9, k, Rational(2), 1).capital_lambda;
    for (int n = 10; n <= 30; ++n) {
      const double cur = rouche_bound(n, k, Rational(2), 1).capital_lambda;
      EXPECT_GT(cur, prev);
      prev = cur;
    }
  }
}

TEST(Rouche, WheelCircleSamples) {
  for (int n = 9; n <= 12; ++n) {
    const RoucheReport r = rouche_bound(n, 3, Rational(2), 10000);
    EXPECT_EQ(r.circle_samples.size(), 10000u);
    EXPECT_TRUE(r.all_samples_positive) << n << " min " << r.min_delta;
  }
}

TEST(PerronFamilies, WorkedInstances) {
  const auto w7 = perron_family_check(generate_family(FamilySpec::wheel(7, 3)), 100);
  EXPECT_EQ(w7.a, Rational(2));
  EXPECT_TRUE(w7.hypotheses_pass);
  EXPECT_EQ(w7.classification.perron.verdict, Verdict::Perron);
  const auto t53 = perron_family_check(generate_family(FamilySpec::bouquet(5, 3, 5)), 100);
  EXPECT_EQ(t53.a, Rational(7, 4));
  EXPECT_TRUE(t53.hypotheses_pass);
  EXPECT_EQ(t53.classification.perron.verdict, Verdict::Perron);
  CoxeterSystem mixed = generate_family(FamilySpec::wheel(7, 3));
  mixed.set_label(1, 2, Label(4));
  EXPECT_EQ(kind_of([&] { perron_family_check(mixed); }), ErrorKind::MixedLabels);
}

TEST(Enumerate, GraphCounts) {
  // Unlabelled graph counts on 4 and 5 vertices by edge number.
  const std::vector<std::size_t> four{1, 1, 2, 3, 2, 1, 1};
  for (int e = 0; e <= 6; ++e) EXPECT_EQ(graphs_with_edges(4, e).size(), four[static_cast<std::size_t>(e)]);
  std::size_t total5 = 0;
  for (int e = 0; e <= 10; ++e) total5 += graphs_with_edges(5, e).size();
  EXPECT_EQ(total5, 34u);
  const std::vector<std::size_t> tree_counts{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(trees(n).size(), tree_counts[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Enumerate, LabellingOrbits) {
  // Triangle with 2 labels: multisets of size 3 = 4 orbits; path P3 with 2 labels: 3 orbits.
  std::size_t count = 0;
  for_each_labelling(graphs_with_edges(3, 3).front(), {3, 4}, [&](const CoxeterSystem&) { ++count; });
  EXPECT_EQ(count, 4u);
  count = 0;
  for_each_labelling(graphs_with_edges(3, 2).front(), {3, 4}, [&](const CoxeterSystem&) { ++count; });
  EXPECT_EQ(count, 3u);
}

TEST(Scan, SmallRanks) {
  ScanOptions o;
  o.max_rank = 4;
  o.max_label = 4;
  o.max_chi = -1;
  const ScanResult neg = perron_scan(o);
  EXPECT_GT(neg.systems, 0u);
  EXPECT_EQ(neg.non_perron, 0u);
  o.min_chi = 0;
  o.max_chi = 0;
  for (const auto& r : perron_scan(o).records) EXPECT_TRUE(is_salem_type(r.headline));
  o.min_chi = 1;
  o.max_chi = 10;
  for (const auto& r : perron_scan(o).records) EXPECT_TRUE(is_pisot_type(r.headline));
  ScanOptions big;
  big.max_rank = 8;
  big.max_label = 7;
  EXPECT_EQ(kind_of([&] { perron_scan(big); }), ErrorKind::ScanTooLarge);
}
