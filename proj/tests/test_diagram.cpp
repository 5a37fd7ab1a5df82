#include <gtest/gtest.h>

#include <random>

#include "coxgrowth/diagram.hpp"
#include "coxgrowth/sphericity.hpp"

using namespace coxgrowth;

namespace {

CoxeterSystem path(const std::vector<long>& labels) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < labels.size(); ++i)
    es.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 2, labels[i]});
  return build_system(static_cast<int>(labels.size()) + 1, es);
}

/// Coxeter-diagram style: listed pairs get the label, every other pair commutes (label 2).
CoxeterSystem coxeter_diagram(int n, const std::vector<Edge>& strong) {
  CoxeterSystem s(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.set_label(i, j, Label(2));
  for (const auto& e : strong) s.set_label(e.i, e.j, e.label > 0 ? Label(e.label) : Label::infinity());
  return s;
}

}  // namespace

TEST(Label, InfinityIsMaximal) {
  EXPECT_LT(Label(7), Label::infinity());
  EXPECT_LT(Label(2), Label(3));
  EXPECT_EQ(Label::infinity(), Label::infinity());
  EXPECT_EQ(Label::infinity().to_string(), "inf");
  EXPECT_THROW((void)Label::infinity().value(), Error);
}

TEST(BuildSystem, GammaStarAndErrors) {
  const CoxeterSystem g = gamma_star();
  EXPECT_EQ(g.rank(), 4);
  EXPECT_EQ(g.label(1, 2), Label(3));
  EXPECT_TRUE(g.label(1, 3).is_infinite());
  EXPECT_EQ(g.label(2, 2), Label(1));
  const CoxeterSystem e = build_system(3, {});
  EXPECT_TRUE(e.label(1, 2).is_infinite());
  EXPECT_EQ(e.edge_count(), 0);
  try {
    build_system(3, {{1, 2, 2}, {1, 2, 3}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DuplicateEdge);
  }
  try {
    build_system(3, {{1, 2, 1}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidLabel);
  }
  try {
    build_system(3, {{1, 4, 3}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::BadIndex);
  }
}

TEST(Euler, Values) {
  EXPECT_EQ(euler_characteristic(gamma_star()), 0);
  EXPECT_EQ(euler_characteristic(build_system(5, {})), 5);
  std::vector<Edge> wheel;
  for (int i = 2; i <= 7; ++i) wheel.push_back({1, i, 3});
  for (int i = 2; i <= 7; ++i) wheel.push_back({i, i == 7 ? 2 : i + 1, 3});
  EXPECT_EQ(euler_characteristic(build_system(7, wheel)), -5);
}

TEST(Dimension, Triangles) {
  EXPECT_TRUE(dimension_at_most_two(gamma_star()).at_most_two);
  const auto d = dimension_at_most_two(build_system(3, {{1, 2, 2}, {2, 3, 3}, {1, 3, 5}}));
  EXPECT_FALSE(d.at_most_two);
  EXPECT_EQ(*d.witness, (std::array<int, 3>{1, 2, 3}));
  EXPECT_TRUE(dimension_at_most_two(build_system(3, {{1, 2, 2}, {2, 3, 3}, {1, 3, 6}})).at_most_two);
}

TEST(Dimension, MonotoneUnderLabelIncrease) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> lab(2, 7);
  for (int t = 0; t < 300; ++t) {
    CoxeterSystem s(5);
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        const int k = lab(rng);
        s.set_label(i, j, k == 7 ? Label::infinity() : Label(k));
      }
    if (!dimension_at_most_two(s).at_most_two) continue;
    CoxeterSystem raised = s;
    const int i = 1 + static_cast<int>(rng() % 4);
    const int j = i + 1;
    if (raised.label(i, j).is_finite()) raised.set_label(i, j, Label(raised.label(i, j).value() + 1));
    EXPECT_TRUE(dimension_at_most_two(raised).at_most_two);
  }
}

TEST(Sphericity, RankTwoAndTriangles) {
  EXPECT_EQ(classify_sphericity(build_system(2, {{1, 2, 5}})).global, Sphericity::Spherical);
  EXPECT_EQ(classify_sphericity(build_system(2, {})).global, Sphericity::Affine);
  for (long k = 2; k <= 12; ++k)
    EXPECT_EQ(classify_sphericity(build_system(2, {{1, 2, k}})).global, Sphericity::Spherical) << k;
  EXPECT_EQ(classify_sphericity(build_system(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}})).global, Sphericity::Affine);
  EXPECT_EQ(classify_sphericity(gamma_star()).global, Sphericity::Other);
  EXPECT_EQ(classify_sphericity(build_system(3, {{1, 2, 2}, {2, 3, 3}, {1, 3, 6}})).global, Sphericity::Affine);
  EXPECT_EQ(classify_sphericity(build_system(3, {{1, 2, 2}, {2, 3, 3}, {1, 3, 5}})).global, Sphericity::Spherical);
  EXPECT_EQ(classify_sphericity(build_system(3, {{1, 2, 2}, {2, 3, 3}, {1, 3, 7}})).global, Sphericity::Other);
}

TEST(Sphericity, TablesAgreeWithEigenvalues) {
  // Every table entry is recognized and the advisory check stays silent.
  struct Case {
    int n;
    std::vector<Edge> strong;
    Sphericity expect;
  };
  const std::vector<Case> cases{
      {4, {{1, 2, 3}, {2, 3, 4}, {3, 4, 3}}, Sphericity::Spherical},                        // F4
      {4, {{1, 2, 5}, {2, 3, 3}, {3, 4, 3}}, Sphericity::Spherical},                        // H4
      {5, {{1, 3, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}}, Sphericity::Spherical},             // D5
      {6, {{1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {3, 6, 3}}, Sphericity::Spherical},  // E6
      {5, {{1, 3, 3}, {2, 3, 3}, {4, 3, 3}, {5, 3, 3}}, Sphericity::Affine},                // ~D4
      {5, {{1, 2, 3}, {2, 3, 3}, {3, 4, 4}, {4, 5, 3}}, Sphericity::Affine},                // ~F4
      {4, {{1, 2, 4}, {2, 3, 3}, {3, 4, 4}}, Sphericity::Affine},                           // ~C3
      {4, {{1, 3, 3}, {2, 3, 3}, {3, 4, 4}}, Sphericity::Affine},                           // ~B3
      {3, {{1, 2, 6}, {2, 3, 3}}, Sphericity::Affine},                                      // ~G2
      {4, {{1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 1, 3}}, Sphericity::Affine},                // ~A3
      {9, {{1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}, {6, 7, 3}, {7, 8, 3}, {3, 9, 3}},
       Sphericity::Affine},  // ~E8
      {4, {{1, 2, 5}, {2, 3, 3}, {3, 4, 4}}, Sphericity::Other},
      {3, {{1, 2, 0}, {2, 3, 3}}, Sphericity::Other},
  };
  for (const auto& c : cases) {
    const auto r = classify_sphericity(coxeter_diagram(c.n, c.strong));
    EXPECT_EQ(r.global, c.expect) << describe(coxeter_diagram(c.n, c.strong));
    EXPECT_TRUE(r.warnings.empty()) << (r.warnings.empty() ? "" : r.warnings.front());
  }
}

TEST(Sphericity, ProductsOfComponents) {
  // A1 x A1 x A1: all pairs commute.
  EXPECT_EQ(classify_sphericity(coxeter_diagram(3, {})).global, Sphericity::Spherical);
  // ~A1 x A1.
  EXPECT_EQ(classify_sphericity(coxeter_diagram(3, {{1, 2, 0}})).global, Sphericity::Affine);
}

TEST(PartialOrder, Examples) {
  const CoxeterSystem c3 = build_system(4, {{1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {1, 4, 3}});
  const CoxeterSystem c4 = build_system(4, {{1, 2, 4}, {2, 3, 4}, {3, 4, 4}, {1, 4, 4}});
  EXPECT_TRUE(partial_order_leq(c3, c4, identity_injection(4)));
  CoxeterSystem extra = gamma_star();
  extra.set_label(1, 3, Label(7));
  EXPECT_FALSE(partial_order_leq(gamma_star(), extra, identity_injection(4)));
  EXPECT_TRUE(partial_order_leq(extra, gamma_star(), identity_injection(4)));
  EXPECT_THROW(partial_order_leq(c3, c4, {1, 1, 2, 3}), Error);
}

TEST(PartialOrder, ReflexiveAndTransitive) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> lab(2, 8);
  auto random_system = [&](int n) {
    CoxeterSystem s(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int k = lab(rng);
        s.set_label(i, j, k == 8 ? Label::infinity() : Label(k));
      }
    return s;
  };
  for (int t = 0; t < 200; ++t) {
    const CoxeterSystem a = random_system(4);
    EXPECT_TRUE(partial_order_leq(a, a, identity_injection(4)));
    CoxeterSystem b = a;
    CoxeterSystem c = a;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        if (b.label(i, j).is_finite() && rng() % 2) b.set_label(i, j, Label(b.label(i, j).value() + 1));
        c.set_label(i, j, b.label(i, j));
        if (c.label(i, j).is_finite() && rng() % 2) c.set_label(i, j, Label::infinity());
      }
    ASSERT_TRUE(partial_order_leq(a, b, identity_injection(4)));
    ASSERT_TRUE(partial_order_leq(b, c, identity_injection(4)));
    ASSERT_TRUE(partial_order_leq(a, c, identity_injection(4)));
  }
}

TEST(GammaStar, Containment) {
  std::vector<Edge> wheel;
  for (int i = 2; i <= 7; ++i) wheel.push_back({1, i, 3});
  for (int i = 2; i <= 7; ++i) wheel.push_back({i, i == 7 ? 2 : i + 1, 3});
  const CoxeterSystem w7 = build_system(7, wheel);
  auto wit = contains_gamma_star(w7);
  ASSERT_TRUE(wit);
  EXPECT_TRUE(partial_order_leq(gamma_star(), w7, *wit));
  auto e = contains_gamma_star(build_system(4, {}));
  ASSERT_TRUE(e);
  EXPECT_TRUE(partial_order_leq(gamma_star(), build_system(4, {}), *e));
  EXPECT_FALSE(contains_gamma_star(build_system(3, {{1, 2, 7}, {2, 3, 7}, {1, 3, 7}})));
  EXPECT_FALSE(contains_gamma_star(build_system(4, {{1, 2, 2}, {2, 3, 3}, {3, 4, 3}, {1, 4, 3}})));
}

TEST(Connectivity, Reports) {
  const auto p = connectivity_report(path({2, 2, 2}));
  EXPECT_TRUE(p.connected);
  EXPECT_TRUE(p.is_tree);
  EXPECT_EQ(p.euler_characteristic, 1);
  const auto g = connectivity_report(gamma_star());
  EXPECT_TRUE(g.connected);
  EXPECT_FALSE(g.is_tree);
  EXPECT_EQ(g.euler_characteristic, 0);
  EXPECT_EQ(g.dimension, 2);
  const auto d = connectivity_report(build_system(4, {{1, 2, 3}, {3, 4, 3}}));
  EXPECT_FALSE(d.connected);
  EXPECT_EQ(d.euler_characteristic, 2);
  EXPECT_EQ(d.components, 2);
  EXPECT_EQ(connectivity_report(build_system(5, {})).dimension, 1);
}

TEST(CosineMatrix, Diagonal) {
  const auto c = cosine_matrix(gamma_star());
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(c(i, i), 1.0);
  EXPECT_DOUBLE_EQ(c(0, 2), -1.0);
  EXPECT_NEAR(c(0, 1), -0.5, 1e-15);
}
