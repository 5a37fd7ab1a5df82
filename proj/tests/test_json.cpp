#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "coxgrowth/report.hpp"

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

TEST(Json, DiagramRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    CoxeterSystem s(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() % 3 == 0) s.set_label(i, j, Label(2 + static_cast<long>(rng() % 6)));
    const std::string text = dump_json(diagram_to_json(s));
    const CoxeterSystem back = parse_diagram(text);
    ASSERT_EQ(back.rank(), s.rank());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) EXPECT_EQ(back.label(i, j), s.label(i, j)) << text;
  }
}

TEST(Json, EdgeOrderIsNormalised) {
  const auto s = parse_diagram(R"({"rank": 3, "edges": [[3, 1, 4]]})");
  EXPECT_EQ(s.label(1, 3).value(), 4);
  EXPECT_TRUE(s.label(1, 2).is_infinite());
}

TEST(Json, ParseErrorsCarryPosition) {
  try {
    parse_diagram("{\n  \"rank\": 3,\n  \"edges\": [[1, 2, ]]\n}");
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Json, StructuralRejections) {
  EXPECT_EQ(kind_of([] { parse_diagram("[1, 2]"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"edges": []})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"rank": 3, "edges": [[1, 2]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"rank": 3, "edges": [[1, 2, 3.5]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"rank": 3, "edges": [[1, 2, 0]]})"); }), ErrorKind::InvalidLabel);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"rank": 3, "edges": [[1, 2, 1]]})"); }), ErrorKind::InvalidLabel);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"rank": 3, "edges": [[1, 4, 3]]})"); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([] { parse_diagram(R"({"rank": 3, "edges": [[2, 2, 3]]})"); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([] { load_diagram("/nonexistent/diagram.json"); }), ErrorKind::ConfigError);
}

TEST(Json, FloatsUseSeventeenDigits) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double d = u(rng);
    const std::string text = dump_json(Json{{"x", d}}, 0);
    const double back = Json::parse(text)["x"].get<double>();
    EXPECT_EQ(back, d) << text;
  }
  EXPECT_EQ(dump_json(Json{{"x", 0.1}}, 0), "{\"x\":0.10000000000000001}");
  EXPECT_EQ(dump_json(Json{{"x", std::nan("")}}, 0), "{\"x\":null}");
}

TEST(Json, IndentedOutputParses) {
  const auto r = classify_system(gamma_star());
  const std::string text = dump_json(classify_report_to_json(r));
  const Json j = Json::parse(text);
  EXPECT_EQ(j["classification"]["verdict"], "QuadraticSalem");
  EXPECT_EQ(j["euler_characteristic"], 0);
  EXPECT_EQ(j["contains_gamma_star"], true);
  ASSERT_EQ(j["notes"].size(), 1u);
  EXPECT_NE(j["notes"][0].get<std::string>().find("radius"), std::string::npos);
}

TEST(Json, NoRadiusNoteOffGammaStar) {
  const auto r = classify_system(generate_family(FamilySpec::wheel(7, 3)));
  EXPECT_TRUE(r.notes.empty());
  const Json j = classify_report_to_json(r);
  EXPECT_EQ(j["classification"]["verdict"], "Perron");
  EXPECT_FALSE(classify_report_text(r).empty());
}

TEST(Json, ReportsSerialise) {
  const CoxeterSystem s = build_system(3, {{2, 3, 3}});
  const auto seq = convergence_report(s, {7, 10, 20}, 1e-6);
  const Json j = Json::parse(dump_json(sequence_report_to_json(seq)));
  EXPECT_EQ(j["steps"].size(), 3u);
  EXPECT_FALSE(sequence_report_text(seq).empty());

  const auto t = perron_family_check(generate_family(FamilySpec::wheel(9, 3)), 64);
  const Json tj = Json::parse(dump_json(perron_family_to_json(t)));
  EXPECT_EQ(tj["a"], "2");
  EXPECT_EQ(tj["rouche"]["sample_count"], 64);
}
