// coxgrowth: classify growth rates of two-dimensional Coxeter systems.
// Exit codes: 0 success, 1 internal anomaly, 2 input or hypothesis rejection.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/coxgrowth.hpp"

using namespace coxgrowth;

namespace {

struct Config {
  std::string input;
  std::string format = "text";
  unsigned precision = 128;
  std::string epsilon = "1e-6";
  std::vector<long> schedule{7, 10, 20, 50, 100, 500, 2000};
  std::uint64_t seed = 42;
  int max_rank = 4;
  long max_label = 4;
  std::string chi;
  std::string kind;
  int size = 0;
  int copies = 0;
  long label = 3;
  bool check = false;
  int samples = 10000;
  std::size_t terms = 20;
};

void emit(const Config& c, const Json& j, const std::string& text) {
  if (c.format == "json") std::cout << dump_json(j) << "\n";
  else std::cout << text;
}

double parse_epsilon(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::ConfigError, "epsilon is not a number: " + s);
  }
  require(used == s.size() && std::isfinite(v) && v > 0, ErrorKind::ConfigError, "epsilon must be a positive decimal, got " + s);
  return v;
}

/// "k", "a:b", ":b" or "a:" as an inclusive chi range.
std::pair<int, int> parse_chi(const std::string& s) {
  if (s.empty()) return {-1000, 1000};
  auto num = [&](const std::string& t, int dflt) {
    if (t.empty()) return dflt;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::ConfigError, "bad --chi value: " + s);
    }
    require(used == t.size(), ErrorKind::ConfigError, "bad --chi value: " + s);
    return v;
  };
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int v = num(s, 0);
    return {v, v};
  }
  return {num(s.substr(0, colon), -1000), num(s.substr(colon + 1), 1000)};
}

PerronOptions perron_options(const Config& c) { return PerronOptions{c.precision, 6}; }

int run_classify(const Config& c) {
  const ClassifyReport r = classify_system(load_diagram(c.input), perron_options(c));
  emit(c, classify_report_to_json(r), classify_report_text(r));
  return 0;
}

int run_growth(const Config& c) {
  const CoxeterSystem s = load_diagram(c.input);
  const GrowthSeries gs = steinberg_series(s);
  const GrowthRate rate = growth_rate(gs);
  const auto a = series_coefficients(gs, c.terms);
  Json coeffs = Json::array();
  std::string line;
  for (const auto& v : a) {
    coeffs.push_back(v.get_str());
    line += (line.empty() ? "" : ", ") + v.get_str();
  }
  Json j{{"system", diagram_to_json(s)},
         {"chi", gs.chi()},
         {"chi_case", std::string(to_string(gs.chi_case))},
         {"canonical", Json{{"numerator", polynomial_to_json(gs.canonical_numerator)},
                            {"denominator", polynomial_to_json(gs.canonical_denominator)}}},
         {"reduced", Json{{"numerator", polynomial_to_json(gs.numerator())}, {"denominator", polynomial_to_json(gs.denominator())}}},
         {"tau", interval_to_json(rate.isolating)},
         {"radius", interval_to_json(rate.radius)},
         {"coefficients", coeffs}};
  std::string text = "system     " + describe(s) + "\n";
  text += "1/f(1/z)   (" + gs.canonical_numerator.to_string() + ") / (" + gs.canonical_denominator.to_string() + ")\n";
  text += "reduced    (" + gs.numerator().to_string() + ") / (" + gs.denominator().to_string() + ")\n";
  text += "tau        " + format_double(rate.approx, 15) + "\n";
  text += "a_0..      " + line + "\n";
  emit(c, j, text);
  return 0;
}

int run_sequence(const Config& c) {
  const SequenceReport r = convergence_report(load_diagram(c.input), c.schedule, parse_epsilon(c.epsilon));
  emit(c, sequence_report_to_json(r), sequence_report_text(r));
  return 0;
}

int run_family(const Config& c) {
  const FamilyKind kind = family_kind_from_string(c.kind);
  FamilySpec spec;
  switch (kind) {
    case FamilyKind::Wheel: spec = FamilySpec::wheel(c.size, c.label); break;
    case FamilyKind::Windmill: spec = FamilySpec::windmill(c.size, c.copies, c.label); break;
    case FamilyKind::Friendship: spec = FamilySpec::friendship(c.copies, c.label); break;
    case FamilyKind::TriangulatedBouquet: spec = FamilySpec::bouquet(c.size, c.copies, c.label); break;
  }
  const CoxeterSystem s = generate_family(spec);
  if (!c.check) {
    // The diagram itself, ready to feed back through --input.
    std::cout << dump_json(diagram_to_json(s)) << "\n";
    return 0;
  }
  const PerronFamilyReport r = perron_family_check(s, c.samples);
  std::string text = spec.name() + "  N = " + std::to_string(r.n) + ", E = " + std::to_string(r.e) + ", a = " + r.a.get_str() +
                     " (bound " + format_double(hypothesis_bound(), 17) + ")\n";
  text += "contains G*      " + std::string(r.gamma_star_witness ? "yes" : "no") + "\n";
  text += "hypotheses       " + std::string(r.hypotheses_pass ? "pass" : "fail") + "\n";
  if (r.a > 1) {
    text += "Lambda_kN        " + format_double(r.rouche.capital_lambda, 12) + "\n";
    text += "min circle delta " + format_double(r.rouche.min_delta, 12) + " over " + std::to_string(r.rouche.circle_samples.size()) +
            " angles\n";
  }
  text += "tau              " + format_double(r.classification.rate.approx, 15) + "\n";
  text += "verdict          " + std::string(to_string(r.classification.headline)) + "\n";
  Json j = perron_family_to_json(r);
  j["family"] = spec.name();
  j["system"] = diagram_to_json(s);
  emit(c, j, text);
  return 0;
}

int run_scan(const Config& c) {
  ScanOptions opt;
  opt.max_rank = c.max_rank;
  opt.max_label = c.max_label;
  std::tie(opt.min_chi, opt.max_chi) = parse_chi(c.chi);
  const ScanResult r = perron_scan(opt);
  for (const auto& rec : r.records) std::cout << dump_json(scan_record_to_json(rec), 0) << "\n";
  std::cerr << r.systems << " systems, " << r.distinct_censuses << " growth censuses, " << r.non_perron
            << " without a Perron certificate\n";
  return r.non_perron == 0 ? 0 : 1;
}

int run_verify_command(const Config& c) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.precision_bits = c.precision;
  opt.epsilon = parse_epsilon(c.epsilon);
  const bool text = c.format != "json";
  const auto rs = run_verify(opt, [&](const CriterionResult& r) {
    if (text) std::cout << criterion_line(r) << std::endl;
  });
  if (!text) std::cout << dump_json(verify_to_json(rs, opt)) << "\n";
  return verify_ok(rs) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth rates of two-dimensional Coxeter systems"};
  app.require_subcommand(1);
  Config c;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", c.precision, "Starting precision in bits for root certification")
        ->check(CLI::IsMember({64u, 128u, 256u, 512u}));
  };

  auto* classify = app.add_subcommand("classify", "Invariants, growth series and growth-rate classification");
  classify->add_option("--input", c.input, "Diagram JSON file")->required();
  add_format(classify);
  add_precision(classify);

  auto* growth = app.add_subcommand("growth", "Growth series and its first coefficients");
  growth->add_option("--input", c.input, "Diagram JSON file")->required();
  growth->add_option("--terms", c.terms, "Number of series coefficients")->check(CLI::Range(1, 100000));
  add_format(growth);

  auto* sequence = app.add_subcommand("sequence", "Growth rates along the flattening sequence");
  sequence->add_option("--input", c.input, "Diagram JSON file")->required();
  sequence->add_option("--schedule", c.schedule, "Comma-separated labels n, strictly increasing")->delimiter(',');
  sequence->add_option("--epsilon", c.epsilon, "Convergence tolerance");
  add_format(sequence);

  auto* family = app.add_subcommand("family", "Generate a graph family; --check runs the hypothesis and Rouche report");
  family->add_option("--kind", c.kind, "wheel | windmill | friendship | bouquet")->required();
  family->add_option("--size", c.size, "Wheel rank, clique size, or cycle length");
  family->add_option("--copies", c.copies, "Number of glued copies");
  family->add_option("--label", c.label, "Uniform edge label k >= 3");
  family->add_flag("--check", c.check, "Report hypotheses, Rouche diagnostics and the verdict");
  family->add_option("--samples", c.samples, "Circle samples for the Rouche check")->check(CLI::Range(1, 10000000));
  add_format(family);

  auto* scan = app.add_subcommand("scan", "Enumerate small systems and certify Perron growth rates (JSON lines)");
  scan->add_option("--max-rank", c.max_rank, "Largest rank, 3..8");
  scan->add_option("--max-label", c.max_label, "Largest finite label, 2..7");
  scan->add_option("--chi", c.chi, "Euler characteristic: k, a:b, :b or a:");

  auto* verify = app.add_subcommand("verify", "Run the acceptance grid and property suites");
  verify->add_option("--seed", c.seed, "Seed for randomized suites");
  verify->add_option("--epsilon", c.epsilon, "Convergence tolerance");
  add_precision(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) return run_classify(c);
    if (*growth) return run_growth(c);
    if (*sequence) return run_sequence(c);
    if (*family) return run_family(c);
    if (*scan) return run_scan(c);
    if (*verify) return run_verify_command(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_rejection() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
