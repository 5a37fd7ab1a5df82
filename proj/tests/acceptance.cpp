// One PASS/FAIL line per acceptance criterion. Exits nonzero when a criterion
// fails that is not a documented deviation.

#include <cstdlib>
#include <iostream>
#include <string>

#include "coxgrowth/verify.hpp"

int main(int argc, char** argv) {
  coxgrowth::VerifyOptions opt;
  if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = coxgrowth::run_verify(opt, [](const coxgrowth::CriterionResult& r) {
    std::cout << coxgrowth::criterion_line(r) << std::endl;
  });
  int passed = 0, deviations = 0, failed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    else if (r.documented_deviation) ++deviations;
    else ++failed;
  }
  std::cout << "summary: " << passed << " passed, " << failed << " failed, " << deviations
            << " documented deviations (seed " << opt.seed << ")" << std::endl;
  return coxgrowth::verify_ok(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
