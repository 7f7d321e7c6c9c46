// Runs every acceptance check and prints one PASS/FAIL line per criterion.
// Exit status 0 iff all pass.

#include <cstring>
#include <iostream>

#include "tdom/verification.hpp"

int main(int argc, char** argv) {
  tdom::VerifyOptions options;
  options.level = tdom::VerifyLevel::Full;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--level") == 0 && i + 1 < argc) {
      const char* level = argv[++i];
      if (std::strcmp(level, "quick") == 0) {
        options.level = tdom::VerifyLevel::Quick;
      } else if (std::strcmp(level, "full") != 0) {
        std::cerr << "unknown level " << level << '\n';
        return 2;
      }
    } else {
      std::cerr << "usage: acceptance [--level quick|full]\n";
      return 2;
    }
  }
  const auto report = tdom::run_verification(options, &std::cout);
  int failed = 0;
  for (const auto& c : report.checks) failed += !c.passed;
  std::cout << (failed == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failed)) << " (" << report.checks.size()
            << " criteria)\n";
  return failed == 0 ? 0 : 1;
}
