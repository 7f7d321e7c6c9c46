#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

enum class VerifyLevel { Quick, Full };

/// Builders the checks obtain their named graphs from; tests swap one out to
/// confirm a broken construction is caught.
struct GraphFactory {
  std::function<Graph(int)> complete;
  std::function<Graph(int)> crown;
  std::function<Graph(const std::vector<int>&)> multipartite;
  /// L(K_n) in lexicographic pair order.
  std::function<Graph(int)> line_complete;
  std::function<Graph(const Graph&)> double_cover;

  static GraphFactory standard();
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

struct VerificationReport {
  VerifyLevel level = VerifyLevel::Quick;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  GraphFactory factory = GraphFactory::standard();
  /// Workers used by the scan-determinism check.
  int threads = 2;
};

/// "[PASS] 01 name  (0.12s / budget 10s)  detail"
std::string format_check(const CheckResult& r);

/// Runs the numbered checks in order; each result is printed to `progress`
/// (if given) as soon as it is known.
VerificationReport run_verification(const VerifyOptions& options, std::ostream* progress = nullptr);

}  // namespace tdom
