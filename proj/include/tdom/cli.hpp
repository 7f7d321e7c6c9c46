#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdom/error.hpp"
#include "tdom/graph_io.hpp"
#include "tdom/verification.hpp"

namespace tdom::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // usage errors, failed verification, other errors
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUndefined = 3;  // isolated vertices / empty graph
inline constexpr int kExitTimeout = 4;
inline constexpr int kExitResourceLimit = 5;

int exit_code_for(ErrorKind kind);

struct ConstructArgs {
  std::string name;
  std::vector<std::string> params;
  /// g6 | edges | dot
  std::string format = "g6";
  int max_n = 512;
};

struct ComputeArgs {
  std::optional<std::string> input;
  GraphFormat format = GraphFormat::Auto;
  std::optional<double> time_limit_seconds;
  int max_n = 64;
  std::size_t memo_limit_mib = 2048;
};

struct ScanArgs {
  std::optional<int> k;
  int parallel = 1;
  std::uint64_t progress_every = 0;
  std::optional<double> time_limit_seconds;
  int max_n = 64;
  std::size_t memo_limit_mib = 2048;
};

struct VerifyArgs {
  VerifyLevel level = VerifyLevel::Quick;
  int threads = 2;
};

int cmd_construct(const ConstructArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_compute(const ComputeArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
/// Reads graph6 lines and echoes the total k-uniform ones in input order,
/// independent of the worker count.
int cmd_scan(const ScanArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

/// Worker count from TDOM_THREADS, or 1.
int default_threads();

/// Full command line entry point.
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tdom::cli
