#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>

#include "tdom/graph.hpp"

namespace tdom {

/// Knobs shared by the exact solvers. Defaults give exact answers with no
/// deadline.
struct SolverConfig {
  /// Solvers throw TimedOut once this passes; they never return a partial
  /// answer.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Approximate bound on the footprint memo; exceeding it throws
  /// ResourceLimit.
  std::size_t memo_limit_bytes = std::size_t{2} << 30;
  /// Solve connected components separately and combine (both parameters
  /// are additive over components).
  bool split_components = true;
  /// Disable the footprint memo (exponentially slower; used to cross-check).
  bool memoize = true;

  static SolverConfig with_time_limit(std::chrono::milliseconds limit);
};

/// Union of N(v) over the given vertices.
VertexSet footprint(const Graph& g, const VertexSequence& seq);

bool is_total_dominating_set(const Graph& g, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& s);

/// Every entry after the first has a neighbor outside the footprint of the
/// entries before it. A single entry is always legal, even when isolated.
/// Throws DuplicateVertex / IndexOutOfRange.
bool is_legal_sequence(const Graph& g, const VertexSequence& seq);
/// Legal and its footprint is all of V(G).
bool is_total_dominating_sequence(const Graph& g, const VertexSequence& seq);

struct TotalDominationResult {
  int value = 0;
  /// Lexicographically least minimum total dominating set.
  VertexSet witness;
};

struct GrundyResult {
  int value = 0;
  VertexSequence witness;
};

/// gamma_t. Throws EmptyGraph / IsolatedVertexPresent.
TotalDominationResult total_domination_number(const Graph& g, const SolverConfig& config = {});
/// Grundy total domination number. Throws EmptyGraph / IsolatedVertexPresent.
GrundyResult grundy_total_domination_number(const Graph& g, const SolverConfig& config = {});

struct DominationReport {
  int gamma_t = 0;
  VertexSet gamma_t_witness;
  int grundy = 0;
  VertexSequence grundy_witness;
};

DominationReport domination_report(const Graph& g, const SolverConfig& config = {});

/// Greedy completion: repeatedly appends the lowest vertex that still has an
/// uncovered neighbor. Throws IllegalPrefix / IsolatedVertexPresent.
VertexSequence extend_to_total_dominating_sequence(const Graph& g, const VertexSequence& prefix);

/// Some total dominating sequence of exactly `length` entries, if one exists.
std::optional<VertexSequence> exists_tds_of_length(const Graph& g, int length,
                                                   const SolverConfig& config = {});

/// A total dominating sequence of even length.
VertexSequence even_length_tds(const Graph& g, const SolverConfig& config = {});

/// Lengths of legal sequences whose vertex set dominates G, by exhaustive
/// enumeration. Throws TooLarge above max_order vertices.
std::set<int> open_uniformity_lengths(const Graph& g, int max_order = 12);

}  // namespace tdom
