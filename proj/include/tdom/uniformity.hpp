#pragma once

#include <optional>

#include "tdom/domination.hpp"
#include "tdom/graph.hpp"

namespace tdom {

/// Outcome of comparing gamma_t with the Grundy total domination number.
struct UniformityVerdict {
  enum class Kind { Uniform, NotUniform, Undefined };

  Kind kind = Kind::Undefined;
  /// gamma_t and Grundy number; both 0 when undefined.
  int min_length = 0;
  int max_length = 0;

  bool is_uniform() const { return kind == Kind::Uniform; }
  /// k for uniform verdicts.
  std::optional<int> k() const {
    return is_uniform() ? std::optional<int>(min_length) : std::nullopt;
  }
};

/// Undefined for graphs with isolated vertices (or no vertices at all).
UniformityVerdict total_uniformity(const Graph& g, const SolverConfig& config = {});

/// G minus N[u] + N[v] for an edge uv. Throws NotAnEdge.
InducedSubgraph reduction(const Graph& g, Vertex u, Vertex v);

/// k when G is false twin-free and total k-uniform.
std::optional<int> g_k_membership(const Graph& g, const SolverConfig& config = {});

/// Every component is complete multipartite with at most one part of size
/// greater than one (and has at least two vertices).
bool chordal_uniform_classification(const Graph& g);

/// Every component is a star K_{1,m}, m >= 1.
bool is_star_forest(const Graph& g);

enum class GirthBranch { StarsUnion, GirthAtMost6, Neither };

/// Which side of the stars-or-short-girth dichotomy a total k-uniform graph
/// falls on. StarsUnion wins when both hold; Neither means the dichotomy
/// failed for this input.
GirthBranch girth_dichotomy(const Graph& g, int k);

/// Connected + false twin-free + uniform implies regular. Returns false only
/// for a graph meeting every hypothesis that is not regular.
bool regularity_theorem_check(const Graph& g, const SolverConfig& config = {});

/// Uniformity parameter of G x K2 for a connected, non-bipartite, total
/// k-uniform G; nullopt if the double cover is not uniform. Throws
/// HypothesisViolated when G misses a hypothesis.
std::optional<int> double_cover_uniformity(const Graph& g, const SolverConfig& config = {});

}  // namespace tdom
