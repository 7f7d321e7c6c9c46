#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "tdom/graph.hpp"

namespace tdom {

// Slow reference computations. Nothing here shares code with the solvers
// in domination.hpp: legality and domination are re-derived from an
// adjacency matrix.

/// Maximum length over every legal sequence that totally dominates G,
/// enumerated explicitly. n <= 10, else TooLarge.
int brute_grundy(const Graph& g);

/// Smallest total dominating subset by increasing-size enumeration.
/// n <= 20, else TooLarge.
int brute_gamma_t(const Graph& g);

/// Lazy stream of graphs; nullopt marks the end.
using GraphStream = std::function<std::optional<Graph>()>;

/// All 2^C(n,2) labeled graphs on n <= 7 vertices. Bit i of the running
/// edge mask selects the i-th pair (u, v), u < v, in lexicographic order;
/// masks are visited 0, 1, 2, ...
GraphStream enumerate_labeled_graphs(int n);

struct GraphFilter {
  bool no_isolated = false;
  bool connected = false;
  bool false_twin_free = false;
  bool chordal = false;

  bool accepts(const Graph& g) const;
};

GraphStream filter_graphs(GraphStream source, GraphFilter filter);

/// G(n, p) sample drawn from raw generator output so the same seed yields
/// the same graph on every standard library.
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace tdom
