#pragma once

#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

// Index layouts below are part of the contract: witnesses printed by the
// tools refer to them.

/// K_n, n >= 1.
Graph complete_graph(int n);
/// Parts occupy consecutive index blocks in the given order.
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// K_{1,leaves}: center 0, leaves 1..leaves.
Graph star(int leaves);
/// P_n: 0-1-...-(n-1), n >= 1.
Graph path(int n);
/// C_n, n >= 3.
Graph cycle(int n);
/// K_{n,n} minus the matching {i, n+i}; a_i = i, b_j = n+j, a_i ~ b_j iff i != j.
Graph crown(int n);

struct LineGraph {
  Graph graph;
  /// Vertex i of the line graph is edge edge_labels[i] of the source
  /// (lexicographic order).
  std::vector<Edge> edge_labels;

  /// Index of source edge {u, v}; throws NotAnEdge.
  Vertex vertex_of(Vertex u, Vertex v) const;
};

LineGraph line_graph(const Graph& g);

/// (g, h) -> g * |V(H)| + h; adjacent iff gg' in E(G) and hh' in E(H).
Graph direct_product(const Graph& g, const Graph& h);
/// G x K2 laid out as v_i' = i, v_i'' = n + i, with v_i' ~ v_j'' iff v_i v_j in E(G).
Graph bipartite_double_cover(const Graph& g);
/// H's vertices shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace tdom
