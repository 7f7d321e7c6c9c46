#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tdom/vertex_set.hpp"

namespace tdom {

using Edge = std::pair<Vertex, Vertex>;
/// Ordered list of distinct vertices (legal / total dominating sequences,
/// induced-cycle witnesses).
using VertexSequence = std::vector<Vertex>;

/// Immutable finite simple graph stored as one open-neighborhood bitset per
/// vertex. Vertices are 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Throws IndexOutOfRange for endpoints >= n and SelfLoop for (v, v).
  /// Duplicate edges (in either orientation) collapse.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  /// N(v).
  const VertexSet& neighbors(Vertex v) const;
  /// N[v] = N(v) + v.
  VertexSet closed_neighbors(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adj_;
  int edge_count_ = 0;
};

inline const VertexSet& open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.closed_neighbors(v); }

/// Induced subgraph after deleting a vertex set. Survivors keep their
/// relative order.
struct InducedSubgraph {
  Graph graph;
  /// old index -> new index, or nullopt for removed vertices.
  std::vector<std::optional<Vertex>> relabel;
  /// new index -> old index.
  std::vector<Vertex> original;
};

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept);

VertexSet isolated_vertices(const Graph& g);

/// Components ordered by their lowest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  VertexSet x;
  VertexSet y;
};

/// Two-coloring with the lowest vertex of every component placed in x.
std::optional<Bipartition> is_bipartite(const Graph& g);
/// Closed walk of odd length (v0, v1, ..., v_{2j}) with consecutive entries
/// and (last, first) adjacent; nullopt iff the graph is bipartite.
std::optional<VertexSequence> find_odd_cycle(const Graph& g);

/// Common degree, or nullopt. The 0-vertex graph reports 0.
std::optional<int> is_regular(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal, empty otherwise.
  VertexSequence elimination_order;
};

ChordalityResult is_chordal(const Graph& g);

/// Classes of vertices with equal open neighborhoods, ordered by lowest
/// member.
struct TwinPartition {
  std::vector<VertexSet> classes;

  bool is_trivial() const;
};

TwinPartition false_twin_partition(const Graph& g);
bool is_false_twin_free(const Graph& g);
/// Keeps the lowest vertex of each twin class.
InducedSubgraph collapse_false_twins(const Graph& g);

/// Vertices inducing exactly a C5 (searched first) or a C6, listed in cycle
/// order starting from the smallest vertex; the first such tuple in
/// lexicographic order is reported.
std::optional<VertexSequence> has_induced_c5_or_c6(const Graph& g);

/// Parts such that u ~ v iff u and v lie in different parts, ordered by
/// lowest member.
std::optional<std::vector<VertexSet>> is_complete_multipartite(const Graph& g);

}  // namespace tdom
