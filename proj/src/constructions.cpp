#include "tdom/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tdom/error.hpp"

namespace tdom {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidSize, what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  return complete_multipartite(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  require(!part_sizes.empty(), "complete multipartite graph needs at least one part");
  require(std::all_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s >= 1; }),
          "part sizes must be positive");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return complete_multipartite({1, leaves});
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph crown(int n) {
  require(n >= 2, "crown needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, n + j);
  return Graph(2 * n, edges);
}

Vertex LineGraph::vertex_of(Vertex u, Vertex v) const {
  Edge key = std::minmax(u, v);
  auto it = std::lower_bound(edge_labels.begin(), edge_labels.end(), key);
  if (it == edge_labels.end() || *it != key)
    throw Error(ErrorKind::NotAnEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  return static_cast<Vertex>(it - edge_labels.begin());
}

LineGraph line_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorKind::NoEdges, "line graph of an edgeless graph");
  LineGraph out;
  out.edge_labels = g.edges();
  const int m = static_cast<int>(out.edge_labels.size());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    auto [a, b] = out.edge_labels[i];
    for (Vertex j = i + 1; j < m; ++j) {
      auto [c, d] = out.edge_labels[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  }
  out.graph = Graph(m, edges);
  return out;
}

Graph direct_product(const Graph& g, const Graph& h) {
  const int nh = h.order();
  std::vector<Edge> edges;
  for (auto [g1, g2] : g.edges())
    for (auto [h1, h2] : h.edges()) {
      edges.emplace_back(g1 * nh + h1, g2 * nh + h2);
      edges.emplace_back(g1 * nh + h2, g2 * nh + h1);
    }
  return Graph(g.order() * nh, edges);
}

Graph bipartite_double_cover(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  return Graph(2 * n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

}  // namespace tdom
