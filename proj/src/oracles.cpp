#include "tdom/oracles.hpp"

#include <memory>
#include <string>
#include <vector>

#include "tdom/error.hpp"

namespace tdom {

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

void guard(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw Error(ErrorKind::TooLarge, std::string(what) + " is limited to " + std::to_string(limit) + " vertices");
  if (g.order() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) throw Error(ErrorKind::IsolatedVertexPresent, "isolated vertex");
}

struct SequenceEnumerator {
  const Matrix& adj;
  int n;
  std::vector<int> times_covered;
  std::vector<bool> used;
  int best = 0;

  bool everything_covered() const {
    for (int c : times_covered)
      if (c == 0) return false;
    return true;
  }

  bool has_uncovered_neighbor(int v) const {
    for (int w = 0; w < n; ++w)
      if (adj[v][w] && times_covered[w] == 0) return true;
    return false;
  }

  void play(int v, int delta) {
    used[v] = delta > 0;
    for (int w = 0; w < n; ++w)
      if (adj[v][w]) times_covered[w] += delta;
  }

  void extend(int length) {
    if (everything_covered() && length > best) best = length;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (length > 0 && !has_uncovered_neighbor(v)) continue;
      play(v, +1);
      extend(length + 1);
      play(v, -1);
    }
  }
};

}  // namespace

int brute_grundy(const Graph& g) {
  guard(g, 10, "brute_grundy");
  const Matrix adj = adjacency_matrix(g);
  SequenceEnumerator e{adj, g.order(), std::vector<int>(g.order(), 0), std::vector<bool>(g.order(), false)};
  e.extend(0);
  return e.best;
}

int brute_gamma_t(const Graph& g) {
  guard(g, 20, "brute_gamma_t");
  const int n = g.order();
  const Matrix adj = adjacency_matrix(g);
  auto totally_dominates = [&](std::uint32_t subset) {
    for (int w = 0; w < n; ++w) {
      bool hit = false;
      for (int v = 0; v < n && !hit; ++v) hit = ((subset >> v) & 1u) && adj[v][w];
      if (!hit) return false;
    }
    return true;
  };
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack: next subset with the same popcount.
    for (std::uint32_t s = (std::uint32_t{1} << k) - 1; s < limit;) {
      if (totally_dominates(s)) return k;
      const std::uint32_t c = s & -s;
      const std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  throw Error(ErrorKind::IsolatedVertexPresent, "no total dominating set");
}

GraphStream enumerate_labeled_graphs(int n) {
  if (n < 0 || n > 7) throw Error(ErrorKind::TooLarge, "labeled enumeration supports 0 <= n <= 7");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  return [n, pairs = std::move(pairs), total, mask = std::uint64_t{0}]() mutable -> std::optional<Graph> {
    if (mask >= total) return std::nullopt;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) edges.push_back(pairs[i]);
    ++mask;
    return Graph(n, edges);
  };
}

bool GraphFilter::accepts(const Graph& g) const {
  if (no_isolated && !isolated_vertices(g).empty()) return false;
  if (connected && !is_connected(g)) return false;
  if (false_twin_free && !is_false_twin_free(g)) return false;
  if (chordal && !is_chordal(g).chordal) return false;
  return true;
}

GraphStream filter_graphs(GraphStream source, GraphFilter filter) {
  return [source = std::move(source), filter]() mutable -> std::optional<Graph> {
    while (auto g = source())
      if (filter.accepts(*g)) return g;
    return std::nullopt;
  };
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace tdom
