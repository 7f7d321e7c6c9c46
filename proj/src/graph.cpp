#include "tdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "tdom/error.hpp"

namespace tdom {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error(ErrorKind::InvalidSize, "negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                  ") outside graph of order " + std::to_string(n));
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (!adj_[u].contains(v)) {
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++edge_count_;
    }
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside graph of order " + std::to_string(order()));
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
  InducedSubgraph out;
  out.relabel.assign(static_cast<std::size_t>(g.order()), std::nullopt);
  for (Vertex v : kept) {
    out.relabel[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (out.relabel[u] && out.relabel[v]) edges.emplace_back(*out.relabel[u], *out.relabel[v]);
  out.graph = Graph(static_cast<int>(out.original.size()), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order())
    throw Error(ErrorKind::IndexOutOfRange, "vertex set universe does not match graph order");
  return induced_subgraph(g, removed.complement());
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).empty()) out.insert(v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen.contains(root)) continue;
    VertexSet comp(g.order());
    comp.insert(root);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(g.order());
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() >= 1 && connected_components(g).size() == 1; }

namespace {

// BFS two-coloring; on conflict returns the offending edge.
struct Coloring {
  std::vector<int> color;
  std::vector<Vertex> parent;
  std::optional<Edge> conflict;
};

Coloring two_color(const Graph& g) {
  const int n = g.order();
  Coloring c{std::vector<int>(n, -1), std::vector<Vertex>(n, -1), std::nullopt};
  for (Vertex root = 0; root < n; ++root) {
    if (c.color[root] >= 0) continue;
    c.color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (c.color[w] < 0) {
          c.color[w] = 1 - c.color[v];
          c.parent[w] = v;
          queue.push_back(w);
        } else if (c.color[w] == c.color[v] && !c.conflict) {
          c.conflict = Edge{v, w};
        }
      }
    }
  }
  return c;
}

}  // namespace

std::optional<Bipartition> is_bipartite(const Graph& g) {
  auto c = two_color(g);
  if (c.conflict) return std::nullopt;
  Bipartition parts{VertexSet(g.order()), VertexSet(g.order())};
  for (Vertex v = 0; v < g.order(); ++v) (c.color[v] == 0 ? parts.x : parts.y).insert(v);
  return parts;
}

std::optional<VertexSequence> find_odd_cycle(const Graph& g) {
  auto c = two_color(g);
  if (!c.conflict) return std::nullopt;
  // Both endpoints have equal color, so their tree paths to the common
  // ancestor have equal parity; path(u) + reversed path(v) is odd.
  auto [u, v] = *c.conflict;
  auto to_root = [&](Vertex x) {
    VertexSequence path{x};
    while (c.parent[path.back()] >= 0) path.push_back(c.parent[path.back()]);
    return path;
  };
  VertexSequence pu = to_root(u), pv = to_root(v);
  while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
    pu.pop_back();
    pv.pop_back();
  }
  // pu and pv now end at the same vertex (the lowest common ancestor).
  VertexSequence cycle = pu;
  for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
  return cycle;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (best && 2 * dist[v] >= *best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; ties go to the lowest index.
  std::vector<int> weight(n, 0);
  VertexSet unnumbered = VertexSet::full(n);
  VertexSequence visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v : unnumbered)
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    visit.push_back(pick);
    unnumbered.erase(pick);
    for (Vertex w : g.neighbors(pick))
      if (unnumbered.contains(w)) ++weight[w];
  }
  VertexSequence order(visit.rbegin(), visit.rend());

  // Each vertex's later neighbors in the ordering must form a clique.
  VertexSet later = VertexSet::full(n);
  for (Vertex v : order) {
    later.erase(v);
    VertexSet nbrs = g.neighbors(v) & later;
    for (Vertex u : nbrs) {
      VertexSet rest = nbrs;
      rest.erase(u);
      if (!rest.is_subset_of(g.neighbors(u))) return {false, {}};
    }
  }
  return {true, std::move(order)};
}

bool TwinPartition::is_trivial() const {
  return std::all_of(classes.begin(), classes.end(), [](const VertexSet& c) { return c.size() == 1; });
}

TwinPartition false_twin_partition(const Graph& g) {
  TwinPartition out;
  std::map<std::vector<VertexSet::Block>, std::size_t> index;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, fresh] = index.try_emplace(g.neighbors(v).blocks(), out.classes.size());
    if (fresh) out.classes.emplace_back(g.order());
    out.classes[it->second].insert(v);
  }
  return out;
}

bool is_false_twin_free(const Graph& g) { return false_twin_partition(g).is_trivial(); }

InducedSubgraph collapse_false_twins(const Graph& g) {
  VertexSet keep(g.order());
  for (const auto& cls : false_twin_partition(g).classes) keep.insert(cls.first());
  return induced_subgraph(g, keep);
}

namespace {

bool extend_induced_cycle(const Graph& g, VertexSequence& path, VertexSet& on_path, int length) {
  const Vertex start = path.front();
  const Vertex tail = path.back();
  const bool closing = static_cast<int>(path.size()) == length - 1;
  // Vertices already on the path other than the tail; a new vertex must
  // avoid them, except that the closing vertex must also touch the start.
  VertexSet forbidden = on_path;
  forbidden.erase(tail);
  if (closing) forbidden.erase(start);
  for (Vertex w : g.neighbors(tail)) {
    if (w <= start || on_path.contains(w)) continue;
    const VertexSet& nw = g.neighbors(w);
    if (nw.intersects(forbidden)) continue;
    if (closing) {
      if (!nw.contains(start) || w < path[1]) continue;
      path.push_back(w);
      return true;
    }
    path.push_back(w);
    on_path.insert(w);
    if (extend_induced_cycle(g, path, on_path, length)) return true;
    on_path.erase(w);
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSequence> has_induced_c5_or_c6(const Graph& g) {
  for (int length : {5, 6}) {
    for (Vertex start = 0; start < g.order(); ++start) {
      VertexSequence path{start};
      VertexSet on_path(g.order(), {start});
      if (extend_induced_cycle(g, path, on_path, length)) return path;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<VertexSet>> is_complete_multipartite(const Graph& g) {
  auto parts = false_twin_partition(g).classes;
  const VertexSet all = g.vertices();
  for (const auto& part : parts)
    if (!(g.neighbors(part.first()) == all - part)) return std::nullopt;
  return parts;
}

}  // namespace tdom
