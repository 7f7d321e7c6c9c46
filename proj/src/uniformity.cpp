#include "tdom/uniformity.hpp"

#include <string>

#include "tdom/constructions.hpp"
#include "tdom/error.hpp"

namespace tdom {

UniformityVerdict total_uniformity(const Graph& g, const SolverConfig& config) {
  if (g.order() == 0 || !isolated_vertices(g).empty()) return {};
  const int lo = total_domination_number(g, config).value;
  const int hi = grundy_total_domination_number(g, config).value;
  return {lo == hi ? UniformityVerdict::Kind::Uniform : UniformityVerdict::Kind::NotUniform, lo, hi};
}

InducedSubgraph reduction(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw Error(ErrorKind::NotAnEdge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  return remove_vertices(g, g.closed_neighbors(u) | g.closed_neighbors(v));
}

std::optional<int> g_k_membership(const Graph& g, const SolverConfig& config) {
  if (!is_false_twin_free(g)) return std::nullopt;
  return total_uniformity(g, config).k();
}

bool chordal_uniform_classification(const Graph& g) {
  if (g.order() == 0) return false;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) return false;
    auto parts = is_complete_multipartite(induced_subgraph(g, comp).graph);
    if (!parts) return false;
    int big = 0;
    for (const auto& p : *parts) big += p.size() > 1;
    if (big > 1) return false;
  }
  return true;
}

bool is_star_forest(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    const int m = comp.size() - 1;
    if (m < 1) return false;
    const Graph c = induced_subgraph(g, comp).graph;
    // A connected graph on m+1 vertices with m edges and a vertex of degree m.
    if (c.size() != m) return false;
    bool centered = false;
    for (Vertex v = 0; v < c.order(); ++v) centered = centered || c.degree(v) == m;
    if (!centered) return false;
  }
  return g.order() > 0;
}

GirthBranch girth_dichotomy(const Graph& g, int k) {
  if (k % 2 == 0 && is_star_forest(g) && static_cast<int>(connected_components(g).size()) == k / 2)
    return GirthBranch::StarsUnion;
  if (auto gg = girth(g); gg && *gg <= 6) return GirthBranch::GirthAtMost6;
  return GirthBranch::Neither;
}

bool regularity_theorem_check(const Graph& g, const SolverConfig& config) {
  if (!is_connected(g) || !is_false_twin_free(g)) return true;
  if (!total_uniformity(g, config).is_uniform()) return true;
  return is_regular(g).has_value();
}

std::optional<int> double_cover_uniformity(const Graph& g, const SolverConfig& config) {
  if (!is_connected(g)) throw Error(ErrorKind::HypothesisViolated, "graph is not connected");
  if (is_bipartite(g)) throw Error(ErrorKind::HypothesisViolated, "graph is bipartite");
  if (!total_uniformity(g, config).is_uniform())
    throw Error(ErrorKind::HypothesisViolated, "graph is not total k-uniform");
  return total_uniformity(bipartite_double_cover(g), config).k();
}

}  // namespace tdom
