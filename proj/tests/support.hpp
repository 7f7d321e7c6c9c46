#pragma once

// Helpers shared by the unit tests: brute-force isomorphism and the graph
// corpus the property tests sweep over.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tdom/constructions.hpp"
#include "tdom/error.hpp"
#include "tdom/graph.hpp"
#include "tdom/oracles.hpp"

namespace tdom::testing {

/// Kind of the tdom::Error thrown by fn, if any.
template <class F>
std::optional<ErrorKind> kind_of_error(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

/// Permutation search; only for n <= 8.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every labeled graph with n <= max_n and no isolated vertex.
inline std::vector<Graph> exhaustive_corpus(int max_n = 6) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    auto s = filter_graphs(enumerate_labeled_graphs(n), {.no_isolated = true});
    while (auto g = s()) out.push_back(std::move(*g));
  }
  return out;
}

inline constexpr std::uint64_t kCorpusSeed = 0x7d0c5eedULL;

/// Fixed-seed sample of n = 7 graphs without isolated vertices.
inline std::vector<Graph> sampled_n7(int count = 400) {
  std::mt19937_64 rng(kCorpusSeed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const double p = 0.2 + 0.6 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    Graph g = random_graph(7, p, rng);
    if (isolated_vertices(g).empty()) out.push_back(std::move(g));
  }
  return out;
}

/// Named constructions included in every corpus sweep.
inline std::vector<Graph> named_graphs() {
  std::vector<Graph> out;
  for (int n = 3; n <= 8; ++n) out.push_back(crown(n));
  for (int n = 2; n <= 6; ++n) out.push_back(complete_graph(n));
  out.push_back(line_graph(complete_graph(6)).graph);
  out.push_back(disjoint_union(complete_graph(3), complete_graph(4)));
  out.push_back(disjoint_union(crown(3), complete_graph(2)));
  out.push_back(complete_multipartite({2, 3, 1}));
  out.push_back(cycle(5));
  out.push_back(cycle(6));
  out.push_back(path(5));
  return out;
}

inline std::vector<Graph> corpus() {
  auto out = exhaustive_corpus(6);
  for (auto& g : sampled_n7()) out.push_back(std::move(g));
  for (auto& g : named_graphs()) out.push_back(std::move(g));
  return out;
}

}  // namespace tdom::testing
