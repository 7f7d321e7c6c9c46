#include <map>

#include "doctest.h"
#include "support.hpp"
#include "tdom/constructions.hpp"
#include "tdom/error.hpp"
#include "tdom/uniformity.hpp"

using namespace tdom;
using tdom::testing::kind_of_error;
using Kind = UniformityVerdict::Kind;

namespace {

struct Entry {
  Graph graph;
  UniformityVerdict verdict;
};

const std::vector<Entry>& corpus_verdicts() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> out;
    for (auto& g : tdom::testing::corpus()) {
      auto v = total_uniformity(g);
      out.push_back({std::move(g), v});
    }
    return out;
  }();
  return entries;
}

}  // namespace

TEST_CASE("total uniformity verdicts") {
  auto k2 = total_uniformity(complete_graph(2));
  CHECK(k2.kind == Kind::Uniform);
  CHECK(k2.k() == 2);
  CHECK(total_uniformity(crown(3)).k() == 4);
  CHECK(total_uniformity(line_graph(complete_graph(6)).graph).k() == 4);

  auto p4 = total_uniformity(path(4));
  CHECK(p4.kind == Kind::NotUniform);
  CHECK(p4.min_length == 2);
  CHECK(p4.max_length == 4);
  CHECK_FALSE(p4.k());

  auto lk9 = total_uniformity(line_graph(complete_graph(9)).graph);
  CHECK(lk9.kind == Kind::NotUniform);
  CHECK(lk9.min_length == 6);
  CHECK(lk9.max_length >= 7);

  CHECK(total_uniformity(Graph(3, {{0, 1}})).kind == Kind::Undefined);
  CHECK(total_uniformity(Graph(0, {})).kind == Kind::Undefined);
}

TEST_CASE("reduction") {
  // Any edge of crown(3) leaves a single edge.
  const Graph c = crown(3);
  for (auto [u, v] : c.edges()) {
    auto r = reduction(c, u, v);
    CHECK(r.graph == complete_graph(2));
    CHECK(total_uniformity(r.graph).k() == 2);
  }

  auto lk6 = line_graph(complete_graph(6));
  auto r = reduction(lk6.graph, lk6.vertex_of(1, 2), lk6.vertex_of(2, 3));
  CHECK(r.graph == complete_graph(3));
  CHECK(total_uniformity(r.graph).k() == 2);
  for (Vertex v = 0; v < r.graph.order(); ++v) CHECK(r.relabel[r.original[v]] == v);

  CHECK(kind_of_error([&] { reduction(c, 0, 1); }) == ErrorKind::NotAnEdge);
}

TEST_CASE("every edge reduction of L(K9) is L(K6)") {
  const auto lk9 = line_graph(complete_graph(9));
  const auto lk6 = line_graph(complete_graph(6));
  int checked = 0;
  for (auto [x, y] : lk9.graph.edges()) {
    auto [a1, b1] = lk9.edge_labels[x];
    auto [a2, b2] = lk9.edge_labels[y];
    auto r = reduction(lk9.graph, x, y);
    REQUIRE(r.graph.order() == 15);
    // The surviving vertices of K9, renumbered 0..5 in increasing order.
    std::map<int, int> rename;
    for (int p = 0; p < 9; ++p)
      if (p != a1 && p != b1 && p != a2 && p != b2) rename.emplace(p, static_cast<int>(rename.size()));
    REQUIRE(rename.size() == 6);
    std::vector<Edge> mapped;
    for (auto [u, v] : r.graph.edges()) {
      auto [p, q] = lk9.edge_labels[r.original[u]];
      auto [s, t] = lk9.edge_labels[r.original[v]];
      mapped.emplace_back(lk6.vertex_of(rename.at(p), rename.at(q)), lk6.vertex_of(rename.at(s), rename.at(t)));
    }
    if (!(Graph(15, mapped) == lk6.graph)) FAIL("reduction differs from L(K6)");
    ++checked;
  }
  CHECK(checked == 252);
  CHECK(g_k_membership(lk6.graph) == 4);
  CHECK_FALSE(total_uniformity(lk9.graph).is_uniform());
}

TEST_CASE("G_k membership") {
  for (int n = 2; n <= 7; ++n) CHECK(g_k_membership(complete_graph(n)) == 2);
  CHECK(g_k_membership(crown(3)) == 4);
  CHECK_FALSE(g_k_membership(complete_multipartite({2, 3})));
}

TEST_CASE("chordal uniform classification") {
  CHECK(chordal_uniform_classification(disjoint_union(complete_graph(5), star(4))));
  CHECK(total_uniformity(disjoint_union(complete_graph(5), star(4))).k() == 4);
  CHECK_FALSE(chordal_uniform_classification(cycle(4)));
  CHECK(chordal_uniform_classification(star(6)));
  CHECK(total_uniformity(star(6)).k() == 2);
  CHECK_FALSE(chordal_uniform_classification(Graph(3, {{0, 1}})));
}

TEST_CASE("girth dichotomy") {
  const Graph stars = disjoint_union(star(2), star(3));
  CHECK(total_uniformity(stars).k() == 4);
  CHECK(girth_dichotomy(stars, 4) == GirthBranch::StarsUnion);
  CHECK(girth_dichotomy(line_graph(complete_graph(6)).graph, 4) == GirthBranch::GirthAtMost6);
  CHECK(girth_dichotomy(crown(3), 4) == GirthBranch::GirthAtMost6);
  CHECK(girth_dichotomy(cycle(8), 4) == GirthBranch::Neither);
}

TEST_CASE("regularity theorem check") {
  CHECK(regularity_theorem_check(line_graph(complete_graph(6)).graph));
  CHECK(is_regular(line_graph(complete_graph(6)).graph) == 8);
  CHECK(regularity_theorem_check(star(3)));
  CHECK(regularity_theorem_check(crown(4)));
  CHECK(is_regular(crown(4)) == 3);
}

TEST_CASE("double cover uniformity") {
  CHECK(double_cover_uniformity(complete_graph(3)) == 4);
  CHECK(double_cover_uniformity(complete_graph(5)) == 4);
  CHECK(double_cover_uniformity(line_graph(complete_graph(6)).graph) == 8);
  CHECK(kind_of_error([] { double_cover_uniformity(crown(3)); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of_error([] { double_cover_uniformity(disjoint_union(complete_graph(3), complete_graph(3))); }) ==
        ErrorKind::HypothesisViolated);
  CHECK(kind_of_error([] { double_cover_uniformity(cycle(5)); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("corpus: no odd k, reductions, twins") {
  long uniform = 0;
  for (const auto& [g, verdict] : corpus_verdicts()) {
    REQUIRE(verdict.kind != Kind::Undefined);
    if (!verdict.is_uniform()) continue;
    ++uniform;
    const int k = *verdict.k();
    if (k % 2 != 0) FAIL("odd uniform graph " << k);
    const bool member = is_false_twin_free(g);
    if (k < 3) continue;
    for (auto [u, v] : g.edges()) {
      const Graph h = reduction(g, u, v).graph;
      if (h.order() == 0 || !isolated_vertices(h).empty()) FAIL("isolated vertex after reduction");
      if (total_uniformity(h).k() != k - 2) FAIL("reduction is not uniform(k-2)");
      if (member && !is_false_twin_free(h)) FAIL("reduction of a G_k member has twins");
    }
  }
  CHECK(uniform > 0);
}

TEST_CASE("corpus: collapsing false twins changes neither parameter") {
  for (const auto& [g, verdict] : corpus_verdicts()) {
    if (is_false_twin_free(g)) continue;
    const Graph h = collapse_false_twins(g).graph;
    auto w = total_uniformity(h);
    if (w.min_length != verdict.min_length || w.max_length != verdict.max_length) FAIL("twin collapse changed a value");
  }
}

TEST_CASE("corpus: structure of connected uniform graphs") {
  for (const auto& [g, verdict] : corpus_verdicts()) {
    if (!verdict.is_uniform()) continue;
    const int k = *verdict.k();
    const bool connected = is_connected(g);
    if (connected && k >= 4 && is_false_twin_free(g) && !has_induced_c5_or_c6(g)) FAIL("no induced C5/C6");
    if (connected && k >= 4 && is_chordal(g).chordal) FAIL("connected chordal uniform(k>=4)");
    if (!regularity_theorem_check(g)) FAIL("irregular G_k member");
    if (girth_dichotomy(g, k) == GirthBranch::Neither) FAIL("girth dichotomy failed");
    if (is_chordal(g).chordal != false && !chordal_uniform_classification(g)) FAIL("chordal uniform graph misclassified");
  }
  for (const auto& [g, verdict] : corpus_verdicts())
    if (is_chordal(g).chordal && chordal_uniform_classification(g) != verdict.is_uniform())
      FAIL("chordal classification mismatch");
}

TEST_CASE("total 2-uniform graphs are the complete multipartite graphs (n <= 7)") {
  for (int n = 2; n <= 7; ++n) {
    auto stream = filter_graphs(enumerate_labeled_graphs(n), {.no_isolated = true});
    while (auto g = stream()) {
      const bool two = total_uniformity(*g).k() == 2;
      const bool multipartite = g->size() > 0 && is_complete_multipartite(*g).has_value();
      if (two != multipartite) FAIL("2-uniform mismatch");
    }
  }
}

TEST_CASE("open uniform graphs are total uniform") {
  int open = 0;
  for (const auto& [g, verdict] : corpus_verdicts()) {
    if (g.order() > 12) continue;
    auto lengths = open_uniformity_lengths(g);
    if (lengths.size() != 1) continue;
    ++open;
    if (verdict.k() != *lengths.begin()) FAIL("open uniform but not total uniform");
  }
  CHECK(open > 0);
}
