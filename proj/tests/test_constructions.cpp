#include "doctest.h"
#include "support.hpp"
#include "tdom/constructions.hpp"
#include "tdom/domination.hpp"
#include "tdom/error.hpp"
#include "tdom/oracles.hpp"

using namespace tdom;
using tdom::testing::isomorphic;

TEST_CASE("basic families") {
  CHECK(complete_multipartite({1, 1, 1}) == complete_graph(3));
  CHECK(star(3) == complete_multipartite({1, 3}));
  CHECK(isomorphic(cycle(4), complete_multipartite({2, 2})));
  CHECK(path(1).order() == 1);
  CHECK(path(4).size() == 3);
  CHECK(cycle(7).size() == 7);

  auto invalid = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::InvalidSize;
    }
    return false;
  };
  CHECK(invalid([] { complete_graph(0); }));
  CHECK(invalid([] { cycle(2); }));
  CHECK(invalid([] { complete_multipartite({}); }));
  CHECK(invalid([] { complete_multipartite({2, 0}); }));
  CHECK(invalid([] { crown(1); }));
  CHECK(invalid([] { star(0); }));
}

TEST_CASE("crown graphs") {
  CHECK(isomorphic(crown(3), cycle(6)));
  CHECK(isomorphic(crown(2), disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(crown(4).order() == 8);
  CHECK(is_regular(crown(4)) == 3);
  const Graph c = crown(5);
  for (Vertex i = 0; i < 5; ++i)
    for (Vertex j = 0; j < 5; ++j) CHECK(c.has_edge(i, 5 + j) == (i != j));
}

TEST_CASE("crown(n) is the double cover of K_n under the shared layout") {
  for (int n = 2; n <= 8; ++n) CHECK(crown(n) == bipartite_double_cover(complete_graph(n)));
}

TEST_CASE("line graphs") {
  CHECK(line_graph(complete_graph(3)).graph == complete_graph(3));
  CHECK(line_graph(path(3)).graph == complete_graph(2));

  auto lk6 = line_graph(complete_graph(6));
  CHECK(lk6.graph.order() == 15);
  CHECK(is_regular(lk6.graph) == 8);
  CHECK(lk6.edge_labels.front() == Edge{0, 1});
  CHECK(lk6.vertex_of(4, 2) == lk6.vertex_of(2, 4));
  CHECK(lk6.edge_labels[lk6.vertex_of(2, 4)] == Edge{2, 4});

  try {
    line_graph(Graph(3, {}));
    FAIL("expected NoEdges");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoEdges);
  }
}

TEST_CASE("line graph degrees are deg(u) + deg(v) - 2") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
    if (g.size() == 0) continue;
    auto lg = line_graph(g);
    for (Vertex e = 0; e < lg.graph.order(); ++e) {
      auto [u, v] = lg.edge_labels[e];
      CHECK(lg.graph.degree(e) == g.degree(u) + g.degree(v) - 2);
    }
  }
}

TEST_CASE("direct products") {
  const Graph k2 = complete_graph(2);
  CHECK(isomorphic(direct_product(k2, k2), disjoint_union(k2, k2)));
  CHECK(isomorphic(direct_product(complete_graph(3), k2), cycle(6)));
  // Both factors connected and bipartite: exactly two components.
  CHECK(connected_components(direct_product(path(4), cycle(6))).size() == 2);
  CHECK(connected_components(direct_product(k2, k2)).size() == 2);

  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
    Graph h = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
    Graph p = direct_product(g, h);
    CHECK(p.order() == g.order() * h.order());
    CHECK(p.size() == 2 * g.size() * h.size());
    for (auto [g1, g2] : g.edges())
      for (auto [h1, h2] : h.edges()) CHECK(p.has_edge(g1 * h.order() + h1, g2 * h.order() + h2));
  }
}

TEST_CASE("bipartite double cover") {
  // Triangle 1-2-3 with pendant 4, as in the drawing; primes are the first
  // block, double primes the second.
  const Graph g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const Graph drawn(8, {{0, 5}, {0, 6}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 7}, {3, 6}});
  CHECK(bipartite_double_cover(g) == drawn);

  CHECK(bipartite_double_cover(complete_graph(5)) == crown(5));
  const Graph twice = bipartite_double_cover(cycle(6));
  auto comps = connected_components(twice);
  REQUIRE(comps.size() == 2);
  for (const auto& comp : comps) CHECK(isomorphic(induced_subgraph(twice, comp).graph, cycle(6)));
}

TEST_CASE("double cover matches G x K2 under the index map (g,h) -> g + h*n") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    const Graph cover = bipartite_double_cover(g);
    const Graph product = direct_product(g, complete_graph(2));
    const int n = g.order();
    for (Vertex a = 0; a < 2 * n; ++a)
      for (Vertex b = 0; b < 2 * n; ++b)
        CHECK(product.has_edge(a, b) == cover.has_edge(a / 2 + (a % 2) * n, b / 2 + (b % 2) * n));
  }
}

TEST_CASE("double cover is bipartite; connected iff G connected and non-bipartite (all connected n <= 7)") {
  long checked = 0;
  for (int n = 2; n <= 7; ++n) {
    auto stream = filter_graphs(enumerate_labeled_graphs(n), {.connected = true});
    while (auto g = stream()) {
      const Graph cover = bipartite_double_cover(*g);
      const bool bip = is_bipartite(*g).has_value();
      if (!is_bipartite(cover)) FAIL("double cover not bipartite");
      if (is_connected(cover) == bip) FAIL("connectivity mismatch");
      ++checked;
    }
  }
  CHECK(checked > 800000);
}

TEST_CASE("disjoint union") {
  CHECK(isomorphic(disjoint_union(complete_graph(2), complete_graph(2)), crown(2)));
  const Graph u = disjoint_union(cycle(5), disjoint_union(path(3), complete_graph(4)));
  CHECK(connected_components(u).size() == 3);
  CHECK(u.has_edge(5, 6));
  CHECK(total_domination_number(disjoint_union(complete_graph(3), complete_graph(3))).value == 4);
}
