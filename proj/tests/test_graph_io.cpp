#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tdom/constructions.hpp"
#include "tdom/error.hpp"
#include "tdom/graph_io.hpp"

using namespace tdom;
using tdom::testing::kind_of_error;

TEST_CASE("graph6 small graphs") {
  CHECK(decode_graph6("A_") == complete_graph(2));
  CHECK(encode_graph6(complete_graph(2)) == "A_");
  CHECK(decode_graph6("Bw") == complete_graph(3));
  CHECK(encode_graph6(path(3)) == "Bg");
  CHECK(decode_graph6(">>graph6<<Bg") == path(3));
  CHECK(encode_graph6(Graph(0, {})) == "?");
  CHECK(decode_graph6("?").order() == 0);
  CHECK(encode_graph6(crown(3)) == "EBj?");
}

TEST_CASE("graph6 round trip") {
  for (int n = 0; n <= 5; ++n) {
    auto s = enumerate_labeled_graphs(n);
    while (auto g = s())
      if (decode_graph6(encode_graph6(*g)) != *g) FAIL("round trip failed");
  }
  std::mt19937_64 rng(6262);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 62), 0.3, rng);
    if (decode_graph6(encode_graph6(g)) != g) FAIL("round trip failed");
  }
  for (int n : {63, 64, 100, 258}) {
    Graph g = random_graph(n, 0.05, rng);
    const std::string text = encode_graph6(g);
    CHECK(text[0] == '~');
    CHECK(decode_graph6(text) == g);
  }
}

TEST_CASE("malformed graph6") {
  for (std::string_view bad : {"", "A", "A_?", "A`", "B\x7f", "~??A", "Bw?"})
    CHECK(kind_of_error([&] { decode_graph6(bad); }) == ErrorKind::MalformedGraph6);
}

TEST_CASE("edge lists") {
  CHECK(read_edge_list("2 1\n0 1\n") == complete_graph(2));
  CHECK(read_edge_list("# comment\n\n3 2\n0 1\n\n1 2\n") == path(3));
  CHECK(read_edge_list(write_edge_list(crown(3))) == crown(3));
  CHECK(write_edge_list(path(3)) == "3 2\n0 1\n1 2\n");

  auto error_text = [](std::string_view text) {
    try {
      read_edge_list(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return std::string(e.what());
    }
    FAIL("expected ParseError");
    return std::string();
  };
  CHECK(error_text("2 1\n0 x\n").find("line 2") != std::string::npos);
  CHECK(error_text("3 2\n0 1\n").find("line") != std::string::npos);
  CHECK(error_text("abc").find("line 1") != std::string::npos);
  CHECK(error_text("2 1\n0 2\n").find("line 2") != std::string::npos);
}

TEST_CASE("dot output") {
  const std::string dot = write_dot(complete_graph(2));
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("--") == dot.rfind("--"));
  CHECK(dot.rfind("graph G {", 0) == 0);
}

TEST_CASE("reading from streams") {
  std::istringstream g6("Bw\n");
  CHECK(read_graph(g6) == complete_graph(3));
  std::istringstream edges("2 1\n0 1\n");
  CHECK(read_graph(edges) == complete_graph(2));
  std::istringstream forced("Bw\n");
  CHECK(kind_of_error([&] { read_graph(forced, GraphFormat::EdgeList); }) == ErrorKind::ParseError);
}
