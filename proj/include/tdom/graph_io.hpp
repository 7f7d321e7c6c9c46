#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "tdom/graph.hpp"

namespace tdom {

/// Decodes one undirected graph6 line (an optional ">>graph6<<" header is
/// accepted). Strict: wrong length, bytes outside 63..126 or nonzero
/// padding bits throw MalformedGraph6.
Graph decode_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// "n m" followed by m lines "u v" (0-based). Blank lines and lines starting
/// with '#' are skipped. Throws ParseError naming the offending line.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Undirected DOT with vertices 0..n-1 then edges in lexicographic order.
std::string write_dot(const Graph& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Reads a single graph from a stream: the first graph6 line, or the whole
/// text as an edge list. Auto picks edge-list when the first significant
/// character is a digit (never a valid graph6 lead byte).
Graph read_graph(std::istream& in, GraphFormat format = GraphFormat::Auto);

}  // namespace tdom
