#include "tdom/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <iterator>
#include <sstream>
#include <vector>

#include "tdom/error.hpp"

namespace tdom {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::MalformedGraph6, "graph6: " + why); }

int sextet(char c) {
  const int x = static_cast<unsigned char>(c);
  if (x < 63 || x > 126) malformed("byte " + std::to_string(x) + " outside 63..126");
  return x - 63;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) malformed("empty line");

  std::size_t pos = 0;
  auto read_sextets = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > line.size()) malformed("truncated size field");
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(sextet(line[pos++]));
    return v;
  };

  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = read_sextets(1);
  } else if (line.size() > 1 && line[1] != '~') {
    pos = 1;
    n = read_sextets(3);
    if (n < 63) malformed("non-canonical size field");
  } else {
    pos = 2;
    n = read_sextets(6);
    if (n < 258048) malformed("non-canonical size field");
  }
  if (n > (std::uint64_t{1} << 20)) malformed("graph too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (line.size() - pos != chars)
    malformed("expected " + std::to_string(chars) + " adjacency bytes, found " + std::to_string(line.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (k % 6 != 0) {
    const int last = sextet(line.back());
    if (last & ((1 << (6 - k % 6)) - 1)) malformed("nonzero padding bits");
  }
  for (std::size_t i = pos; i < line.size(); ++i) sextet(line[i]);
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put_sextets = [&](std::uint64_t v, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((v >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    put_sextets(n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    put_sextets(n, 3);
  } else {
    out += "~~";
    put_sextets(n, 6);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.neighbors(i).contains(j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph read_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.emplace_back(lineno, line);
    start = end + 1;
  }

  auto parse_pair = [](int no, std::string_view line) {
    auto fail = [&] { throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": expected two integers"); };
    long long a = 0, b = 0;
    const char* p = line.data();
    const char* e = line.data() + line.size();
    auto r1 = std::from_chars(p, e, a);
    if (r1.ec != std::errc{}) fail();
    p = r1.ptr;
    while (p != e && std::isspace(static_cast<unsigned char>(*p))) ++p;
    auto r2 = std::from_chars(p, e, b);
    if (r2.ec != std::errc{} || r2.ptr != e || p == r1.ptr) fail();
    if (a < 0 || b < 0 || a > (1 << 24) || b > (1 << 24))
      throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": value out of range");
    return std::pair<int, int>(static_cast<int>(a), static_cast<int>(b));
  };

  if (lines.empty()) throw Error(ErrorKind::ParseError, "line 1: missing \"n m\" header");
  auto [n, m] = parse_pair(lines[0].first, lines[0].second);
  if (static_cast<int>(lines.size()) - 1 != m)
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lines.back().first) + ": header announces " +
                                           std::to_string(m) + " edges, found " +
                                           std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [u, v] = parse_pair(lines[i].first, lines[i].second);
    if (u >= n || v >= n || u == v)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lines[i].first) + ": invalid edge " +
                                             std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph read_graph(std::istream& in, GraphFormat format) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  if (format == GraphFormat::Auto) {
    format = GraphFormat::Graph6;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      auto t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (std::isdigit(static_cast<unsigned char>(t.front()))) format = GraphFormat::EdgeList;
      break;
    }
  }
  if (format == GraphFormat::EdgeList) return read_edge_list(text);
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return decode_graph6(t);
  }
  throw Error(ErrorKind::ParseError, "no graph in input");
}

}  // namespace tdom
