#pragma once

// Fixed-width bitsets for the search kernels. The solvers dispatch on the
// number of 64-bit words needed for the graph order, so the hot loops work
// on small std::arrays instead of heap-backed VertexSets.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tdom/error.hpp"
#include "tdom/graph.hpp"

namespace tdom::detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static Bits from(const VertexSet& s) {
    Bits b;
    auto blocks = s.blocks();
    std::copy_n(blocks.begin(), std::min(blocks.size(), W), b.w.begin());
    return b;
  }

  static Bits full(int n) {
    Bits b;
    for (int v = 0; v < n; ++v) b.set(v);
    return b;
  }

  VertexSet to_set(int n) const {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (test(v)) s.insert(v);
    return s;
  }

  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits and_not(Bits a, const Bits& b) {
    for (std::size_t i = 0; i < W; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Bits& b) {
    return H::combine_contiguous(std::move(h), b.w.data(), W);
  }
};

/// Neighborhood table of a graph in fixed-width form.
template <std::size_t W>
struct BitGraph {
  int n = 0;
  Bits<W> all;
  std::vector<Bits<W>> nbr;

  explicit BitGraph(const Graph& g) : n(g.order()), all(Bits<W>::full(g.order())) {
    nbr.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) nbr.push_back(Bits<W>::from(g.neighbors(v)));
  }
};

inline constexpr int kMaxKernelOrder = 512;

/// Calls fn.template operator()<W>() with the smallest supported W.
template <typename Fn>
decltype(auto) dispatch_width(int n, Fn&& fn) {
  if (n <= 64) return fn.template operator()<1>();
  if (n <= 128) return fn.template operator()<2>();
  if (n <= 256) return fn.template operator()<4>();
  if (n <= kMaxKernelOrder) return fn.template operator()<8>();
  throw Error(ErrorKind::TooLarge, "graph order exceeds the solver limit of 512 vertices");
}

}  // namespace tdom::detail
