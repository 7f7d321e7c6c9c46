#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tdom {

using Vertex = int;

/// Fixed-universe set of vertex indices in [0, universe()).
///
/// Iteration always visits members in increasing index order; every
/// deterministic tie-break in the library relies on that.
class VertexSet {
 public:
  using Block = std::uint64_t;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const boost::dynamic_bitset<Block>* bits, std::size_t pos)
        : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const boost::dynamic_bitset<Block>* bits_ = nullptr;
    std::size_t pos_ = boost::dynamic_bitset<Block>::npos;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  /// Smallest member, or -1 when empty.
  Vertex first() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, boost::dynamic_bitset<Block>::npos}; }

  std::vector<Vertex> to_vector() const;
  /// Raw 64-bit blocks, least significant bit = vertex 0.
  std::vector<Block> blocks() const;

 private:
  boost::dynamic_bitset<Block> bits_;
};

}  // namespace tdom
