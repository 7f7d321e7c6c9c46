#include "tdom/vertex_set.hpp"

#include <cassert>
#include <string>

#include "tdom/error.hpp"

namespace tdom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::IsolatedVertexPresent: return "IsolatedVertexPresent";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::IllegalPrefix: return "IllegalPrefix";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TimedOut: return "TimedOut";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

VertexSet::VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return v >= 0 && v < universe() && bits_.test(static_cast<std::size_t>(v));
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe())
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe()));
  bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(Vertex v) {
  if (v >= 0 && v < universe()) bits_.reset(static_cast<std::size_t>(v));
}

Vertex VertexSet::first() const {
  auto pos = bits_.find_first();
  return pos == boost::dynamic_bitset<Block>::npos ? -1 : static_cast<Vertex>(pos);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe() == other.universe());
  return bits_.is_subset_of(other.bits_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe() == other.universe());
  return bits_.intersects(other.bits_);
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe() == other.universe());
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe() == other.universe());
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe() == other.universe());
  bits_ -= other.bits_;
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_.flip();
  return s;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::vector<VertexSet::Block> VertexSet::blocks() const {
  std::vector<Block> out(bits_.num_blocks());
  boost::to_block_range(bits_, out.begin());
  return out;
}

}  // namespace tdom
