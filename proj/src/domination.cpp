#include "tdom/domination.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "detail/bits.hpp"
#include "tdom/error.hpp"

namespace tdom {

using detail::BitGraph;
using detail::Bits;

SolverConfig SolverConfig::with_time_limit(std::chrono::milliseconds limit) {
  SolverConfig c;
  c.deadline = std::chrono::steady_clock::now() + limit;
  return c;
}

namespace {

class Budget {
 public:
  explicit Budget(const SolverConfig& config) : deadline_(config.deadline) {}

  void tick() {
    if (deadline_ && (++ticks_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw Error(ErrorKind::TimedOut, "solver deadline exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint32_t ticks_ = 0;
};

void require_solvable(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (Vertex v = isolated_vertices(g).first(); v >= 0)
    throw Error(ErrorKind::IsolatedVertexPresent, "vertex " + std::to_string(v) + " is isolated");
}

void check_sequence(const Graph& g, const VertexSequence& seq) {
  VertexSet seen(g.order());
  for (Vertex v : seq) {
    if (v < 0 || v >= g.order())
      throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " outside graph");
    if (seen.contains(v)) throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string(v) + " repeated");
    seen.insert(v);
  }
}

// Runs `solve` on each component and maps results back when splitting is
// enabled and the graph is disconnected; otherwise solves directly.
template <typename Result, typename Solve, typename Combine>
Result per_component(const Graph& g, const SolverConfig& config, Solve solve, Combine combine) {
  if (!config.split_components) return solve(g);
  auto comps = connected_components(g);
  if (comps.size() <= 1) return solve(g);
  Result total{};
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    combine(total, solve(sub.graph), sub.original);
  }
  return total;
}

// ---------------------------------------------------------------------------
// gamma_t: for k = lower bound, lower bound + 1, ..., enumerate k-subsets in
// lexicographic order; the first total dominating one is the lex-least
// minimum witness.

template <std::size_t W>
class TotalDominationSearch {
 public:
  TotalDominationSearch(const Graph& g, const SolverConfig& config)
      : bg_(g), budget_(config), reach_(bg_.n + 1), max_degree_from_(bg_.n + 1, 0) {
    for (int v = bg_.n - 1; v >= 0; --v) {
      reach_[v] = reach_[v + 1] | bg_.nbr[v];
      max_degree_from_[v] = std::max(max_degree_from_[v + 1], bg_.nbr[v].count());
    }
  }

  TotalDominationResult run() {
    const int lower = (bg_.n + max_degree_from_[0] - 1) / max_degree_from_[0];
    for (int k = std::max(lower, 2); k <= bg_.n; ++k) {
      chosen_.clear();
      if (search(0, Bits<W>{}, k)) {
        TotalDominationResult r{k, VertexSet(bg_.n)};
        for (Vertex v : chosen_) r.witness.insert(v);
        return r;
      }
    }
    throw Error(ErrorKind::IsolatedVertexPresent, "no total dominating set exists");
  }

 private:
  bool search(int start, const Bits<W>& covered, int remaining) {
    budget_.tick();
    if (remaining == 0) return covered == bg_.all;
    const Bits<W> uncovered = and_not(bg_.all, covered);
    if (!uncovered.subset_of(reach_[start])) return false;
    if (remaining * max_degree_from_[start] < uncovered.count()) return false;
    for (int v = start; v <= bg_.n - remaining; ++v) {
      chosen_.push_back(v);
      if (search(v + 1, covered | bg_.nbr[v], remaining - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  BitGraph<W> bg_;
  Budget budget_;
  std::vector<Bits<W>> reach_;  // union of N(v) over v >= i
  std::vector<int> max_degree_from_;
  VertexSequence chosen_;
};

// ---------------------------------------------------------------------------
// Grundy: longest legal sequence. Playable vertices depend only on the
// footprint, so the best continuation is memoized per footprint.

template <std::size_t W>
class GrundySearch {
 public:
  GrundySearch(const Graph& g, const SolverConfig& config)
      : bg_(g), budget_(config), memoize_(config.memoize) {
    constexpr std::size_t entry_bytes = sizeof(std::pair<const Bits<W>, std::uint8_t>) + 1;
    // flat_hash_map keeps load factor <= 7/8 and doubles on growth.
    max_entries_ = config.memo_limit_bytes / (2 * entry_bytes);
  }

  GrundyResult run() {
    GrundyResult r;
    r.value = best(Bits<W>{});
    Bits<W> fp{};
    while (!(fp == bg_.all)) {
      const int target = best(fp);
      for (int v = 0; v < bg_.n; ++v) {
        if (bg_.nbr[v].subset_of(fp)) continue;
        const Bits<W> next = fp | bg_.nbr[v];
        if (1 + best(next) == target) {
          r.witness.push_back(v);
          fp = next;
          break;
        }
      }
    }
    return r;
  }

 private:
  int best(const Bits<W>& fp) {
    if (fp == bg_.all) return 0;
    if (memoize_) {
      if (auto it = memo_.find(fp); it != memo_.end()) return it->second;
    }
    budget_.tick();
    const int ceiling = bg_.n - fp.count();
    int result = 0;
    for (int v = 0; v < bg_.n && result < ceiling; ++v) {
      if (bg_.nbr[v].subset_of(fp)) continue;
      result = std::max(result, 1 + best(fp | bg_.nbr[v]));
    }
    if (memoize_) {
      if (memo_.size() >= max_entries_)
        throw Error(ErrorKind::ResourceLimit, "Grundy memo exceeded its memory cap (" +
                                                  std::to_string(memo_.size()) + " footprints)");
      memo_.emplace(fp, static_cast<std::uint8_t>(result));
    }
    return result;
  }

  BitGraph<W> bg_;
  Budget budget_;
  bool memoize_;
  std::size_t max_entries_;
  absl::flat_hash_map<Bits<W>, std::uint8_t> memo_;
};

// ---------------------------------------------------------------------------
// Exact-length total dominating sequence search.

template <std::size_t W>
class ExactLengthSearch {
 public:
  ExactLengthSearch(const Graph& g, const SolverConfig& config) : bg_(g), budget_(config) {}

  std::optional<VertexSequence> run(int length) {
    if (length < 0) return std::nullopt;
    if (search(Bits<W>{}, length)) return seq_;
    return std::nullopt;
  }

 private:
  struct Key {
    Bits<W> fp;
    int remaining;
    friend bool operator==(const Key&, const Key&) = default;
    template <typename H>
    friend H AbslHashValue(H h, const Key& k) {
      return H::combine(std::move(h), k.fp, k.remaining);
    }
  };

  bool search(const Bits<W>& fp, int remaining) {
    if (remaining == 0) return fp == bg_.all;
    // Each entry covers at least one new vertex.
    if (bg_.n - fp.count() < remaining) return false;
    if (failed_.contains(Key{fp, remaining})) return false;
    budget_.tick();
    for (int v = 0; v < bg_.n; ++v) {
      if (bg_.nbr[v].subset_of(fp)) continue;
      seq_.push_back(v);
      if (search(fp | bg_.nbr[v], remaining - 1)) return true;
      seq_.pop_back();
    }
    failed_.insert(Key{fp, remaining});
    return false;
  }

  BitGraph<W> bg_;
  Budget budget_;
  VertexSequence seq_;
  absl::flat_hash_set<Key> failed_;
};

}  // namespace

VertexSet footprint(const Graph& g, const VertexSequence& seq) {
  VertexSet fp(g.order());
  for (Vertex v : seq) fp |= g.neighbors(v);
  return fp;
}

bool is_total_dominating_set(const Graph& g, const VertexSet& s) {
  if (g.order() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  VertexSet covered(g.order());
  for (Vertex v : s) covered |= g.neighbors(v);
  return covered == g.vertices();
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  VertexSet covered = s;
  for (Vertex v : s) covered |= g.neighbors(v);
  return covered == g.vertices();
}

bool is_legal_sequence(const Graph& g, const VertexSequence& seq) {
  check_sequence(g, seq);
  VertexSet fp(g.order());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const VertexSet& n = g.neighbors(seq[i]);
    if (i > 0 && n.is_subset_of(fp)) return false;
    fp |= n;
  }
  return true;
}

bool is_total_dominating_sequence(const Graph& g, const VertexSequence& seq) {
  return is_legal_sequence(g, seq) && footprint(g, seq) == g.vertices();
}

TotalDominationResult total_domination_number(const Graph& g, const SolverConfig& config) {
  require_solvable(g);
  return per_component<TotalDominationResult>(
      g, config,
      [&](const Graph& c) {
        return detail::dispatch_width(c.order(), [&]<std::size_t W>() {
          return TotalDominationSearch<W>(c, config).run();
        });
      },
      [&](TotalDominationResult& total, const TotalDominationResult& part, const std::vector<Vertex>& original) {
        if (total.witness.universe() == 0) total.witness = VertexSet(g.order());
        total.value += part.value;
        for (Vertex v : part.witness) total.witness.insert(original[v]);
      });
}

GrundyResult grundy_total_domination_number(const Graph& g, const SolverConfig& config) {
  require_solvable(g);
  return per_component<GrundyResult>(
      g, config,
      [&](const Graph& c) {
        return detail::dispatch_width(c.order(), [&]<std::size_t W>() {
          return GrundySearch<W>(c, config).run();
        });
      },
      [](GrundyResult& total, const GrundyResult& part, const std::vector<Vertex>& original) {
        total.value += part.value;
        for (Vertex v : part.witness) total.witness.push_back(original[v]);
      });
}

DominationReport domination_report(const Graph& g, const SolverConfig& config) {
  auto td = total_domination_number(g, config);
  auto gr = grundy_total_domination_number(g, config);
  return {td.value, std::move(td.witness), gr.value, std::move(gr.witness)};
}

VertexSequence extend_to_total_dominating_sequence(const Graph& g, const VertexSequence& prefix) {
  require_solvable(g);
  if (!is_legal_sequence(g, prefix)) throw Error(ErrorKind::IllegalPrefix, "prefix is not a legal sequence");
  VertexSequence seq = prefix;
  VertexSet fp = footprint(g, seq);
  const VertexSet all = g.vertices();
  while (!(fp == all)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!g.neighbors(v).is_subset_of(fp)) {
        seq.push_back(v);
        fp |= g.neighbors(v);
        break;
      }
    }
  }
  return seq;
}

std::optional<VertexSequence> exists_tds_of_length(const Graph& g, int length, const SolverConfig& config) {
  require_solvable(g);
  return detail::dispatch_width(g.order(), [&]<std::size_t W>() {
    return ExactLengthSearch<W>(g, config).run(length);
  });
}

VertexSequence even_length_tds(const Graph& g, const SolverConfig& config) {
  const int gamma_t = total_domination_number(g, config).value;
  for (int length = gamma_t + (gamma_t % 2); length <= g.order(); length += 2)
    if (auto seq = exists_tds_of_length(g, length, config)) return *seq;
  throw Error(ErrorKind::HypothesisViolated, "no total dominating sequence of even length found");
}

namespace {

// Plain exhaustive walk over legal sequences. Two orderings of the same
// vertex set have the same continuations, so each set is expanded once.
class OpenSequenceWalk {
 public:
  explicit OpenSequenceWalk(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) {
      open_.push_back(mask(g.neighbors(v)));
      closed_.push_back(open_.back() | (std::uint64_t{1} << v));
    }
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::set<int> run() {
    walk(0, 0, 0, 0);
    return lengths_;
  }

 private:
  static std::uint64_t mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (Vertex v : s) m |= std::uint64_t{1} << v;
    return m;
  }

  void walk(std::uint64_t chosen, std::uint64_t fp, std::uint64_t dominated, int length) {
    if (!visited_.insert(chosen).second) return;
    if (dominated == all_) lengths_.insert(length);
    for (Vertex v = 0; v < n_; ++v) {
      if ((chosen >> v) & 1u) continue;
      if (length > 0 && (open_[v] & ~fp) == 0) continue;
      walk(chosen | (std::uint64_t{1} << v), fp | open_[v], dominated | closed_[v], length + 1);
    }
  }

  int n_;
  std::uint64_t all_ = 0;
  std::vector<std::uint64_t> open_, closed_;
  absl::flat_hash_set<std::uint64_t> visited_;
  std::set<int> lengths_;
};

}  // namespace

std::set<int> open_uniformity_lengths(const Graph& g, int max_order) {
  require_solvable(g);
  if (g.order() > std::min(max_order, 64))
    throw Error(ErrorKind::TooLarge, "open-uniformity enumeration limited to " + std::to_string(max_order) +
                                         " vertices");
  return OpenSequenceWalk(g).run();
}

}  // namespace tdom
