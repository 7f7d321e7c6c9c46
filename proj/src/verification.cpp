#include "tdom/verification.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "tdom/cli.hpp"
#include "tdom/constructions.hpp"
#include "tdom/domination.hpp"
#include "tdom/error.hpp"
#include "tdom/graph_io.hpp"
#include "tdom/oracles.hpp"
#include "tdom/uniformity.hpp"

namespace tdom {

GraphFactory GraphFactory::standard() {
  return {
      [](int n) { return tdom::complete_graph(n); },
      [](int n) { return tdom::crown(n); },
      [](const std::vector<int>& parts) { return tdom::complete_multipartite(parts); },
      [](int n) { return tdom::line_graph(tdom::complete_graph(n)).graph; },
      [](const Graph& g) { return tdom::bipartite_double_cover(g); },
  };
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::string format_check(const CheckResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "[%s] %02d %-28s (%.2fs / budget %.0fs)", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.budget_seconds);
  return r.detail.empty() ? std::string(head) : std::string(head) + "  " + r.detail;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Accumulates failures; the first few are kept in the detail text.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) fail(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_};
  }

 private:
  long failures_ = 0;
  long checked_ = 0;
  std::string notes_;
};

struct SweepEntry {
  Graph graph;
  UniformityVerdict verdict;
};

std::vector<SweepEntry> sweep(int max_n) {
  std::vector<SweepEntry> out;
  for (int n = 2; n <= max_n; ++n) {
    auto stream = filter_graphs(enumerate_labeled_graphs(n), {.no_isolated = true});
    while (auto g = stream()) {
      auto verdict = total_uniformity(*g);
      out.push_back({std::move(*g), verdict});
    }
  }
  return out;
}

class Runner {
 public:
  Runner(const VerifyOptions& options, std::ostream* progress) : options_(options), progress_(progress) {
    report_.level = options.level;
  }

  template <typename Fn>
  void check(int id, std::string name, double budget_seconds, Fn fn) {
    CheckResult r{id, std::move(name), false, 0, budget_seconds, {}};
    const auto start = Clock::now();
    try {
      Outcome o = fn(SolverConfig::with_time_limit(
          std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000))));
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const Error& e) {
      r.detail = std::string(to_string(e.kind())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.seconds > budget_seconds) {
      r.passed = false;
      r.detail += " [over budget]";
    }
    if (progress_) *progress_ << format_check(r) << std::endl;
    report_.checks.push_back(std::move(r));
  }

  const std::vector<SweepEntry>& small_sweep() {
    if (small_.empty()) small_ = sweep(6);
    return small_;
  }

  VerificationReport take() { return std::move(report_); }

 private:
  const VerifyOptions& options_;
  std::ostream* progress_;
  VerificationReport report_;
  std::vector<SweepEntry> small_;
};

}  // namespace

VerificationReport run_verification(const VerifyOptions& options, std::ostream* progress) {
  const GraphFactory& make = options.factory;
  const bool full = options.level == VerifyLevel::Full;
  Runner run(options, progress);

  run.check(1, "lk6-total-4-uniform", 10, [&](const SolverConfig& cfg) {
    const Graph g = make.line_complete(6);
    auto r = domination_report(g, cfg);
    Tally t;
    t.expect(g.order() == 15, "L(K6) must have 15 vertices");
    t.expect(r.gamma_t == 4, "gamma_t=" + std::to_string(r.gamma_t));
    t.expect(r.grundy == 4, "grundy=" + std::to_string(r.grundy));
    t.expect(is_total_dominating_set(g, r.gamma_t_witness), "gamma_t witness invalid");
    t.expect(is_total_dominating_sequence(g, r.grundy_witness), "grundy witness invalid");
    return t.outcome("gamma_t=4 grundy=4 uniform k=4");
  });

  run.check(2, "lk6-structure", 10, [&](const SolverConfig&) {
    const Graph g = make.line_complete(6);
    Tally t;
    t.expect(is_connected(g), "not connected");
    t.expect(is_false_twin_free(g), "has false twins");
    t.expect(!is_bipartite(g).has_value(), "bipartite");
    t.expect(girth(g) == 3, "no triangle");
    t.expect(is_regular(g) == 8, "not 8-regular");
    return t.outcome("connected, false twin-free, non-bipartite (girth 3), 8-regular");
  });

  run.check(3, "lk9-not-uniform", 300, [&](const SolverConfig& cfg) {
    const Graph g = make.line_complete(9);
    const LineGraph labels = line_graph(complete_graph(9));
    Tally t;
    t.expect(g == labels.graph, "L(K9) construction differs from the line graph of K9");
    // Pairs below are 1-based elements of {1..9}.
    auto pair_seq = [&](std::initializer_list<std::pair<int, int>> pairs) {
      VertexSequence s;
      for (auto [a, b] : pairs) s.push_back(labels.vertex_of(a - 1, b - 1));
      return s;
    };
    const VertexSequence six = pair_seq({{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}});
    const VertexSequence seven = pair_seq({{1, 9}, {2, 9}, {3, 9}, {4, 9}, {5, 9}, {6, 9}, {7, 9}});
    t.expect(is_total_dominating_sequence(g, six), "length-6 sequence rejected");
    t.expect(is_total_dominating_sequence(g, seven), "length-7 sequence rejected");
    auto r = domination_report(g, cfg);
    t.expect(r.grundy >= 7, "grundy=" + std::to_string(r.grundy));
    t.expect(r.gamma_t <= 6, "gamma_t=" + std::to_string(r.gamma_t));
    t.expect(is_total_dominating_sequence(g, r.grundy_witness), "grundy witness invalid");
    t.expect(!total_uniformity(g, cfg).is_uniform(), "reported uniform");
    return t.outcome("sequences of length 6 and 7 valid; gamma_t=" + std::to_string(r.gamma_t) +
                     " grundy=" + std::to_string(r.grundy));
  });

  run.check(4, "crowns-and-multipartite", 30, [&](const SolverConfig& cfg) {
    Tally t;
    for (int n = 3; n <= 8; ++n) {
      auto v = total_uniformity(make.crown(n), cfg);
      t.expect(v.k() == 4, "crown(" + std::to_string(n) + ") verdict " + std::to_string(v.min_length) + "/" +
                               std::to_string(v.max_length));
    }
    std::mt19937_64 rng(20210531);
    int profiles = 0;
    while (profiles < 20) {
      std::vector<int> parts(2 + rng() % 5);
      int total = 0;
      for (int& p : parts) total += p = 1 + static_cast<int>(rng() % 5);
      if (total > 14) continue;
      ++profiles;
      auto v = total_uniformity(make.multipartite(parts), cfg);
      std::string name = "K(";
      for (int p : parts) name += std::to_string(p) + ",";
      name.back() = ')';
      t.expect(v.k() == 2, name + " not uniform(2)");
    }
    return t.outcome("crown(3..8) uniform(4); 20 multipartite profiles uniform(2)");
  });

  run.check(5, full ? "odd-k-nonexistence-n7" : "odd-k-nonexistence", full ? 7200 : 300,
            [&](const SolverConfig& cfg) {
              Tally t;
              long graphs = 0, uniform = 0;
              for (const auto& e : run.small_sweep()) {
                ++graphs;
                if (auto k = e.verdict.k()) {
                  ++uniform;
                  t.expect(*k % 2 == 0, "odd k=" + std::to_string(*k) + " at " + encode_graph6(e.graph));
                }
              }
              if (full) {
                auto stream = filter_graphs(enumerate_labeled_graphs(7), {.no_isolated = true});
                while (auto g = stream()) {
                  ++graphs;
                  if (auto k = total_uniformity(*g, cfg).k()) {
                    ++uniform;
                    t.expect(*k % 2 == 0, "odd k=" + std::to_string(*k) + " at " + encode_graph6(*g));
                  }
                }
              }
              return t.outcome(std::to_string(graphs) + " graphs, " + std::to_string(uniform) +
                               " uniform, none at odd k");
            });

  run.check(6, "even-length-sequence", 300, [&](const SolverConfig& cfg) {
    Tally t;
    for (const auto& e : run.small_sweep()) {
      auto seq = even_length_tds(e.graph, cfg);
      t.expect(seq.size() % 2 == 0 && is_total_dominating_sequence(e.graph, seq),
               "bad sequence at " + encode_graph6(e.graph));
    }
    return t.outcome(std::to_string(run.small_sweep().size()) + " graphs");
  });

  run.check(7, "reduction-lemmas", 300, [&](const SolverConfig& cfg) {
    Tally t;
    long reductions = 0;
    for (const auto& e : run.small_sweep()) {
      auto k = e.verdict.k();
      if (!k || *k < 3) continue;
      const bool member = is_false_twin_free(e.graph);
      for (auto [u, v] : e.graph.edges()) {
        ++reductions;
        const Graph h = reduction(e.graph, u, v).graph;
        const std::string at = encode_graph6(e.graph) + " edge " + std::to_string(u) + "-" + std::to_string(v);
        t.expect(h.order() > 0 && isolated_vertices(h).empty(), "isolated vertex after reduction of " + at);
        if (h.order() == 0 || !isolated_vertices(h).empty()) continue;
        t.expect(total_uniformity(h, cfg).k() == *k - 2, "not uniform(k-2) after reduction of " + at);
        if (member) t.expect(is_false_twin_free(h), "false twins after reduction of " + at);
      }
    }
    return t.outcome(std::to_string(reductions) + " reductions checked");
  });

  run.check(8, full ? "double-cover-theorem-lk6" : "double-cover-theorem", full ? 1800 : 60,
            [&](const SolverConfig& cfg) {
              Tally t;
              for (int n : {3, 5}) {
                const Graph cover = make.double_cover(make.complete(n));
                t.expect(is_connected(cover), "K" + std::to_string(n) + "xK2 disconnected");
                t.expect(total_uniformity(cover, cfg).k() == 4, "K" + std::to_string(n) + "xK2 not uniform(4)");
              }
              std::string detail = "K3xK2, K5xK2 uniform(4)";
              if (full) {
                const Graph cover = make.double_cover(make.line_complete(6));
                t.expect(cover.order() == 30, "L(K6)xK2 must have 30 vertices");
                t.expect(is_connected(cover), "L(K6)xK2 disconnected");
                auto v = total_uniformity(cover, cfg);
                t.expect(v.k() == 8, "L(K6)xK2 verdict " + std::to_string(v.min_length) + "/" +
                                         std::to_string(v.max_length));
                detail += "; L(K6)xK2 connected and uniform(8)";
              }
              return t.outcome(detail);
            });

  run.check(9, "regularity-theorem", 300, [&](const SolverConfig& cfg) {
    Tally t;
    long hypotheses_met = 0;
    auto consider = [&](const Graph& g, bool uniform, const std::string& name) {
      if (!uniform || !is_connected(g) || !is_false_twin_free(g)) return;
      ++hypotheses_met;
      t.expect(is_regular(g).has_value(), name + " is not regular");
    };
    for (const auto& e : run.small_sweep()) consider(e.graph, e.verdict.is_uniform(), encode_graph6(e.graph));
    for (int n = 3; n <= 8; ++n) {
      const Graph g = make.crown(n);
      consider(g, total_uniformity(g, cfg).is_uniform(), "crown(" + std::to_string(n) + ")");
    }
    const Graph lk6 = make.line_complete(6);
    consider(lk6, total_uniformity(lk6, cfg).is_uniform(), "L(K6)");
    return t.outcome(std::to_string(hypotheses_met) + " graphs meet the hypotheses, all regular");
  });

  run.check(10, "chordal-classification", 300, [&](const SolverConfig&) {
    Tally t;
    long chordal = 0;
    for (const auto& e : run.small_sweep()) {
      if (!is_chordal(e.graph).chordal) continue;
      ++chordal;
      const std::string at = encode_graph6(e.graph);
      t.expect(e.verdict.is_uniform() == chordal_uniform_classification(e.graph), "mismatch at " + at);
      if (is_connected(e.graph) && e.verdict.is_uniform())
        t.expect(*e.verdict.k() < 4, "connected chordal uniform(" + std::to_string(*e.verdict.k()) + ") at " + at);
    }
    return t.outcome(std::to_string(chordal) + " chordal graphs classified");
  });

  run.check(11, "girth-dichotomy", 300, [&](const SolverConfig&) {
    Tally t;
    long uniform = 0, stars = 0;
    for (const auto& e : run.small_sweep()) {
      auto k = e.verdict.k();
      if (!k) continue;
      ++uniform;
      auto branch = girth_dichotomy(e.graph, *k);
      stars += branch == GirthBranch::StarsUnion;
      t.expect(branch != GirthBranch::Neither, "neither branch at " + encode_graph6(e.graph));
    }
    return t.outcome(std::to_string(uniform) + " uniform graphs (" + std::to_string(stars) + " star forests)");
  });

  run.check(12, "oracle-equivalence", 600, [&](const SolverConfig& cfg) {
    Tally t;
    auto compare = [&](const Graph& g) {
      auto r = domination_report(g, cfg);
      const std::string at = encode_graph6(g);
      t.expect(r.gamma_t == brute_gamma_t(g), "gamma_t mismatch at " + at);
      t.expect(r.grundy == brute_grundy(g), "grundy mismatch at " + at);
    };
    for (const auto& e : run.small_sweep()) compare(e.graph);
    std::mt19937_64 rng(77001);
    int sampled = 0;
    while (sampled < 500) {
      const int n = 7 + static_cast<int>(rng() % 4);
      const double p = 0.25 + 0.5 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
      Graph g = random_graph(n, p, rng);
      if (!isolated_vertices(g).empty()) continue;
      ++sampled;
      compare(g);
    }
    return t.outcome(std::to_string(run.small_sweep().size()) + " exhaustive + 500 random graphs agree");
  });

  run.check(13, "graph6-and-scan-invariants", 300, [&](const SolverConfig&) {
    Tally t;
    long roundtrips = 0;
    for (int n = 0; n <= 7; ++n) {
      auto stream = enumerate_labeled_graphs(n);
      while (auto g = stream()) {
        ++roundtrips;
        const std::string s = encode_graph6(*g);
        const Graph back = decode_graph6(s);
        t.expect(back == *g && encode_graph6(back) == s, "round-trip failed for " + s);
      }
    }
    std::mt19937_64 rng(6262);
    for (int i = 0; i < 1000; ++i) {
      const int n = static_cast<int>(rng() % 63);
      const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      Graph g = random_graph(n, p, rng);
      const std::string s = encode_graph6(g);
      t.expect(decode_graph6(s) == g, "random round-trip failed for " + s);
      ++roundtrips;
    }

    // Scan of the n=5 corpus plus junk lines must not depend on the
    // worker count.
    std::string input;
    for (auto stream = enumerate_labeled_graphs(5); auto g = stream();) input += encode_graph6(*g) + "\n";
    input += "not graph6!\n";
    auto scan = [&](int workers, std::optional<int> k, const std::string& text) {
      std::istringstream in(text);
      std::ostringstream out, err;
      cli::ScanArgs args;
      args.parallel = workers;
      args.k = k;
      cli::cmd_scan(args, in, out, err);
      return out.str();
    };
    const std::string one = scan(1, std::nullopt, input);
    t.expect(scan(2, std::nullopt, input) == one, "2 workers changed scan output");
    t.expect(scan(std::max(3, options.threads), std::nullopt, input) == one, "more workers changed scan output");

    // k=2 on the n=4 corpus selects exactly the complete multipartite
    // graphs without isolated vertices.
    std::string n4, expected;
    for (auto stream = enumerate_labeled_graphs(4); auto g = stream();) {
      n4 += encode_graph6(*g) + "\n";
      if (isolated_vertices(*g).empty() && is_complete_multipartite(*g)) expected += encode_graph6(*g) + "\n";
    }
    const std::string k2 = scan(2, 2, n4);
    t.expect(k2.substr(0, k2.find("# summary")) == expected, "k=2 scan of n=4 differs from multipartite set");
    return t.outcome(std::to_string(roundtrips) + " graph6 round-trips; scan output worker-invariant");
  });

  return run.take();
}

}  // namespace tdom
