#include "tdom/cli.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tdom/constructions.hpp"
#include "tdom/domination.hpp"
#include "tdom/uniformity.hpp"

namespace tdom::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedGraph6:
    case ErrorKind::ParseError:
      return kExitParseError;
    case ErrorKind::IsolatedVertexPresent:
    case ErrorKind::EmptyGraph:
      return kExitUndefined;
    case ErrorKind::TimedOut:
      return kExitTimeout;
    case ErrorKind::ResourceLimit:
    case ErrorKind::TooLarge:
      return kExitResourceLimit;
    default:
      return kExitFailure;
  }
}

int default_threads() {
  if (const char* env = std::getenv("TDOM_THREADS")) {
    int n = 0;
    auto [p, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), n);
    if (ec == std::errc{} && n >= 1) return n;
  }
  return 1;
}

namespace {

SolverConfig solver_config(std::optional<double> time_limit_seconds, std::size_t memo_limit_mib) {
  SolverConfig cfg;
  if (time_limit_seconds)
    cfg = SolverConfig::with_time_limit(std::chrono::milliseconds(static_cast<long long>(*time_limit_seconds * 1000)));
  cfg.memo_limit_bytes = memo_limit_mib << 20;
  return cfg;
}

int report_error(const std::string& command, const Error& e, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  out << "# summary command=" << command << " status=error error=" << to_string(e.kind()) << '\n';
  return exit_code_for(e.kind());
}

std::string join(const VertexSequence& seq) {
  std::string s;
  for (Vertex v : seq) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s.empty() ? "-" : s;
}

int to_int(const std::string& text) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size())
    throw Error(ErrorKind::InvalidSize, "expected an integer, got '" + text + "'");
  return v;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

std::vector<Graph> read_inputs(const std::vector<std::string>& paths, std::istream& in) {
  if (paths.empty()) return read_graph6_lines(in);
  std::vector<Graph> out;
  for (const auto& p : paths) {
    std::ifstream f(p);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + p);
    out.push_back(read_graph(f));
  }
  return out;
}

Graph build(const ConstructArgs& args, std::istream& in) {
  const auto& p = args.params;
  auto one = [&]() {
    if (p.size() != 1) throw Error(ErrorKind::InvalidSize, args.name + " takes exactly one size parameter");
    return to_int(p[0]);
  };
  if (args.name == "complete") return complete_graph(one());
  if (args.name == "star") return star(one());
  if (args.name == "path") return path(one());
  if (args.name == "cycle") return cycle(one());
  if (args.name == "crown") return crown(one());
  if (args.name == "line-complete") return line_graph(complete_graph(one())).graph;
  if (args.name == "multipartite") {
    std::vector<int> parts;
    for (const auto& s : p) parts.push_back(to_int(s));
    return complete_multipartite(parts);
  }
  if (args.name == "double-cover" || args.name == "line") {
    auto graphs = read_inputs(p, in);
    if (graphs.size() != 1) throw Error(ErrorKind::ParseError, args.name + " expects exactly one input graph");
    return args.name == "line" ? line_graph(graphs[0]).graph : bipartite_double_cover(graphs[0]);
  }
  if (args.name == "product") {
    auto graphs = read_inputs(p, in);
    if (graphs.size() != 2) throw Error(ErrorKind::ParseError, "product expects exactly two input graphs");
    return direct_product(graphs[0], graphs[1]);
  }
  throw Error(ErrorKind::InvalidSize, "unknown construction '" + args.name + "'");
}

}  // namespace

int cmd_construct(const ConstructArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = build(args, in);
    if (g.order() > args.max_n)
      throw Error(ErrorKind::TooLarge, "result has " + std::to_string(g.order()) + " vertices, above --max-n");
    if (args.format == "edges")
      out << write_edge_list(g);
    else if (args.format == "dot")
      out << write_dot(g);
    else
      out << encode_graph6(g) << '\n';
    out << "# summary command=construct status=ok name=" << args.name << " order=" << g.order()
        << " size=" << g.size() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    return report_error("construct", e, out, err);
  }
}

int cmd_compute(const ComputeArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    Graph g;
    if (args.input) {
      std::ifstream f(*args.input);
      if (!f) throw Error(ErrorKind::ParseError, "cannot open " + *args.input);
      g = read_graph(f, args.format);
    } else {
      g = read_graph(in, args.format);
    }
    if (g.order() > args.max_n)
      throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g.order()) + " vertices, above --max-n " +
                                           std::to_string(args.max_n));

    out << "order=" << g.order() << " size=" << g.size() << '\n';
    auto regular = is_regular(g);
    auto gi = girth(g);
    out << "structure connected=" << (is_connected(g) ? "yes" : "no")
        << " bipartite=" << (is_bipartite(g) ? "yes" : "no")
        << " regular=" << (regular ? std::to_string(*regular) : "no")
        << " false_twin_free=" << (is_false_twin_free(g) ? "yes" : "no")
        << " chordal=" << (is_chordal(g).chordal ? "yes" : "no") << " girth=" << (gi ? std::to_string(*gi) : "inf")
        << '\n';

    if (g.order() == 0 || !isolated_vertices(g).empty()) {
      out << "verdict=undefined reason=isolated-vertices\n";
      out << "# summary command=compute status=undefined verdict=undefined\n";
      return kExitUndefined;
    }

    const SolverConfig cfg = solver_config(args.time_limit_seconds, args.memo_limit_mib);
    const auto report = domination_report(g, cfg);
    out << "gamma_t=" << report.gamma_t << " witness=" << join(report.gamma_t_witness.to_vector()) << '\n';
    out << "grundy=" << report.grundy << " witness=" << join(report.grundy_witness) << '\n';
    const std::string verdict = report.gamma_t == report.grundy
                                    ? "verdict=uniform k=" + std::to_string(report.gamma_t)
                                    : std::string("verdict=not-uniform");
    out << verdict << '\n';
    out << "# summary command=compute status=ok gamma_t=" << report.gamma_t << " grundy=" << report.grundy << ' '
        << verdict << '\n';
    return kExitOk;
  } catch (const Error& e) {
    return report_error("compute", e, out, err);
  }
}

namespace {

struct ScanItem {
  std::uint64_t line_no = 0;
  std::string text;

  enum class Status { NotUniform, Uniform, Malformed, Undefined, Skipped, TimedOut, Failed } status{};
  int k = 0;
  std::string message;
};

void evaluate(ScanItem& item, const ScanArgs& args) {
  try {
    const Graph g = decode_graph6(item.text);
    if (g.order() > args.max_n) {
      item.status = ScanItem::Status::Skipped;
      item.message = "order " + std::to_string(g.order()) + " above --max-n";
      return;
    }
    auto verdict = total_uniformity(g, solver_config(args.time_limit_seconds, args.memo_limit_mib));
    switch (verdict.kind) {
      case UniformityVerdict::Kind::Uniform:
        item.status = ScanItem::Status::Uniform;
        item.k = verdict.min_length;
        break;
      case UniformityVerdict::Kind::NotUniform:
        item.status = ScanItem::Status::NotUniform;
        break;
      case UniformityVerdict::Kind::Undefined:
        item.status = ScanItem::Status::Undefined;
        break;
    }
  } catch (const Error& e) {
    item.message = e.what();
    switch (e.kind()) {
      case ErrorKind::MalformedGraph6: item.status = ScanItem::Status::Malformed; break;
      case ErrorKind::TimedOut: item.status = ScanItem::Status::TimedOut; break;
      default: item.status = ScanItem::Status::Failed; break;
    }
  }
}

void evaluate_batch(std::vector<ScanItem>& batch, const ScanArgs& args) {
  const int workers = std::max(1, std::min<int>(args.parallel, static_cast<int>(batch.size())));
  if (workers == 1) {
    for (auto& item : batch) evaluate(item, args);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) evaluate(batch[i], args);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

int cmd_scan(const ScanArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  constexpr std::size_t kBatch = 1024;
  std::map<std::string, std::uint64_t> counts{{"read", 0},     {"malformed", 0}, {"skipped", 0}, {"undefined", 0},
                                              {"timeouts", 0}, {"failed", 0},    {"matched", 0}};
  std::map<int, std::uint64_t> by_k;
  std::uint64_t line_no = 0;
  std::vector<ScanItem> batch;

  auto flush = [&] {
    evaluate_batch(batch, args);
    for (const auto& item : batch) {
      ++counts["read"];
      using S = ScanItem::Status;
      switch (item.status) {
        case S::Uniform:
          if (!args.k || *args.k == item.k) {
            out << item.text << '\n';
            ++counts["matched"];
            ++by_k[item.k];
          }
          break;
        case S::NotUniform: break;
        case S::Undefined: ++counts["undefined"]; break;
        case S::Malformed: ++counts["malformed"]; break;
        case S::Skipped: ++counts["skipped"]; break;
        case S::TimedOut: ++counts["timeouts"]; break;
        case S::Failed: ++counts["failed"]; break;
      }
      if (!item.message.empty()) err << "line " << item.line_no << ": " << item.message << '\n';
      if (args.progress_every && counts["read"] % args.progress_every == 0)
        err << "progress read=" << counts["read"] << " matched=" << counts["matched"] << '\n';
    }
    batch.clear();
  };

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    ScanItem item;
    item.line_no = line_no;
    item.text = line.substr(first, last - first + 1);
    batch.push_back(std::move(item));
    if (batch.size() == kBatch) flush();
  }
  flush();

  out << "# summary command=scan status=ok";
  for (const char* key : {"read", "matched", "malformed", "undefined", "skipped", "timeouts", "failed"})
    out << ' ' << key << '=' << counts[key];
  for (auto [k, c] : by_k) out << " k" << k << '=' << c;
  out << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  (void)err;
  VerifyOptions options;
  options.level = args.level;
  options.threads = args.threads;
  const auto report = run_verification(options, &out);
  long passed = 0;
  for (const auto& c : report.checks) passed += c.passed;
  const bool ok = report.all_passed();
  out << "# summary command=verify status=" << (ok ? "ok" : "fail")
      << " level=" << (args.level == VerifyLevel::Full ? "full" : "quick") << " passed=" << passed
      << " failed=" << (static_cast<long>(report.checks.size()) - passed) << '\n';
  return ok ? kExitOk : kExitFailure;
}

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total domination and Grundy total domination toolkit"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Emit a named graph family member");
  c->add_option("name", construct.name,
                "complete | multipartite | star | path | cycle | crown | line-complete | double-cover | line | product")
      ->required();
  c->add_option("params", construct.params, "Sizes, or input graph files for double-cover/line/product");
  c->add_option("--format", construct.format, "Output format")->check(CLI::IsMember({"g6", "edges", "dot"}));
  c->add_option("--max-n", construct.max_n, "Refuse to emit graphs with more vertices");

  ComputeArgs compute;
  std::string compute_format = "auto";
  std::optional<std::string> compute_path;
  auto* m = app.add_subcommand("compute", "gamma_t, Grundy total domination number and uniformity verdict");
  m->add_option("input", compute_path, "Graph file (graph6 or edge list); stdin when omitted");
  m->add_option("--format", compute_format, "Input format")->check(CLI::IsMember({"auto", "g6", "edges"}));
  m->add_option("--time-limit", compute.time_limit_seconds, "Seconds before giving up (exit 4)");
  m->add_option("--max-n", compute.max_n, "Largest accepted order");
  m->add_option("--memo-limit-mib", compute.memo_limit_mib, "Grundy memo cap (exit 5 when exceeded)");

  ScanArgs scan;
  scan.parallel = default_threads();
  auto* s = app.add_subcommand("scan", "Filter graph6 lines down to total k-uniform graphs");
  s->add_option("--k", scan.k, "Only report this k");
  s->add_option("--parallel", scan.parallel, "Worker threads (default $TDOM_THREADS or 1)")->check(CLI::PositiveNumber);
  s->add_option("--progress-every", scan.progress_every, "Progress line on stderr every N graphs");
  s->add_option("--time-limit", scan.time_limit_seconds, "Per-graph time limit in seconds");
  s->add_option("--max-n", scan.max_n, "Skip graphs above this order");
  s->add_option("--memo-limit-mib", scan.memo_limit_mib, "Per-graph Grundy memo cap");

  VerifyArgs verify;
  std::string level = "quick";
  auto* v = app.add_subcommand("verify", "Run the built-in verification checks");
  v->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  v->add_option("--threads", verify.threads, "Workers for the scan determinism check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  if (*c) return cmd_construct(construct, in, out, err);
  if (*m) {
    compute.input = compute_path;
    compute.format = compute_format == "g6" ? GraphFormat::Graph6
                     : compute_format == "edges" ? GraphFormat::EdgeList
                                                 : GraphFormat::Auto;
    return cmd_compute(compute, in, out, err);
  }
  if (*s) return cmd_scan(scan, in, out, err);
  verify.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  return cmd_verify(verify, out, err);
}

}  // namespace tdom::cli
