// sixcycle: list, count and benchmark 6-cycles of edge-list graphs.
//
//   sixcycle list-all  graph.txt [--seed S] [--rounds R | --delta D] [--cap C] [--sorted]
//   sixcycle list-t    graph.txt --t T [--seed S]
//   sixcycle oracle    graph.txt [--k K] [--limit N] [--force]
//   sixcycle gen       FAMILY [family parameters] [--seed S]
//   sixcycle bench     --family FAMILY --params 2,4,8 [--repeats R]
//
// Cycles go to stdout (or --out), one per line. The run report is a single
// JSON line written last to stderr (or to --report).
//
// Exit codes: 0 success, 2 usage or parse error, 3 size guard refused.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sixcycle/color_coding.hpp"
#include "sixcycle/edge_list.hpp"
#include "sixcycle/generators.hpp"
#include "sixcycle/oracle.hpp"
#include "sixcycle/t_lister.hpp"

namespace {

using namespace sixcycle;
using json = nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output destination: a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json table_sizes_json(const TableSizes& s) {
  return {{"N_ac", s.n_ac}, {"N_bd", s.n_bd}, {"P", s.p}, {"Q", s.q}, {"R", s.r}};
}

void emit_report(const json& report, const std::string& path, bool quiet) {
  if (!quiet) {
    std::cerr << "distinct_cycles=" << report["distinct_cycles"] << " rounds=" << report["rounds"]
              << " steps=" << report["steps"] << " aborted=" << report["aborted"]
              << " elapsed_ms=" << report["elapsed_ms"] << '\n';
  }
  if (path.empty()) {
    std::cerr << report.dump() << '\n';
  } else {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open " + path + " for writing");
    out << report.dump() << '\n';
  }
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Graph load(const std::string& path, bool lenient) {
  return read_edge_list(path, lenient ? DuplicatePolicy::kMerge : DuplicatePolicy::kReject);
}

void write_cycles(std::ostream& out, const std::vector<CanonicalCycle>& cycles) {
  std::string buffer;
  buffer.reserve(1 << 16);
  char digits[16];
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.nodes().size(); ++i) {
      if (i) buffer.push_back(' ');
      auto res = std::to_chars(digits, digits + sizeof digits, c.nodes()[i]);
      buffer.append(digits, res.ptr);
    }
    buffer.push_back('\n');
    if (buffer.size() > (1 << 16) - 128) {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

// ---------------------------------------------------------------------------

struct ListAllArgs {
  std::string input, out, report;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::uint64_t> rounds;
  double delta = kDefaultFailureBudget;
  std::optional<std::size_t> cap;
  bool sorted = false, parallel = false, lenient = false, quiet = false;
};

int run_list_all(const ListAllArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = load(a.input, a.lenient);
  CycleSink sink(SinkLimits{.output_cap = a.cap, .step_budget = std::nullopt});
  RoundsPolicy policy{.explicit_rounds = a.rounds, .failure_budget = a.delta};
  ListAllReport r = list_all(g, policy, a.seed, sink,
                             a.parallel ? Execution::kParallel : Execution::kSequential);
  std::vector<CanonicalCycle> cycles = sink.take_cycles();
  if (a.sorted) std::sort(cycles.begin(), cycles.end());
  Output out(a.out);
  write_cycles(out.stream(), cycles);

  json report = {{"distinct_cycles", r.distinct_cycles},
                 {"rounds", r.rounds},
                 {"steps", r.steps},
                 {"submissions", sink.submissions()},
                 {"table_sizes", table_sizes_json(r.table_sizes)},
                 {"aborted", r.aborted},
                 {"seed", a.seed},
                 {"case", "all"},
                 {"elapsed_ms", millis_since(start)}};
  emit_report(report, a.report, a.quiet);
  return kExitOk;
}

struct ListTArgs {
  std::string input, out, report;
  std::uint64_t seed = kDefaultSeed;
  std::size_t t = 0;
  double delta = kDefaultFailureBudget;
  bool parallel = false, lenient = false, quiet = false;
};

int run_list_t(const ListTArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = load(a.input, a.lenient);
  TListerOptions options;
  options.failure_budget = a.delta;
  options.execution = a.parallel ? Execution::kParallel : Execution::kSequential;
  ListTResult r = list_t(g, a.t, a.seed, options);
  Output out(a.out);
  write_cycles(out.stream(), r.cycles);

  json report = {{"distinct_cycles", r.cycles.size()},
                 {"rounds", r.rounds},
                 {"steps", r.steps},
                 {"table_sizes", table_sizes_json(r.table_sizes)},
                 {"aborted", false},
                 {"seed", a.seed},
                 {"case", std::string(case_label(r.which))},
                 {"prefix", r.prefix},
                 {"probes", r.probes},
                 {"shortfall", r.shortfall},
                 {"elapsed_ms", millis_since(start)}};
  emit_report(report, a.report, a.quiet);
  return kExitOk;
}

struct OracleArgs {
  std::string input, out;
  std::size_t k = 6;
  std::size_t limit = 64;
  bool force = false, lenient = false;
};

int run_oracle(const OracleArgs& a) {
  Graph g = load(a.input, a.lenient);
  if (g.num_nodes() > a.limit && !a.force) {
    std::cerr << "oracle: graph has " << g.num_nodes() << " nodes, more than the limit of "
              << a.limit << "; pass --force to run anyway\n";
    return kExitGuard;
  }
  auto cycles = oracle::enumerate_k_cycles(g, a.k);
  Output out(a.out);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out.stream() << (i ? " " : "") << c[i];
    out.stream() << '\n';
  }
  std::cerr << json{{"distinct_cycles", cycles.size()}, {"k", a.k}}.dump() << '\n';
  return kExitOk;
}

struct GenArgs {
  std::string family, out;
  std::size_t n = 0, s = 0, s2 = 0, paths = 0;
  double p = 0.0;
  std::uint64_t seed = kDefaultSeed;
};

const std::vector<std::string> kGenFamilies = {"er",    "bipartite", "blowup", "theta",
                                               "complete", "cycle",  "path",   "tree"};

Graph generate(const GenArgs& a) {
  if (a.family == "er") return gen::erdos_renyi(a.n, a.p, a.seed);
  if (a.family == "bipartite") return gen::complete_bipartite(a.s, a.s2);
  if (a.family == "blowup") return gen::c6_blowup(a.s);
  if (a.family == "theta") return gen::theta(a.paths);
  if (a.family == "complete") return gen::complete(a.n);
  if (a.family == "cycle") return gen::cycle(a.n);
  if (a.family == "path") return gen::path(a.n);
  if (a.family == "tree") return gen::random_tree(a.n, a.seed);
  throw UsageError("unknown family " + a.family);
}

int run_gen(const GenArgs& a) {
  Graph g;
  try {
    g = generate(a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Output out(a.out);
  write_edge_list(out.stream(), g);
  return kExitOk;
}

struct BenchArgs {
  std::string family, out;
  std::vector<std::size_t> params;
  std::optional<double> p;
  std::uint64_t seed = kDefaultSeed;
  std::size_t repeats = 1;
  std::optional<std::uint64_t> rounds;
  double delta = kDefaultFailureBudget;
  bool no_timing = false, parallel = false;
};

const std::vector<std::string> kBenchFamilies = {"theta", "er", "blowup", "bipartite"};

Graph bench_graph(const BenchArgs& a, std::size_t param) {
  if (a.family == "theta") return gen::theta(param);
  if (a.family == "er") {
    const double p = a.p ? *a.p : (param > 0 ? std::min(1.0, 1.5 / static_cast<double>(param)) : 0);
    return gen::erdos_renyi(param, p, a.seed);
  }
  if (a.family == "blowup") return gen::c6_blowup(param);
  if (a.family == "bipartite") return gen::complete_bipartite(param, param);
  throw UsageError("unknown family " + a.family);
}

int run_bench(const BenchArgs& a) {
  Output out(a.out);
  std::ostream& os = out.stream();
  os << "family,param,repeat,n,m,t_found,rounds,steps,N_ac,N_bd,P,Q,R,wall_ms\n";
  RoundsPolicy policy{.explicit_rounds = a.rounds, .failure_budget = a.delta};
  for (std::size_t param : a.params) {
    Graph g;
    try {
      g = bench_graph(a, param);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    for (std::size_t rep = 0; rep < a.repeats; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      CycleSink sink;
      ListAllReport r = list_all(g, policy, a.seed, sink,
                                 a.parallel ? Execution::kParallel : Execution::kSequential);
      const double wall = a.no_timing ? 0.0 : millis_since(start);
      const TableSizes& s = r.table_sizes;
      os << a.family << ',' << param << ',' << rep << ',' << g.num_nodes() << ','
         << g.num_edges() << ',' << r.distinct_cycles << ',' << r.rounds << ',' << r.steps << ','
         << s.n_ac << ',' << s.n_bd << ',' << s.p << ',' << s.q << ',' << s.r << ',' << wall
         << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Output-sensitive 6-cycle listing"};
  app.require_subcommand(1);

  ListAllArgs la;
  auto* list_all_cmd = app.add_subcommand("list-all", "List all 6-cycles (color coding)");
  list_all_cmd->add_option("input", la.input, "Edge-list file")->required();
  list_all_cmd->add_option("--seed", la.seed, "Random seed");
  auto* rounds_opt = list_all_cmd->add_option("--rounds", la.rounds, "Explicit number of rounds");
  list_all_cmd->add_option("--delta", la.delta, "Failure probability bound")
      ->excludes(rounds_opt)
      ->check(CLI::Range(1e-300, 1.0));
  list_all_cmd->add_option("--cap", la.cap, "Stop after this many distinct cycles");
  list_all_cmd->add_option("--out", la.out, "Write cycles here instead of stdout");
  list_all_cmd->add_option("--report", la.report, "Write the JSON report here instead of stderr");
  list_all_cmd->add_flag("--sorted", la.sorted, "Sort cycle lines lexicographically");
  list_all_cmd->add_flag("--parallel", la.parallel, "Run color-coding rounds concurrently");
  list_all_cmd->add_flag("--lenient", la.lenient, "Merge duplicate edges instead of failing");
  list_all_cmd->add_flag("--quiet", la.quiet, "Only the JSON report on stderr");

  ListTArgs lt;
  auto* list_t_cmd = app.add_subcommand("list-t", "List min(t, total) 6-cycles");
  list_t_cmd->add_option("input", lt.input, "Edge-list file")->required();
  list_t_cmd->add_option("--t", lt.t, "Number of cycles wanted")->required();
  list_t_cmd->add_option("--seed", lt.seed, "Random seed");
  list_t_cmd->add_option("--delta", lt.delta, "Per-probe failure probability bound")
      ->check(CLI::Range(1e-300, 1.0));
  list_t_cmd->add_option("--out", lt.out, "Write cycles here instead of stdout");
  list_t_cmd->add_option("--report", lt.report, "Write the JSON report here instead of stderr");
  list_t_cmd->add_flag("--parallel", lt.parallel, "Run color-coding rounds concurrently");
  list_t_cmd->add_flag("--lenient", lt.lenient, "Merge duplicate edges instead of failing");
  list_t_cmd->add_flag("--quiet", lt.quiet, "Only the JSON report on stderr");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force k-cycle enumeration");
  oracle_cmd->add_option("input", oa.input, "Edge-list file")->required();
  oracle_cmd->add_option("--k", oa.k, "Cycle length")->check(CLI::Range(3, 64));
  oracle_cmd->add_option("--limit", oa.limit, "Refuse graphs with more nodes than this");
  oracle_cmd->add_flag("--force", oa.force, "Ignore --limit");
  oracle_cmd->add_option("--out", oa.out, "Write cycles here instead of stdout");
  oracle_cmd->add_flag("--lenient", oa.lenient, "Merge duplicate edges instead of failing");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("family", ga.family, "Graph family")
      ->required()
      ->check(CLI::IsMember(kGenFamilies));
  gen_cmd->add_option("--n", ga.n, "Node count (er, complete, cycle, path, tree)");
  gen_cmd->add_option("--p", ga.p, "Edge probability (er)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--s", ga.s, "Side / group size (bipartite, blowup)");
  gen_cmd->add_option("--s2", ga.s2, "Second side size (bipartite)");
  gen_cmd->add_option("--paths", ga.paths, "Number of paths (theta)");
  gen_cmd->add_option("--seed", ga.seed, "Random seed (er, tree)");
  gen_cmd->add_option("--out", ga.out, "Write here instead of stdout");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep a graph family and report step counts");
  bench_cmd->add_option("--family", ba.family, "theta | er | blowup | bipartite")
      ->required()
      ->check(CLI::IsMember(kBenchFamilies));
  bench_cmd->add_option("--params", ba.params, "Family size parameters")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--p", ba.p, "Edge probability for er (default 1.5/n)")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", ba.seed, "Random seed");
  bench_cmd->add_option("--repeats", ba.repeats, "Runs per parameter")->check(CLI::PositiveNumber);
  auto* bench_rounds = bench_cmd->add_option("--rounds", ba.rounds, "Explicit number of rounds");
  bench_cmd->add_option("--delta", ba.delta, "Failure probability bound")
      ->excludes(bench_rounds)
      ->check(CLI::Range(1e-300, 1.0));
  bench_cmd->add_flag("--no-timing", ba.no_timing, "Report wall_ms as 0");
  bench_cmd->add_flag("--parallel", ba.parallel, "Run color-coding rounds concurrently");
  bench_cmd->add_option("--out", ba.out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list_all_cmd) return run_list_all(la);
    if (*list_t_cmd) return run_list_t(lt);
    if (*oracle_cmd) return run_oracle(oa);
    if (*gen_cmd) return run_gen(ga);
    if (*bench_cmd) return run_bench(ba);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
