#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sixcycle/cycle.hpp"
#include "sixcycle/edge_list.hpp"
#include "sixcycle/generators.hpp"
#include "sixcycle/oracle.hpp"
#include "support/process.hpp"

namespace sixcycle {
namespace {

using testing::run_process;
using testing::write_graph_file;

const std::string kCli = SIXCYCLE_CLI_PATH;

std::string cli(const std::string& args) { return "'" + kCli + "' " + args; }

std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

// The JSON report is the last line on stderr.
nlohmann::json report_of(const std::string& err) {
  std::string line, last;
  std::istringstream in(err);
  while (std::getline(in, line)) {
    if (!line.empty()) last = line;
  }
  return nlohmann::json::parse(last);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string oracle_text(const Graph& g) {
  std::ostringstream os;
  for (const auto& c : oracle::six_cycles(g)) os << c << '\n';
  return os.str();
}

TEST(Cli, ListAllCycle) {
  auto file = write_graph_file(gen::cycle(6), "c6.txt");
  auto r = run_process(cli("list-all " + quoted(file)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "0 1 2 3 4 5\n");
  auto rep = report_of(r.err);
  EXPECT_EQ(rep["distinct_cycles"], 1);
  EXPECT_EQ(rep["seed"], 42);
  for (const char* key : {"rounds", "steps", "table_sizes", "aborted", "case"}) {
    EXPECT_TRUE(rep.contains(key)) << key;
  }
  for (const char* key : {"N_ac", "N_bd", "P", "Q", "R"}) {
    EXPECT_TRUE(rep["table_sizes"].contains(key)) << key;
  }
}

TEST(Cli, ListAllEmptyGraph) {
  auto file = write_graph_file(build_graph(0, {}), "empty.txt");
  auto r = run_process(cli("list-all " + quoted(file)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(report_of(r.err)["distinct_cycles"], 0);
}

TEST(Cli, ListAllSortedMatchesOracle) {
  Graph k33 = gen::complete_bipartite(3, 3);
  auto file = write_graph_file(k33, "k33.txt");
  auto r = run_process(cli("list-all --sorted " + quoted(file)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, oracle_text(k33));
  EXPECT_EQ(lines(r.out).size(), 6u);
}

TEST(Cli, ListAllOutputLinesRevalidate) {
  Graph g = gen::erdos_renyi(14, 0.4, 3);
  auto file = write_graph_file(g, "er14.txt");
  auto r = run_process(cli("list-all --rounds 3000 " + quoted(file)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto out = lines(r.out);
  EXPECT_EQ(report_of(r.err)["distinct_cycles"], out.size());
  for (const auto& line : out) {
    std::istringstream in(line);
    std::array<NodeId, 6> seq;
    for (auto& x : seq) in >> x;
    EXPECT_EQ(canonicalize(seq, g).nodes(), seq) << line;
  }
}

TEST(Cli, ListAllCapAndReportFile) {
  auto file = write_graph_file(gen::complete(6), "k6.txt");
  auto report = testing::scratch_dir() / "report.json";
  auto r = run_process(cli("list-all --cap 5 --report " + quoted(report) + " " + quoted(file)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 5u);
  auto rep = nlohmann::json::parse(testing::read_file(report));
  EXPECT_EQ(rep["aborted"], true);
  EXPECT_EQ(rep["distinct_cycles"], 5);
}

TEST(Cli, ListT) {
  auto k33 = write_graph_file(gen::complete_bipartite(3, 3), "k33.txt");
  auto r = run_process(cli("list-t --t 4 " + quoted(k33)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 4u);
  EXPECT_TRUE(report_of(r.err).contains("case"));

  auto theta = write_graph_file(gen::theta(2), "theta2.txt");
  r = run_process(cli("list-t --t 10 " + quoted(theta)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 1u);
  EXPECT_EQ(report_of(r.err)["case"], "1");

  r = run_process(cli("list-t --t 0 " + quoted(k33)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(report_of(r.err)["case"], "none");
}

TEST(Cli, Oracle) {
  auto k6 = write_graph_file(gen::complete(6), "k6.txt");
  auto r = run_process(cli("oracle --k 6 " + quoted(k6)));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 60u);

  auto c6 = write_graph_file(gen::cycle(6), "c6.txt");
  r = run_process(cli("oracle --k 4 " + quoted(c6)));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");

  auto big = write_graph_file(gen::path(100), "path100.txt");
  EXPECT_EQ(run_process(cli("oracle " + quoted(big))).exit_code, 3);
  EXPECT_EQ(run_process(cli("oracle --force " + quoted(big))).exit_code, 0);
}

TEST(Cli, Gen) {
  auto r = run_process(cli("gen theta --paths 3"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(read_edge_list(in), gen::theta(3));

  r = run_process(cli("gen er --n 20 --p 0.3 --seed 5"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream er(r.out);
  EXPECT_EQ(read_edge_list(er), gen::erdos_renyi(20, 0.3, 5));

  EXPECT_EQ(run_process(cli("gen nosuchfamily")).exit_code, 2);
}

TEST(Cli, Bench) {
  auto r = run_process(cli("bench --family theta --params 2,4 --rounds 100 --no-timing --repeats 2"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto out = lines(r.out);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(out[0], "family,param,repeat,n,m,t_found,rounds,steps,N_ac,N_bd,P,Q,R,wall_ms");
  EXPECT_EQ(run_process(cli("bench --family nosuch --params 2")).exit_code, 2);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run_process(cli("")).exit_code, 2);
  EXPECT_EQ(run_process(cli("list-all")).exit_code, 2);
  EXPECT_EQ(run_process(cli("list-all /nonexistent/file.txt")).exit_code, 2);
  auto bad = testing::scratch_dir() / "bad.txt";
  {
    std::ofstream out(bad);
    out << "3 2\n0 1\n";
  }
  EXPECT_EQ(run_process(cli("list-all " + quoted(bad))).exit_code, 2);
  auto dup = testing::scratch_dir() / "dup.txt";
  {
    std::ofstream out(dup);
    out << "2 2\n0 1\n1 0\n";
  }
  EXPECT_EQ(run_process(cli("list-all " + quoted(dup))).exit_code, 2);
  EXPECT_EQ(run_process(cli("list-all --lenient " + quoted(dup))).exit_code, 0);
  EXPECT_EQ(run_process(cli("list-all --rounds 5 --delta 0.1 " + quoted(dup))).exit_code, 2);
  EXPECT_EQ(run_process(cli("--help")).exit_code, 0);
}

TEST(Cli, ParallelFlagGivesSameOutput) {
  auto file = write_graph_file(gen::erdos_renyi(16, 0.4, 1), "er16.txt");
  auto seq = run_process(cli("list-all --rounds 2000 " + quoted(file)));
  auto par = run_process(cli("list-all --rounds 2000 --parallel " + quoted(file)));
  ASSERT_EQ(seq.exit_code, 0);
  EXPECT_EQ(seq.out, par.out);
}

}  // namespace
}  // namespace sixcycle
