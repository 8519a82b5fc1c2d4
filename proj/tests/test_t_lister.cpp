#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <iostream>
#include <set>

#include "sixcycle/generators.hpp"
#include "sixcycle/oracle.hpp"
#include "sixcycle/rng.hpp"
#include "sixcycle/t_lister.hpp"
#include "support/corpus.hpp"

namespace sixcycle {
namespace {

void expect_valid_subset(const std::vector<CanonicalCycle>& got, const Graph& g,
                         std::size_t want, const std::string& what) {
  auto all = oracle::six_cycles(g);
  std::set<CanonicalCycle> seen;
  EXPECT_EQ(got.size(), want) << what;
  for (const auto& c : got) {
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), c)) << what;
    EXPECT_TRUE(seen.insert(c).second) << what;
  }
}

TEST(Decide, Examples) {
  Decision c6 = decide_at_most(gen::cycle(6), 5, 1);
  EXPECT_TRUE(c6.exact);
  EXPECT_EQ(c6.cycles.size(), 1u);

  Decision few = decide_at_most(gen::complete_bipartite(3, 3), 3, 1);
  EXPECT_TRUE(few.more_than_t());
  EXPECT_FALSE(few.budget_tripped);

  Decision exact = decide_at_most(gen::complete_bipartite(3, 3), 6, 1);
  EXPECT_TRUE(exact.exact);
  EXPECT_EQ(exact.cycles.size(), 6u);
}

TEST(Decide, BudgetTrips) {
  TListerOptions tight;
  tight.budget_constant = 1e-6;
  Decision d = decide_at_most(gen::complete(8), 1000, 1, tight);
  EXPECT_TRUE(d.more_than_t());
  EXPECT_TRUE(d.budget_tripped);
}

TEST(Decide, BudgetFormula) {
  const double expected = 2.0 * (10 * 10 + 4 + 1) * static_cast<double>(default_rounds(10, 1e-6));
  EXPECT_EQ(probe_step_budget(10, 4, 1e-6, 2.0), static_cast<std::uint64_t>(expected));
}

TEST(Decide, BudgetConstantCoversCorpus) {
  // Twice the per-round ratio of every prefix must fit under the constant, so
  // no probe on a graph with at most t cycles can trip the budget.
  for (const auto& [name, g] : testing::small_corpus()) {
    for (std::size_t i = 1; i <= g.num_nodes(); ++i) {
      const Graph prefix = g.prefix(i);
      const double t = static_cast<double>(oracle::six_cycles(prefix).size());
      CycleSink sink;
      ListAllReport r = list_all(prefix, RoundsPolicy{.explicit_rounds = 512}, 1, sink);
      const double n = static_cast<double>(i);
      ASSERT_LE(2 * static_cast<double>(r.steps) / ((n * n + t + 1) * 512), kBudgetConstant)
          << name << " prefix " << i;
    }
  }
}

TEST(Decide, ExactWheneverAtMostT) {
  for (const auto& [name, g] : testing::small_corpus()) {
    const std::size_t total = oracle::six_cycles(g).size();
    Decision d = decide_at_most(g, total, 5);
    ASSERT_TRUE(d.exact) << name;
    ASSERT_FALSE(d.budget_tripped) << name;
    std::sort(d.cycles.begin(), d.cycles.end());
    ASSERT_EQ(d.cycles, oracle::six_cycles(g)) << name;
  }
}

TEST(ListT, Examples) {
  EXPECT_TRUE(list_t(gen::complete(6), 0, 1).cycles.empty());
  EXPECT_EQ(list_t(gen::complete(6), 0, 1).which, ListTCase::kNothingRequested);

  ListTResult theta = list_t(gen::theta(2), 10, 1);
  EXPECT_EQ(theta.which, ListTCase::kAllCycles);
  expect_valid_subset(theta.cycles, gen::theta(2), 1, "theta(2)");

  ListTResult k33 = list_t(gen::complete_bipartite(3, 3), 4, 1);
  expect_valid_subset(k33.cycles, gen::complete_bipartite(3, 3), 4, "k33");
  EXPECT_FALSE(k33.shortfall);
}

TEST(ListT, InterleavedCompleteBipartite) {
  // K_{3,3} with the sides interleaved in the node order.
  std::vector<Edge> edges;
  for (NodeId u : {0, 2, 4}) {
    for (NodeId v : {1, 3, 5}) edges.emplace_back(u, v);
  }
  Graph g = build_graph(6, edges);
  for (std::size_t t = 0; t <= 8; ++t) {
    expect_valid_subset(list_t(g, t, 3).cycles, g, std::min<std::size_t>(t, 6),
                        "t=" + std::to_string(t));
  }
}

TEST(ListT, ReachesEveryCase) {
  // Cycles of the blow-up appear only once the last groups arrive, so small t
  // needs the anchored case and large t the others.
  Graph g = gen::c6_blowup(2);
  std::set<ListTCase> cases;
  const std::size_t total = oracle::six_cycles(g).size();
  for (std::size_t t : {1, 2, 3, 5, 8, 13, 20, 40, 63, 64, 100, 112, 200}) {
    ListTResult r = list_t(g, t, 11);
    expect_valid_subset(r.cycles, g, std::min(t, total), "t=" + std::to_string(t));
    cases.insert(r.which);
  }
  EXPECT_TRUE(cases.count(ListTCase::kAllCycles));
  EXPECT_TRUE(cases.count(ListTCase::kFewInNextPrefix));
  EXPECT_TRUE(cases.count(ListTCase::kAnchored));
}

TEST(ListT, AnchoredCaseOnReorderedTheta) {
  // Theta graph whose terminals come last: the final node closes every cycle
  // at once, so small t lands in the anchored case.
  Graph theta = gen::theta(6);
  const std::size_t n = theta.num_nodes();
  std::vector<NodeId> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::rotate(relabel.begin(), relabel.begin() + 2, relabel.end());  // 0,1 -> n-2,n-1
  std::vector<NodeId> position(n);
  for (NodeId i = 0; i < n; ++i) position[relabel[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : theta.edge_list()) edges.emplace_back(position[u], position[v]);
  Graph g = build_graph(n, edges);

  ListTResult r = list_t(g, 3, 5);
  EXPECT_EQ(r.which, ListTCase::kAnchored);
  expect_valid_subset(r.cycles, g, 3, "anchored");
  for (const auto& c : r.cycles) EXPECT_TRUE(c.contains(static_cast<NodeId>(r.prefix)));
}

// Regression guard on the step counter: steps <= K' (n^2 + t) log2(n + 2).
// K' absorbs the 4^6 ln(1 / delta) rounds of every probe, hence its size. The
// largest ratio seen on the corpus is about 4.9e4.
constexpr double kListTStepConstant = 1e5;

TEST(ListTProperty, ContractOnSmallCorpus) {
  double worst = 0;
  for (const auto& [name, g] : testing::small_corpus()) {
    const std::size_t total = oracle::six_cycles(g).size();
    const double n = static_cast<double>(g.num_nodes());
    for (std::size_t t : {std::size_t{1}, std::size_t{5}, total > 0 ? total - 1 : 0, total}) {
      ListTResult r = list_t(g, t, 7);
      expect_valid_subset(r.cycles, g, std::min(t, total), name + " t=" + std::to_string(t));
      const double ratio = static_cast<double>(r.steps) /
                           ((n * n + static_cast<double>(t)) * std::log2(n + 2));
      worst = std::max(worst, ratio);
      EXPECT_LE(ratio, kListTStepConstant) << name << " t=" << t;
    }
  }
  std::cout << "largest steps / ((n^2 + t) log2(n + 2)): " << worst << '\n';
}

TEST(ListTProperty, PrefixCountsAreMonotone) {
  for (const auto& [name, g] : testing::small_corpus()) {
    std::size_t prev = 0;
    for (std::size_t i = 1; i <= g.num_nodes(); ++i) {
      const std::size_t c = oracle::six_cycles(g.prefix(i)).size();
      ASSERT_GE(c, prev) << name;
      prev = c;
    }
  }
}

TEST(Anchored, Examples) {
  AnchoredResult c6 = list_through_node(gen::cycle(6), 0, 6, 1, 1);
  EXPECT_EQ(c6.cycles, (std::vector<std::vector<NodeId>>{{0, 1, 2, 3, 4, 5}}));

  Graph k33 = gen::complete_bipartite(3, 3);
  AnchoredResult r = list_through_node(k33, 0, 6, 4, 1);
  ASSERT_EQ(r.cycles.size(), 4u);
  auto through = oracle::enumerate_k_cycles(k33, 6);
  for (const auto& c : r.cycles) {
    EXPECT_TRUE(std::find(c.begin(), c.end(), 0) != c.end());
    EXPECT_TRUE(std::binary_search(through.begin(), through.end(), c));
  }

  AnchoredResult k5 = list_through_node(gen::complete(5), 0, 4, 3, 1);
  EXPECT_EQ(k5.cycles.size(), 3u);
  std::set<std::vector<NodeId>> distinct(k5.cycles.begin(), k5.cycles.end());
  EXPECT_EQ(distinct.size(), 3u);
  for (const auto& c : k5.cycles) EXPECT_TRUE(is_cycle_in(c, gen::complete(5)));
}

TEST(Anchored, ReturnsShortWhenFewExist) {
  AnchoredResult r = list_through_node(gen::cycle(6), 2, 6, 5, 1);
  EXPECT_EQ(r.cycles.size(), 1u);
  EXPECT_EQ(r.rounds, anchored_round_limit(6, 6, kDefaultFailureBudget));
}

TEST(Anchored, Errors) {
  EXPECT_THROW(list_through_node(gen::cycle(6), 6, 6, 1, 1), std::out_of_range);
  EXPECT_THROW(list_through_node(gen::cycle(6), 0, 2, 1, 1), std::invalid_argument);
  EXPECT_TRUE(list_through_node(gen::cycle(6), 0, 6, 0, 1).cycles.empty());
}

TEST(Anchored, RoundLimit) {
  // k = 6: a round succeeds with probability 2 / 5^5.
  const double base = std::ceil(3125.0 / 2.0 * std::log(std::pow(32.0, 6) / 1e-6));
  EXPECT_EQ(anchored_round_limit(32, 6, 1e-6), static_cast<std::uint64_t>(2 * base));
}

TEST(AnchoredProperty, AllThroughAnchorOnSmallCorpus) {
  Rng rng(44);
  for (const auto& [name, g] : testing::small_corpus()) {
    for (std::size_t k : {4u, 6u}) {
      auto all = oracle::enumerate_k_cycles(g, k);
      for (int trial = 0; trial < 3; ++trial) {
        const auto v = static_cast<NodeId>(rng.below(g.num_nodes()));
        const std::size_t through = oracle::count_k_cycles_through(g, v, k);
        const std::size_t t = std::min<std::size_t>(3, through);
        AnchoredResult r = list_through_node(g, v, k, t, rng());
        ASSERT_EQ(r.cycles.size(), t) << name;
        std::set<std::vector<NodeId>> distinct;
        for (const auto& c : r.cycles) {
          ASSERT_TRUE(std::find(c.begin(), c.end(), v) != c.end()) << name;
          ASSERT_TRUE(std::binary_search(all.begin(), all.end(), c)) << name;
          ASSERT_TRUE(distinct.insert(c).second) << name;
        }
      }
    }
  }
}

TEST(Labels, Cases) {
  EXPECT_EQ(case_label(ListTCase::kNothingRequested), "none");
  EXPECT_EQ(case_label(ListTCase::kAllCycles), "1");
  EXPECT_EQ(case_label(ListTCase::kFewInNextPrefix), "2(1)");
  EXPECT_EQ(case_label(ListTCase::kAnchored), "2(2)");
}

}  // namespace
}  // namespace sixcycle
