#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

#include "sixcycle/generators.hpp"
#include "sixcycle/partition.hpp"
#include "sixcycle/rng.hpp"
#include "sixcycle/sink.hpp"

namespace sixcycle {
namespace {

using Seq = std::array<NodeId, 6>;

TEST(Sink, DeduplicatesTraversals) {
  CycleSink sink;
  EXPECT_TRUE(sink.submit(Seq{0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(sink.submit(Seq{3, 2, 1, 0, 5, 4}));
  EXPECT_EQ(sink.size(), 1u);
  EXPECT_EQ(sink.submissions(), 2u);
  EXPECT_EQ(sink.steps(), 2u);
}

TEST(Sink, LargeIdsUseTheGeneralPath) {
  CycleSink sink;
  sink.submit(Seq{5000, 1, 2, 3, 4, 5});
  sink.submit(Seq{5, 4, 3, 2, 1, 5000});
  sink.submit(Seq{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(sink.size(), 2u);
}

TEST(Sink, OutputCap) {
  CycleSink sink(SinkLimits{.output_cap = 2, .step_budget = std::nullopt});
  EXPECT_TRUE(sink.submit(Seq{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(sink.submit(Seq{0, 1, 2, 3, 4, 6}));
  EXPECT_EQ(sink.abort_reason(), AbortReason::kCap);
  EXPECT_FALSE(sink.submit(Seq{0, 1, 2, 3, 4, 7}));
  EXPECT_EQ(sink.size(), 2u);
}

TEST(Sink, ZeroCapAbortsImmediately) {
  CycleSink sink(SinkLimits{.output_cap = 0, .step_budget = std::nullopt});
  EXPECT_TRUE(sink.aborted());
  EXPECT_FALSE(sink.submit(Seq{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(sink.size(), 0u);
}

TEST(Sink, StepBudget) {
  CycleSink sink(SinkLimits{.output_cap = std::nullopt, .step_budget = 10});
  EXPECT_TRUE(sink.charge(10));
  EXPECT_FALSE(sink.charge(1));
  EXPECT_EQ(sink.abort_reason(), AbortReason::kBudget);
}

TEST(Sink, VerificationRejectsInvalidWalks) {
  Graph c6 = gen::cycle(6);
  CycleSink sink;
  sink.verify_against(&c6);
  EXPECT_TRUE(sink.verifying());
  EXPECT_THROW(sink.submit(Seq{0, 2, 1, 3, 4, 5}), std::invalid_argument);
  EXPECT_TRUE(sink.submit(Seq{0, 1, 2, 3, 4, 5}));
}

TEST(Sink, TakeCyclesResets) {
  CycleSink sink;
  sink.submit(Seq{0, 1, 2, 3, 4, 5});
  auto taken = sink.take_cycles();
  EXPECT_EQ(taken.size(), 1u);
  EXPECT_EQ(sink.size(), 0u);
  sink.submit(Seq{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(sink.size(), 1u);
}

TEST(Partition, FromCodes) {
  std::vector<int> codes{0, 1, 2, 3};
  Partition4 p = Partition4::FromCodes(codes);
  EXPECT_EQ(p[2], Color::kC);
  std::vector<int> bad{0, 4};
  EXPECT_THROW(Partition4::FromCodes(bad), std::invalid_argument);
}

TEST(Partition, RandomIsDeterministic) {
  Rng empty(7);
  EXPECT_EQ(random_partition(0, empty).size(), 0u);
  Rng a(7), b(7);
  EXPECT_EQ(random_partition(10, a), random_partition(10, b));
}

TEST(Partition, ClassFrequenciesAreUniform) {
  // 10^5 single-node draws; each class count must be within 3 sigma of n/4.
  constexpr int kSamples = 100000;
  std::array<int, 4> counts{};
  Rng rng(2024);
  for (int i = 0; i < kSamples; ++i) ++counts[static_cast<int>(random_partition(1, rng)[0])];
  const double mean = kSamples / 4.0;
  const double sigma = std::sqrt(kSamples * 0.25 * 0.75);
  for (int c : counts) EXPECT_LT(std::abs(c - mean), 3 * sigma);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(1);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.below(bound), bound);
  }
}

TEST(Rng, MixSeedSeparatesIndices) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(mix_seed(42, i));
  EXPECT_EQ(seen.size(), 10000u);
}

}  // namespace
}  // namespace sixcycle
