#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "sixcycle/cycle.hpp"
#include "sixcycle/graph.hpp"

namespace sixcycle {

struct SinkLimits {
  /// Abort once this many distinct cycles have been collected.
  std::optional<std::size_t> output_cap;
  /// Abort once the step counter exceeds this value.
  std::optional<std::uint64_t> step_budget;
};

enum class AbortReason { kNone, kCap, kBudget };

/**
 * Collects reported 6-cycles, deduplicated by canonical form, in first-report
 * order. Also owns the deterministic step counter that stands in for running
 * time: listers charge one step per table insertion, per innermost loop
 * iteration and per submission, and stop as soon as the sink aborts.
 */
class CycleSink {
 public:
  explicit CycleSink(SinkLimits limits = {});

  /// Adds `steps` to the counter. Returns false once aborted.
  bool charge(std::uint64_t steps = 1) {
    steps_ += steps;
    if (limits_.step_budget && steps_ > *limits_.step_budget && reason_ == AbortReason::kNone) {
      reason_ = AbortReason::kBudget;
    }
    return reason_ == AbortReason::kNone;
  }

  /// Reports the cycle walked as `walk` (costs one step). Returns false once
  /// aborted. When verification is on, throws std::invalid_argument for a
  /// walk that is not a 6-cycle of the verification graph.
  bool submit(const std::array<NodeId, 6>& walk);

  /// Like submit, for a cycle that is already canonical.
  bool submit_canonical(const CanonicalCycle& cycle);

  /// Counts submissions made into another sink whose output was merged here
  /// (their steps are charged separately).
  void record_submissions(std::uint64_t count) { submissions_ += count; }

  /// Enables validation of every submission against `g` (nullptr disables).
  /// `g` must outlive the sink or the next call.
  void verify_against(const Graph* g) { verify_graph_ = g; }
  bool verifying() const { return verify_graph_ != nullptr; }

  bool aborted() const { return reason_ != AbortReason::kNone; }
  AbortReason abort_reason() const { return reason_; }

  const std::vector<CanonicalCycle>& cycles() const { return cycles_; }
  std::vector<CanonicalCycle> take_cycles();
  std::size_t size() const { return cycles_.size(); }
  std::uint64_t steps() const { return steps_; }
  std::uint64_t submissions() const { return submissions_; }
  const SinkLimits& limits() const { return limits_; }

 private:
  bool accept(const CanonicalCycle& cycle);

  SinkLimits limits_;
  // Cycles whose IDs all fit in 10 bits are keyed by a packed 60-bit word,
  // which keeps the probe set small; the rest fall back to the full value.
  absl::flat_hash_set<std::uint64_t> seen_packed_;
  absl::flat_hash_set<CanonicalCycle> seen_;
  std::vector<CanonicalCycle> cycles_;
  std::uint64_t steps_ = 0;
  std::uint64_t submissions_ = 0;
  AbortReason reason_ = AbortReason::kNone;
  const Graph* verify_graph_ = nullptr;
};

}  // namespace sixcycle
