#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sixcycle/color_coding.hpp"
#include "sixcycle/cycle.hpp"
#include "sixcycle/graph.hpp"

namespace sixcycle {

/// Multiplier in the step budget C * (n^2 + t + 1) * R(n, delta) given to every
/// "at most t cycles?" probe. Twice the largest steps / ((n^2 + t + 1) * R)
/// ratio observed over the test corpus (about 1.25), rounded up.
inline constexpr double kBudgetConstant = 3.0;

/// Safety multiplier on the anchored lister's round limit.
inline constexpr double kAnchoredRoundSafety = 2.0;

struct TListerOptions {
  double failure_budget = kDefaultFailureBudget;
  double budget_constant = kBudgetConstant;
  Execution execution = Execution::kSequential;
};

/// Outcome of an "at most t?" probe: the complete cycle set when the budgeted
/// run finished, or "more than t" when it hit the cap or the step budget.
struct Decision {
  bool exact = false;
  std::vector<CanonicalCycle> cycles;  // only meaningful when exact
  std::uint64_t steps = 0;
  std::uint64_t rounds = 0;
  TableSizes table_sizes;
  bool budget_tripped = false;

  bool more_than_t() const { return !exact; }
};

std::uint64_t probe_step_budget(std::size_t n, std::size_t t, double delta, double constant);

/// Attempts to list all 6-cycles of `g` with output cap t + 1 and the step
/// budget above.
Decision decide_at_most(const Graph& g, std::size_t t, std::uint64_t seed,
                        const TListerOptions& options = {});

enum class ListTCase {
  kNothingRequested,  // t == 0
  kAllCycles,         // the whole graph has at most t cycles
  kFewInNextPrefix,   // G_{i+1} has at most 2t cycles; return t of them
  kAnchored,          // node v_{i+1} lies on more than t cycles
};

std::string_view case_label(ListTCase c);

struct ListTResult {
  std::vector<CanonicalCycle> cycles;
  ListTCase which = ListTCase::kNothingRequested;
  /// Largest prefix length found to hold at most t cycles (n in the first case).
  std::size_t prefix = 0;
  std::uint64_t steps = 0;
  std::uint64_t rounds = 0;
  std::uint64_t probes = 0;
  TableSizes table_sizes;
  /// The anchored lister ran out of rounds before collecting t cycles.
  bool shortfall = false;
};

/// Returns min(t, total) distinct 6-cycles of `g` (with high probability),
/// using binary search over prefix-induced subgraphs.
ListTResult list_t(const Graph& g, std::size_t t, std::uint64_t seed,
                   const TListerOptions& options = {});

struct AnchoredResult {
  std::vector<std::vector<NodeId>> cycles;  // canonical, in discovery order
  std::uint64_t rounds = 0;
  std::uint64_t steps = 0;
};

/// ceil((k-1)^(k-1) / 2 * ln(n^k / delta)) * safety, rounded up, at least 1.
/// A round finds a fixed cycle through the anchor with probability
/// 2 / (k-1)^(k-1).
std::uint64_t anchored_round_limit(std::size_t n, std::size_t k, double delta,
                                   double safety = kAnchoredRoundSafety);

/**
 * Lists up to t distinct k-cycles through `v`. Each round colors V \ {v} with
 * k-1 colors, grows the layers L_1..L_{k-1} of nodes reachable from v along
 * color-increasing paths (keeping every parent), then walks parent pointers
 * back to v from each layer-(k-1) neighbor of v. Stops at t cycles or at the
 * round limit.
 */
AnchoredResult list_through_node(const Graph& g, NodeId v, std::size_t k, std::size_t t,
                                 std::uint64_t seed, double delta = kDefaultFailureBudget);

}  // namespace sixcycle
