#pragma once

#include <cstdint>
#include <optional>

#include "sixcycle/graph.hpp"
#include "sixcycle/quadpartite.hpp"
#include "sixcycle/sink.hpp"

namespace sixcycle {

inline constexpr double kDefaultFailureBudget = 1e-6;

/// ceil(4^6 * ln(n^6 / delta)), at least 1. With that many rounds a fixed
/// 6-cycle is missed with probability <= delta / n^6, so all cycles are found
/// with probability >= 1 - delta.
std::uint64_t default_rounds(std::size_t n, double delta);

struct RoundsPolicy {
  std::optional<std::uint64_t> explicit_rounds;
  double failure_budget = kDefaultFailureBudget;

  std::uint64_t rounds_for(std::size_t n) const {
    return explicit_rounds ? *explicit_rounds : default_rounds(n, failure_budget);
  }
};

enum class Execution {
  kSequential,
  /// Rounds run concurrently in fixed-size chunks with private sinks, merged
  /// in round order. Output is identical to kSequential whenever the run is
  /// not aborted.
  kParallel,
};

struct ListAllReport {
  std::size_t distinct_cycles = 0;
  std::uint64_t rounds = 0;  // rounds started
  bool aborted = false;
  std::uint64_t steps = 0;
  TableSizes table_sizes;  // summed over rounds
};

/// Seed of round `round` in a run seeded with `seed`.
std::uint64_t round_seed(std::uint64_t seed, std::uint64_t round);

/**
 * Lists all 6-cycles of `g` with probability >= 1 - delta: each round draws a
 * fresh random 4-coloring and runs the quadpartite lister into the shared,
 * deduplicating `sink`. Stops early if the sink aborts.
 */
ListAllReport list_all(const Graph& g, const RoundsPolicy& policy, std::uint64_t seed,
                       CycleSink& sink, Execution execution = Execution::kSequential);

}  // namespace sixcycle
