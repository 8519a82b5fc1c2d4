#include "sixcycle/color_coding.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <vector>

#include "sixcycle/partition.hpp"
#include "sixcycle/rng.hpp"

namespace sixcycle {

namespace {

constexpr std::uint64_t kParallelChunk = 64;

ListAllReport list_all_sequential(const Graph& g, std::uint64_t rounds, std::uint64_t seed,
                                  CycleSink& sink) {
  ListAllReport report;
  QuadpartiteLister lister;
  Partition4 part;
  for (std::uint64_t r = 0; r < rounds && !sink.aborted(); ++r) {
    Rng rng(round_seed(seed, r));
    part.randomize(g.num_nodes(), rng);
    report.table_sizes += lister.run(g, part, sink).sizes();
    ++report.rounds;
  }
  return report;
}

struct RoundResult {
  std::vector<CanonicalCycle> cycles;
  std::uint64_t steps = 0;
  std::uint64_t submissions = 0;
  TableSizes sizes;
};

ListAllReport list_all_parallel(const Graph& g, std::uint64_t rounds, std::uint64_t seed,
                                CycleSink& sink) {
  ListAllReport report;
  std::vector<RoundResult> results;
  const Graph* verify = nullptr;
  if (sink.verifying()) verify = &g;

  for (std::uint64_t first = 0; first < rounds && !sink.aborted(); first += kParallelChunk) {
    const std::uint64_t count = std::min(kParallelChunk, rounds - first);
    SinkLimits private_limits;
    if (sink.limits().step_budget) {
      private_limits.step_budget = *sink.limits().step_budget - sink.steps();
    }
    results.assign(count, {});
    std::exception_ptr failure;

#pragma omp parallel
    {
      QuadpartiteLister lister;
      Partition4 part;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        try {
          CycleSink local(private_limits);
          local.verify_against(verify);
          Rng rng(round_seed(seed, first + static_cast<std::uint64_t>(i)));
          part.randomize(g.num_nodes(), rng);
          results[i].sizes = lister.run(g, part, local).sizes();
          results[i].steps = local.steps();
          results[i].submissions = local.submissions();
          results[i].cycles = local.take_cycles();
        } catch (...) {
#pragma omp critical(sixcycle_list_all_failure)
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (RoundResult& rr : results) {
      if (sink.aborted()) break;
      ++report.rounds;
      report.table_sizes += rr.sizes;
      for (const CanonicalCycle& c : rr.cycles) {
        if (!sink.submit_canonical(c)) break;
      }
      // submit_canonical already counted and charged each distinct cycle once.
      const std::uint64_t distinct = rr.cycles.size();
      sink.record_submissions(rr.submissions - std::min(rr.submissions, distinct));
      sink.charge(rr.steps - std::min(rr.steps, distinct));
    }
  }
  return report;
}

}  // namespace

std::uint64_t default_rounds(std::size_t n, double delta) {
  const double nodes = static_cast<double>(std::max<std::size_t>(n, 1));
  const double log_term = 6.0 * std::log(nodes) - std::log(delta);
  const double rounds = std::ceil(4096.0 * log_term);
  return rounds < 1.0 ? 1 : static_cast<std::uint64_t>(rounds);
}

std::uint64_t round_seed(std::uint64_t seed, std::uint64_t round) { return mix_seed(seed, round); }

ListAllReport list_all(const Graph& g, const RoundsPolicy& policy, std::uint64_t seed,
                       CycleSink& sink, Execution execution) {
  const std::uint64_t rounds = policy.rounds_for(g.num_nodes());
  const std::uint64_t steps_before = sink.steps();
  ListAllReport report = execution == Execution::kParallel
                             ? list_all_parallel(g, rounds, seed, sink)
                             : list_all_sequential(g, rounds, seed, sink);
  report.distinct_cycles = sink.size();
  report.aborted = sink.aborted();
  report.steps = sink.steps() - steps_before;
  return report;
}

}  // namespace sixcycle
