#include "sixcycle/t_lister.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <absl/container/flat_hash_set.h>

#include "sixcycle/rng.hpp"

namespace sixcycle {

std::uint64_t probe_step_budget(std::size_t n, std::size_t t, double delta, double constant) {
  const double nn = static_cast<double>(n);
  const double budget = constant * (nn * nn + static_cast<double>(t) + 1.0) *
                        static_cast<double>(default_rounds(n, delta));
  if (budget >= 0x1.0p63) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(budget));
}

Decision decide_at_most(const Graph& g, std::size_t t, std::uint64_t seed,
                        const TListerOptions& options) {
  SinkLimits limits;
  limits.output_cap = t == std::numeric_limits<std::size_t>::max() ? t : t + 1;
  limits.step_budget =
      probe_step_budget(g.num_nodes(), t, options.failure_budget, options.budget_constant);
  CycleSink sink(limits);
  RoundsPolicy policy{.explicit_rounds = std::nullopt, .failure_budget = options.failure_budget};
  ListAllReport report = list_all(g, policy, seed, sink, options.execution);

  Decision d;
  d.exact = !report.aborted;
  d.steps = report.steps;
  d.rounds = report.rounds;
  d.table_sizes = report.table_sizes;
  d.budget_tripped = sink.abort_reason() == AbortReason::kBudget;
  if (d.exact) d.cycles = sink.take_cycles();
  return d;
}

std::string_view case_label(ListTCase c) {
  switch (c) {
    case ListTCase::kNothingRequested:
      return "none";
    case ListTCase::kAllCycles:
      return "1";
    case ListTCase::kFewInNextPrefix:
      return "2(1)";
    case ListTCase::kAnchored:
      return "2(2)";
  }
  return "?";
}

namespace {

// Probe seeds: even indices for "at most t" probes on G_i, odd for the 2t probe.
std::uint64_t probe_seed(std::uint64_t seed, std::size_t prefix, bool doubled) {
  return mix_seed(seed, 2 * static_cast<std::uint64_t>(prefix) + (doubled ? 1 : 0));
}

void absorb(ListTResult& out, const Decision& d) {
  out.steps += d.steps;
  out.rounds += d.rounds;
  out.table_sizes += d.table_sizes;
  ++out.probes;
}

}  // namespace

ListTResult list_t(const Graph& g, std::size_t t, std::uint64_t seed,
                   const TListerOptions& options) {
  ListTResult out;
  if (t == 0) return out;
  const std::size_t n = g.num_nodes();

  // Whole graph first: when it qualifies this is also the answer.
  Decision whole;
  whole.exact = n == 0;
  if (n > 0) whole = decide_at_most(g, t, probe_seed(seed, n, false), options);
  absorb(out, whole);
  if (whole.exact) {
    out.which = ListTCase::kAllCycles;
    out.prefix = n;
    out.cycles = std::move(whole.cycles);
    return out;
  }

  // G_lo has at most t cycles, G_hi more. Prefixes of at most five nodes are
  // cycle-free, so they qualify without a probe.
  std::size_t lo = std::min<std::size_t>(5, n - 1);
  std::size_t hi = n;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    Decision d = decide_at_most(g.prefix(mid), t, probe_seed(seed, mid, false), options);
    absorb(out, d);
    (d.exact ? lo : hi) = mid;
  }
  out.prefix = lo;

  const Graph next = g.prefix(lo + 1);
  Decision twice = decide_at_most(next, 2 * t, probe_seed(seed, lo + 1, true), options);
  absorb(out, twice);
  if (twice.exact) {
    out.which = ListTCase::kFewInNextPrefix;
    std::sort(twice.cycles.begin(), twice.cycles.end());
    twice.cycles.resize(std::min(t, twice.cycles.size()));
    out.cycles = std::move(twice.cycles);
    return out;
  }

  // More than 2t cycles in G_{lo+1} but at most t in G_lo: node `lo` (the last
  // one added) lies on more than t of them.
  out.which = ListTCase::kAnchored;
  AnchoredResult anchored = list_through_node(next, static_cast<NodeId>(lo), 6, t,
                                              mix_seed(seed, 2 * n + 2), options.failure_budget);
  out.steps += anchored.steps;
  out.rounds += anchored.rounds;
  for (const auto& c : anchored.cycles) {
    std::array<NodeId, 6> w;
    std::copy(c.begin(), c.end(), w.begin());
    out.cycles.push_back(CanonicalCycle::FromWalk(w));
  }
  out.shortfall = out.cycles.size() < t;
  return out;
}

// ---------------------------------------------------------------------------
// Anchored lister

std::uint64_t anchored_round_limit(std::size_t n, std::size_t k, double delta, double safety) {
  // A fixed cycle through the anchor is found when its other k-1 nodes get the
  // colors 1..k-1 in path order, in one of the two directions.
  const double colors = static_cast<double>(k - 1);
  const double inv_success = std::pow(colors, colors) / 2.0;
  const double nodes = static_cast<double>(std::max<std::size_t>(n, 1));
  const double rounds =
      std::ceil(std::ceil(inv_success * (static_cast<double>(k) * std::log(nodes) - std::log(delta))) *
                safety);
  return rounds < 1.0 ? 1 : static_cast<std::uint64_t>(rounds);
}

namespace {

struct AnchoredSearch {
  const Graph& g;
  NodeId anchor;
  std::size_t k;
  std::size_t want;
  std::vector<std::uint8_t> color;            // 0 for the anchor, 1..k-1 otherwise
  std::vector<char> reached;
  std::vector<std::vector<NodeId>> parents;   // valid for reached nodes
  std::vector<std::vector<NodeId>> layers;    // layers[j] = L_j, j = 1..k-1
  std::vector<NodeId> walk;                   // walk[j] = chosen node of L_j
  absl::flat_hash_set<std::vector<NodeId>> seen;
  AnchoredResult result;

  bool done() const { return result.cycles.size() >= want; }

  void round(Rng& rng) {
    const std::size_t n = g.num_nodes();
    for (NodeId u = 0; u < n; ++u) {
      color[u] = u == anchor ? 0 : static_cast<std::uint8_t>(1 + rng.below(k - 1));
    }
    result.steps += n;

    for (auto& layer : layers) {
      for (NodeId u : layer) reached[u] = 0;
      layer.clear();
    }
    for (NodeId u : g.neighbors(anchor)) {
      ++result.steps;
      if (color[u] == 1) {
        reached[u] = 1;
        parents[u].assign(1, anchor);
        layers[1].push_back(u);
      }
    }
    for (std::size_t j = 2; j < k; ++j) {
      for (NodeId u : layers[j - 1]) {
        for (NodeId w : g.neighbors(u)) {
          ++result.steps;
          if (color[w] != j) continue;
          if (!reached[w]) {
            reached[w] = 1;
            parents[w].clear();
            layers[j].push_back(w);
          }
          parents[w].push_back(u);
        }
      }
    }

    for (NodeId last : layers[k - 1]) {
      if (done()) return;
      ++result.steps;
      if (!g.has_edge(anchor, last)) continue;
      walk[k - 1] = last;
      trace(k - 1);
    }
  }

  // walk[j..k-1] is fixed; choose walk[j-1] among the parents of walk[j].
  void trace(std::size_t j) {
    if (j == 1) {
      walk[0] = anchor;
      ++result.steps;
      auto canonical = canonical_sequence(walk);
      if (seen.insert(canonical).second) result.cycles.push_back(std::move(canonical));
      return;
    }
    for (NodeId p : parents[walk[j]]) {
      if (done()) return;
      ++result.steps;
      walk[j - 1] = p;
      trace(j - 1);
    }
  }
};

}  // namespace

AnchoredResult list_through_node(const Graph& g, NodeId v, std::size_t k, std::size_t t,
                                 std::uint64_t seed, double delta) {
  if (v >= g.num_nodes()) {
    throw std::out_of_range("anchor node " + std::to_string(v) + " out of range");
  }
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (t == 0) return {};

  const std::size_t n = g.num_nodes();
  AnchoredSearch search{g,
                        v,
                        k,
                        t,
                        std::vector<std::uint8_t>(n, 0),
                        std::vector<char>(n, 0),
                        std::vector<std::vector<NodeId>>(n),
                        std::vector<std::vector<NodeId>>(k),
                        std::vector<NodeId>(k, 0),
                        {},
                        {}};
  const std::uint64_t limit = anchored_round_limit(n, k, delta);
  for (std::uint64_t r = 0; r < limit && !search.done(); ++r) {
    Rng rng(mix_seed(seed, r));
    search.round(rng);
    ++search.result.rounds;
  }
  return std::move(search.result);
}

}  // namespace sixcycle
