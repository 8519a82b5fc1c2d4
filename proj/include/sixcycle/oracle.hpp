#pragma once

#include <cstddef>
#include <vector>

#include "sixcycle/cycle.hpp"
#include "sixcycle/graph.hpp"

namespace sixcycle::oracle {

// Brute-force ground truth. Kept deliberately naive: a DFS over simple paths
// rooted at the smallest node of the cycle, with the walking direction fixed by
// requiring path[1] < path[k-1]. Meant for graphs of a few dozen nodes.

/// All k-cycles of `g` in canonical form, sorted ascending. k >= 3.
std::vector<std::vector<NodeId>> enumerate_k_cycles(const Graph& g, std::size_t k);

/// Number of k-cycles through `v`. Throws std::out_of_range for a bad `v`.
std::size_t count_k_cycles_through(const Graph& g, NodeId v, std::size_t k);

/// enumerate_k_cycles(g, 6) converted to CanonicalCycle, sorted.
std::vector<CanonicalCycle> six_cycles(const Graph& g);

}  // namespace sixcycle::oracle
