#pragma once

#include <cstdint>

#include "sixcycle/graph.hpp"

namespace sixcycle::gen {

// Deterministic graph families. Node numbering is fixed per family so that
// prefix subgraphs behave the same on every run.

/// G(n, p): every pair {i, j} independently, pairs visited in (i, j) order.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// K_{s,s2} with sides {0..s-1} and {s..s+s2-1}.
Graph complete_bipartite(std::size_t s, std::size_t s2);

/// Six groups of s nodes (group g is {g*s .. g*s+s-1}); cyclically consecutive
/// groups are completely joined.
Graph c6_blowup(std::size_t s);

/// Terminals 0 and 1 joined by `paths` internally disjoint paths of length 3;
/// path i is 0 - (2+2i) - (3+2i) - 1. Has C(paths, 2) six-cycles.
Graph theta(std::size_t paths);

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);

/// Random recursive tree: node i > 0 attaches to a uniform node in [0, i).
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace sixcycle::gen
