#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sixcycle/graph.hpp"

namespace sixcycle {

/// Lexicographically smallest of the 2k rotations/reflections of a cycle's
/// node sequence. Assumes distinct entries; does not consult any graph.
std::vector<NodeId> canonical_sequence(std::span<const NodeId> seq);

/// Validated variant: throws std::invalid_argument if a node repeats, the
/// sequence is shorter than 3, or two cyclically consecutive nodes are not
/// adjacent in `g`.
std::vector<NodeId> canonicalize_k(std::span<const NodeId> seq, const Graph& g);

bool is_cycle_in(std::span<const NodeId> seq, const Graph& g);

/**
 * A copy of C6 identified by its canonical node sequence. The twelve ways of
 * walking one cycle all map to the same value, so this is the dedup key for
 * everything that reports 6-cycles.
 */
class CanonicalCycle {
 public:
  static constexpr std::size_t kLength = 6;

  /// Canonicalizes without validation. `seq` must be six distinct IDs.
  static CanonicalCycle FromWalk(const std::array<NodeId, kLength>& seq);

  const std::array<NodeId, kLength>& nodes() const { return nodes_; }
  bool contains(NodeId v) const;

  friend auto operator<=>(const CanonicalCycle&, const CanonicalCycle&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const CanonicalCycle& c) {
    const auto& v = c.nodes_;
    auto word = [&](int i) { return (std::uint64_t{v[i]} << 32) | v[i + 1]; };
    return H::combine(std::move(h), word(0), word(2), word(4));
  }

 private:
  std::array<NodeId, kLength> nodes_{};
};

/// Validating canonicalization of a six-node walk; throws
/// std::invalid_argument on a repeated node or a missing edge.
CanonicalCycle canonicalize(const std::array<NodeId, 6>& seq, const Graph& g);

/// Space-separated node IDs.
std::ostream& operator<<(std::ostream& os, const CanonicalCycle& c);

}  // namespace sixcycle
