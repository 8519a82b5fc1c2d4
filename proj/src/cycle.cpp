#include "sixcycle/cycle.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sixcycle {

namespace {

// Writes the canonical order of `seq` into `out` (same length). With distinct
// entries the lexicographic minimum starts at the smallest node and walks
// towards its smaller cyclic neighbor.
template <typename Out>
void write_canonical(std::span<const NodeId> seq, Out out) {
  const std::size_t k = seq.size();
  const std::size_t start = std::min_element(seq.begin(), seq.end()) - seq.begin();
  const NodeId next = seq[(start + 1) % k];
  const NodeId prev = seq[(start + k - 1) % k];
  if (next < prev) {
    for (std::size_t i = 0; i < k; ++i) out[i] = seq[(start + i) % k];
  } else {
    for (std::size_t i = 0; i < k; ++i) out[i] = seq[(start + k - i) % k];
  }
}

void validate(std::span<const NodeId> seq, const Graph& g) {
  const std::size_t k = seq.size();
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 nodes");
  for (std::size_t i = 0; i < k; ++i) {
    if (seq[i] >= g.num_nodes()) {
      throw std::invalid_argument("node " + std::to_string(seq[i]) + " out of range");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (seq[i] == seq[j]) {
        throw std::invalid_argument("repeated node " + std::to_string(seq[i]));
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    NodeId u = seq[i], v = seq[(i + 1) % k];
    if (!g.has_edge(u, v)) {
      throw std::invalid_argument("missing edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
  }
}

}  // namespace

std::vector<NodeId> canonical_sequence(std::span<const NodeId> seq) {
  std::vector<NodeId> out(seq.size());
  if (!seq.empty()) write_canonical(seq, out.begin());
  return out;
}

std::vector<NodeId> canonicalize_k(std::span<const NodeId> seq, const Graph& g) {
  validate(seq, g);
  return canonical_sequence(seq);
}

bool is_cycle_in(std::span<const NodeId> seq, const Graph& g) {
  try {
    validate(seq, g);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

CanonicalCycle CanonicalCycle::FromWalk(const std::array<NodeId, kLength>& seq) {
  // Hot path of every lister: index tables instead of modular arithmetic.
  static constexpr std::uint8_t kNext[6] = {1, 2, 3, 4, 5, 0};
  static constexpr std::uint8_t kPrev[6] = {5, 0, 1, 2, 3, 4};
  std::size_t start = 0;
  for (std::size_t i = 1; i < kLength; ++i) {
    if (seq[i] < seq[start]) start = i;
  }
  CanonicalCycle c;
  const std::uint8_t* step = seq[kNext[start]] < seq[kPrev[start]] ? kNext : kPrev;
  std::size_t at = start;
  for (std::size_t i = 0; i < kLength; ++i, at = step[at]) c.nodes_[i] = seq[at];
  return c;
}

bool CanonicalCycle::contains(NodeId v) const {
  return std::find(nodes_.begin(), nodes_.end(), v) != nodes_.end();
}

CanonicalCycle canonicalize(const std::array<NodeId, 6>& seq, const Graph& g) {
  validate(seq, g);
  return CanonicalCycle::FromWalk(seq);
}

std::ostream& operator<<(std::ostream& os, const CanonicalCycle& c) {
  const auto& v = c.nodes();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os;
}

}  // namespace sixcycle
