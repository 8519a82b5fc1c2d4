#include "sixcycle/sink.hpp"

#include <utility>

namespace sixcycle {

CycleSink::CycleSink(SinkLimits limits) : limits_(limits) {
  if (limits_.output_cap && *limits_.output_cap == 0) reason_ = AbortReason::kCap;
}

bool CycleSink::submit(const std::array<NodeId, 6>& walk) {
  if (verify_graph_) return submit_canonical(canonicalize(walk, *verify_graph_));
  return submit_canonical(CanonicalCycle::FromWalk(walk));
}

bool CycleSink::submit_canonical(const CanonicalCycle& cycle) {
  if (aborted()) return false;
  ++submissions_;
  if (!charge()) return false;
  return accept(cycle);
}

namespace {

constexpr NodeId kPackedLimit = 1u << 10;

bool pack(const CanonicalCycle& cycle, std::uint64_t& key) {
  key = 0;
  for (NodeId v : cycle.nodes()) {
    if (v >= kPackedLimit) return false;
    key = (key << 10) | v;
  }
  return true;
}

}  // namespace

bool CycleSink::accept(const CanonicalCycle& cycle) {
  std::uint64_t key;
  const bool fresh = pack(cycle, key) ? seen_packed_.insert(key).second : seen_.insert(cycle).second;
  if (fresh) {
    cycles_.push_back(cycle);
    if (limits_.output_cap && cycles_.size() >= *limits_.output_cap) {
      reason_ = AbortReason::kCap;
    }
  }
  return !aborted();
}

std::vector<CanonicalCycle> CycleSink::take_cycles() {
  seen_.clear();
  seen_packed_.clear();
  return std::exchange(cycles_, {});
}

}  // namespace sixcycle
