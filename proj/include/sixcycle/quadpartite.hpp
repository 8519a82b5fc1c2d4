#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "sixcycle/graph.hpp"
#include "sixcycle/partition.hpp"
#include "sixcycle/sink.hpp"

namespace sixcycle {

// Lists every 6-cycle a-b1-c1-d-c2-b2 whose nodes lie in classes A, B, C, D,
// C, B in that cyclic order, in O(n^2 + t) steps where t counts all 6-cycles of
// the graph. Stage I builds the path tables below; stage II pastes pairs of
// a-to-d paths together in four (overlapping) cases.
//
// Tables, with lowercase letters naming members of the matching class:
//   N_ac[a,c]  common neighbors of a and c in B
//   N_bd[b,d]  common neighbors of b and d in C
//   P[a,d]     b in N(a) with |N_bd[b,d]| >= 2
//   Q[a,d]     c in N(d) with |N_ac[a,c]| >= 2
//   R[a,d]     edges (b,c) on a path a-b-c-d with |N_ac[a,c]| = |N_bd[b,d]| = 1

struct TableSizes {
  std::uint64_t n_ac = 0;
  std::uint64_t n_bd = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;

  std::uint64_t total() const { return n_ac + n_bd + p + q + r; }
  TableSizes& operator+=(const TableSizes& o) {
    n_ac += o.n_ac;
    n_bd += o.n_bd;
    p += o.p;
    q += o.q;
    r += o.r;
    return *this;
  }
  friend bool operator==(const TableSizes&, const TableSizes&) = default;
};

/// A P or Q element together with the index of the N list it completes
/// (N_bd[b,d] for a P entry b, N_ac[a,c] for a Q entry c).
struct PathRef {
  NodeId node;
  std::uint32_t list;
};

struct MiddleEdge {
  NodeId b;
  NodeId c;
  friend bool operator==(const MiddleEdge&, const MiddleEdge&) = default;
};

/// P, Q and R for one endpoint pair (a, d).
struct EndpointEntry {
  NodeId a = 0;
  NodeId d = 0;
  std::vector<PathRef> p;
  std::vector<PathRef> q;
  std::vector<MiddleEdge> r;
};

/// Neighbor lists split by the color of the neighbor, rebuilt per partition.
class ColoredAdjacency {
 public:
  void build(const Graph& g, const Partition4& part);

  std::span<const NodeId> neighbors(NodeId v, Color c) const {
    const std::size_t slot = 4 * static_cast<std::size_t>(v) + static_cast<std::size_t>(c);
    return {nbrs_.data() + offsets_[slot], nbrs_.data() + offsets_[slot + 1]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<NodeId> nbrs_;
};

class PathTables {
 public:
  /// Entries are empty spans / vectors for keys that were never touched.
  std::span<const NodeId> n_ac(NodeId a, NodeId c) const;
  std::span<const NodeId> n_bd(NodeId b, NodeId d) const;
  std::vector<NodeId> p(NodeId a, NodeId d) const;
  std::vector<NodeId> q(NodeId a, NodeId d) const;
  std::span<const MiddleEdge> r(NodeId a, NodeId d) const;

  /// Endpoint pairs with at least one P, Q or R element, in first-insertion
  /// order.
  std::span<const EndpointEntry> endpoints() const { return {endpoints_.data(), endpoints_used_}; }

  /// Raw list access by index, as referenced from PathRef::list.
  std::span<const NodeId> n_ac_list(std::uint32_t i) const { return nac_lists_[i]; }
  std::span<const NodeId> n_bd_list(std::uint32_t i) const { return nbd_lists_[i]; }

  const TableSizes& sizes() const { return sizes_; }

  /// False when stage I stopped early because the sink aborted.
  bool complete() const { return complete_; }

 private:
  friend class QuadpartiteLister;

  void reset();
  std::uint32_t nac_slot(NodeId a, NodeId c);
  std::uint32_t nbd_slot(NodeId b, NodeId d);
  EndpointEntry& endpoint(NodeId a, NodeId d);

  absl::flat_hash_map<std::uint64_t, std::uint32_t> nac_index_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> nbd_index_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> endpoint_index_;
  // Pools keep their capacity across reset(); only the first *_used_ slots
  // are live.
  std::vector<std::vector<NodeId>> nac_lists_;
  std::vector<std::vector<NodeId>> nbd_lists_;
  std::vector<EndpointEntry> endpoints_;
  std::size_t nac_used_ = 0;
  std::size_t nbd_used_ = 0;
  std::size_t endpoints_used_ = 0;
  TableSizes sizes_;
  bool complete_ = false;
};

/**
 * Reusable workspace for the quadpartite lister. Color coding calls run() once
 * per round; reusing one instance avoids reallocating the tables every time.
 */
class QuadpartiteLister {
 public:
  /// Stage I. Charges the sink one step per table insertion and per inner
  /// loop iteration; returns partially filled tables if the sink aborts.
  const PathTables& compute_tables(const Graph& g, const Partition4& part, CycleSink& sink);

  /// Stage I followed by all four reporting cases. Stops as soon as the sink
  /// aborts.
  const PathTables& run(const Graph& g, const Partition4& part, CycleSink& sink);

  const PathTables& tables() const { return tables_; }

 private:
  ColoredAdjacency adjacency_;
  PathTables tables_;
};

/// Both paths have a replacement: b1 in P[a,d], c2 in Q[a,d].
void report_case1(const PathTables& tables, CycleSink& sink);
/// Two P paths, then two Q paths.
void report_case2(const PathTables& tables, CycleSink& sink);
/// Two replacement-free paths from R[a,d].
void report_case3(const PathTables& tables, CycleSink& sink);
/// One P (or Q) path combined with one R path.
void report_case4(const PathTables& tables, CycleSink& sink);

PathTables compute_tables(const Graph& g, const Partition4& part, CycleSink& sink);

/// One-shot list of all ABCDCB-colored 6-cycles into `sink`.
TableSizes list_quadpartite(const Graph& g, const Partition4& part, CycleSink& sink);

}  // namespace sixcycle
