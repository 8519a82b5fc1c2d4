#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sixcycle {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

enum class DuplicatePolicy { kReject, kMerge };

/**
 * Immutable undirected simple graph in compressed sparse row form.
 *
 * Node IDs are dense in [0, n). Every neighbor list is strictly increasing and
 * the adjacency relation is symmetric. The order of node IDs is the order used
 * for prefix-induced subgraphs.
 */
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a validated graph. Throws std::invalid_argument on self-loops,
  /// out-of-range IDs, or (under kReject) duplicate edges.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges,
                         DuplicatePolicy duplicates = DuplicatePolicy::kReject);

  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  /// O(log deg) membership test.
  bool has_edge(NodeId u, NodeId v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edge_list() const;

  /// Subgraph induced by nodes [0, count). Node IDs are preserved.
  /// Requires 1 <= count <= n; throws std::out_of_range otherwise.
  Graph prefix(std::size_t count) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges,
                         DuplicatePolicy duplicates = DuplicatePolicy::kReject) {
  return Graph::FromEdges(n, edges, duplicates);
}

inline Graph prefix_subgraph(const Graph& g, std::size_t count) { return g.prefix(count); }

}  // namespace sixcycle
