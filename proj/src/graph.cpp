#include "sixcycle/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sixcycle {

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges, DuplicatePolicy duplicates) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has a node ID outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(u));
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  auto dup = std::adjacent_find(normalized.begin(), normalized.end());
  if (dup != normalized.end()) {
    if (duplicates == DuplicatePolicy::kReject) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                  std::to_string(dup->second) + ")");
    }
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.neighbors_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Smaller neighbors first, then larger ones; both passes visit them in
  // ascending order because `normalized` is sorted.
  for (auto [u, v] : normalized) g.neighbors_[cursor[v]++] = u;
  for (auto [u, v] : normalized) g.neighbors_[cursor[u]++] = v;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::prefix(std::size_t count) const {
  if (count < 1 || count > num_nodes()) {
    throw std::out_of_range("prefix size " + std::to_string(count) + " outside [1, " +
                            std::to_string(num_nodes()) + "]");
  }
  Graph g;
  g.offsets_.assign(count + 1, 0);
  for (NodeId u = 0; u < count; ++u) {
    auto adj = neighbors(u);
    auto end = std::lower_bound(adj.begin(), adj.end(), static_cast<NodeId>(count));
    g.neighbors_.insert(g.neighbors_.end(), adj.begin(), end);
    g.offsets_[u + 1] = g.neighbors_.size();
  }
  return g;
}

}  // namespace sixcycle
