#include "sixcycle/generators.hpp"

#include <stdexcept>
#include <vector>

#include "sixcycle/rng.hpp"

namespace sixcycle::gen {

namespace {
NodeId id(std::size_t x) { return static_cast<NodeId>(x); }
}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) edges.emplace_back(id(i), id(j));
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph complete_bipartite(std::size_t s, std::size_t s2) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s2; ++j) edges.emplace_back(id(i), id(s + j));
  }
  return Graph::FromEdges(s + s2, edges);
}

Graph c6_blowup(std::size_t s) {
  std::vector<Edge> edges;
  for (std::size_t g = 0; g < 6; ++g) {
    const std::size_t h = (g + 1) % 6;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) edges.emplace_back(id(g * s + i), id(h * s + j));
    }
  }
  return Graph::FromEdges(6 * s, edges);
}

Graph theta(std::size_t paths) {
  if (paths < 1) throw std::invalid_argument("theta graph needs at least one path");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < paths; ++i) {
    const NodeId near = id(2 + 2 * i), far = id(3 + 2 * i);
    edges.emplace_back(0, near);
    edges.emplace_back(near, far);
    edges.emplace_back(far, 1);
  }
  return Graph::FromEdges(2 + 2 * paths, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(id(i), id(j));
  }
  return Graph::FromEdges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(id(i), id((i + 1) % n));
  return Graph::FromEdges(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(id(i), id(i + 1));
  return Graph::FromEdges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id(rng.below(i)), id(i));
  return Graph::FromEdges(n, edges);
}

}  // namespace sixcycle::gen
