#include "sixcycle/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace sixcycle::oracle {

namespace {

struct PathSearch {
  const Graph& g;
  std::size_t k;
  std::vector<NodeId> path;
  std::vector<char> on_path;
  std::vector<std::vector<NodeId>> found;

  void extend() {
    const NodeId root = path.front();
    const NodeId tail = path.back();
    if (path.size() == k) {
      if (path[1] < path.back() && g.has_edge(tail, root)) found.push_back(path);
      return;
    }
    for (NodeId next : g.neighbors(tail)) {
      if (next <= root || on_path[next]) continue;
      path.push_back(next);
      on_path[next] = 1;
      extend();
      on_path[next] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<NodeId>> enumerate_k_cycles(const Graph& g, std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  PathSearch search{g, k, {}, std::vector<char>(g.num_nodes(), 0), {}};
  for (NodeId root = 0; root < g.num_nodes(); ++root) {
    search.path.assign(1, root);
    search.on_path[root] = 1;
    search.extend();
    search.on_path[root] = 0;
  }
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

std::size_t count_k_cycles_through(const Graph& g, NodeId v, std::size_t k) {
  if (v >= g.num_nodes()) {
    throw std::out_of_range("node " + std::to_string(v) + " out of range");
  }
  auto cycles = enumerate_k_cycles(g, k);
  return std::count_if(cycles.begin(), cycles.end(), [v](const auto& c) {
    return std::find(c.begin(), c.end(), v) != c.end();
  });
}

std::vector<CanonicalCycle> six_cycles(const Graph& g) {
  std::vector<CanonicalCycle> out;
  for (const auto& c : enumerate_k_cycles(g, 6)) {
    std::array<NodeId, 6> walk;
    std::copy(c.begin(), c.end(), walk.begin());
    out.push_back(CanonicalCycle::FromWalk(walk));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sixcycle::oracle
