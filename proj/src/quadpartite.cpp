#include "sixcycle/quadpartite.hpp"

#include <stdexcept>

namespace sixcycle {

namespace {

constexpr std::uint64_t pack(NodeId x, NodeId y) {
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

// Hand out the next pooled slot, clearing whatever a previous run left there.
std::uint32_t claim(std::vector<std::vector<NodeId>>& pool, std::size_t& used) {
  if (used == pool.size()) {
    pool.emplace_back();
  } else {
    pool[used].clear();
  }
  return static_cast<std::uint32_t>(used++);
}

std::uint32_t claim(std::vector<EndpointEntry>& pool, std::size_t& used) {
  if (used == pool.size()) {
    pool.emplace_back();
  } else {
    pool[used].p.clear();
    pool[used].q.clear();
    pool[used].r.clear();
  }
  return static_cast<std::uint32_t>(used++);
}

std::array<NodeId, 6> walk(NodeId a, NodeId b1, NodeId c1, NodeId d, NodeId c2, NodeId b2) {
  return {a, b1, c1, d, c2, b2};
}

void check_distinct_middles(const CycleSink& sink, NodeId b1, NodeId c1, NodeId b2, NodeId c2) {
  if (sink.verifying() && (b1 == b2 || c1 == c2)) {
    throw std::logic_error("replacement-free path shares a middle node; tables are inconsistent");
  }
}

}  // namespace

void ColoredAdjacency::build(const Graph& g, const Partition4& part) {
  const std::size_t n = g.num_nodes();
  offsets_.assign(4 * n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) {
      ++offsets_[4 * v + static_cast<std::size_t>(part[u]) + 1];
    }
  }
  for (std::size_t i = 0; i < 4 * n; ++i) offsets_[i + 1] += offsets_[i];
  nbrs_.resize(offsets_.back());
  for (NodeId v = 0; v < n; ++v) {
    std::uint32_t cursor[4] = {offsets_[4 * v], offsets_[4 * v + 1], offsets_[4 * v + 2],
                               offsets_[4 * v + 3]};
    for (NodeId u : g.neighbors(v)) {
      nbrs_[cursor[static_cast<std::size_t>(part[u])]++] = u;
    }
  }
}

// ---------------------------------------------------------------------------
// PathTables

void PathTables::reset() {
  nac_index_.clear();
  nbd_index_.clear();
  endpoint_index_.clear();
  nac_used_ = nbd_used_ = endpoints_used_ = 0;
  sizes_ = {};
  complete_ = false;
}

std::uint32_t PathTables::nac_slot(NodeId a, NodeId c) {
  auto [it, inserted] = nac_index_.try_emplace(pack(a, c), 0);
  if (inserted) it->second = claim(nac_lists_, nac_used_);
  return it->second;
}

std::uint32_t PathTables::nbd_slot(NodeId b, NodeId d) {
  auto [it, inserted] = nbd_index_.try_emplace(pack(b, d), 0);
  if (inserted) it->second = claim(nbd_lists_, nbd_used_);
  return it->second;
}

EndpointEntry& PathTables::endpoint(NodeId a, NodeId d) {
  auto [it, inserted] = endpoint_index_.try_emplace(pack(a, d), 0);
  if (inserted) {
    it->second = claim(endpoints_, endpoints_used_);
    endpoints_[it->second].a = a;
    endpoints_[it->second].d = d;
  }
  return endpoints_[it->second];
}

std::span<const NodeId> PathTables::n_ac(NodeId a, NodeId c) const {
  auto it = nac_index_.find(pack(a, c));
  if (it == nac_index_.end()) return {};
  return nac_lists_[it->second];
}

std::span<const NodeId> PathTables::n_bd(NodeId b, NodeId d) const {
  auto it = nbd_index_.find(pack(b, d));
  if (it == nbd_index_.end()) return {};
  return nbd_lists_[it->second];
}

std::vector<NodeId> PathTables::p(NodeId a, NodeId d) const {
  std::vector<NodeId> out;
  if (auto it = endpoint_index_.find(pack(a, d)); it != endpoint_index_.end()) {
    for (const auto& ref : endpoints_[it->second].p) out.push_back(ref.node);
  }
  return out;
}

std::vector<NodeId> PathTables::q(NodeId a, NodeId d) const {
  std::vector<NodeId> out;
  if (auto it = endpoint_index_.find(pack(a, d)); it != endpoint_index_.end()) {
    for (const auto& ref : endpoints_[it->second].q) out.push_back(ref.node);
  }
  return out;
}

std::span<const MiddleEdge> PathTables::r(NodeId a, NodeId d) const {
  auto it = endpoint_index_.find(pack(a, d));
  if (it == endpoint_index_.end()) return {};
  return endpoints_[it->second].r;
}

// ---------------------------------------------------------------------------
// Stage I

const PathTables& QuadpartiteLister::compute_tables(const Graph& g, const Partition4& part,
                                                    CycleSink& sink) {
  if (part.size() != g.num_nodes()) {
    throw std::invalid_argument("partition size does not match node count");
  }
  PathTables& t = tables_;
  t.reset();
  if (!sink.charge(g.num_nodes() + 2 * g.num_edges() + 1)) return t;
  adjacency_.build(g, part);

  const auto& colors = part.colors();
  const std::size_t n = g.num_nodes();

  // N_ac, N_bd, and the P / Q entries triggered when an N entry reaches size 2.
  for (NodeId b = 0; b < n; ++b) {
    if (colors[b] != Color::kB) continue;
    auto a_side = adjacency_.neighbors(b, Color::kA);
    for (NodeId c : adjacency_.neighbors(b, Color::kC)) {
      auto d_side = adjacency_.neighbors(c, Color::kD);
      if (!sink.charge()) return t;
      for (NodeId a : a_side) {
        const std::uint32_t slot = t.nac_slot(a, c);
        t.nac_lists_[slot].push_back(b);
        ++t.sizes_.n_ac;
        if (!sink.charge()) return t;
        if (t.nac_lists_[slot].size() == 2) {
          for (NodeId d : d_side) {
            t.endpoint(a, d).q.push_back({c, slot});
            ++t.sizes_.q;
            if (!sink.charge()) return t;
          }
        }
      }
      for (NodeId d : d_side) {
        const std::uint32_t slot = t.nbd_slot(b, d);
        t.nbd_lists_[slot].push_back(c);
        ++t.sizes_.n_bd;
        if (!sink.charge()) return t;
        if (t.nbd_lists_[slot].size() == 2) {
          for (NodeId a : a_side) {
            t.endpoint(a, d).p.push_back({b, slot});
            ++t.sizes_.p;
            if (!sink.charge()) return t;
          }
        }
      }
    }
  }

  // R: paths a-b-c-d where neither middle node has a replacement.
  std::vector<NodeId> lone_a, lone_d;
  for (NodeId b = 0; b < n; ++b) {
    if (colors[b] != Color::kB) continue;
    auto a_side = adjacency_.neighbors(b, Color::kA);
    for (NodeId c : adjacency_.neighbors(b, Color::kC)) {
      if (!sink.charge()) return t;
      lone_a.clear();
      lone_d.clear();
      for (NodeId a : a_side) {
        if (!sink.charge()) return t;
        if (t.n_ac(a, c).size() == 1) lone_a.push_back(a);
      }
      for (NodeId d : adjacency_.neighbors(c, Color::kD)) {
        if (!sink.charge()) return t;
        if (t.n_bd(b, d).size() == 1) lone_d.push_back(d);
      }
      for (NodeId a : lone_a) {
        for (NodeId d : lone_d) {
          t.endpoint(a, d).r.push_back({b, c});
          ++t.sizes_.r;
          if (!sink.charge()) return t;
        }
      }
    }
  }

  t.complete_ = true;
  return t;
}

const PathTables& QuadpartiteLister::run(const Graph& g, const Partition4& part, CycleSink& sink) {
  compute_tables(g, part, sink);
  if (!tables_.complete() || sink.aborted()) return tables_;
  report_case1(tables_, sink);
  report_case2(tables_, sink);
  report_case3(tables_, sink);
  report_case4(tables_, sink);
  return tables_;
}

// ---------------------------------------------------------------------------
// Stage II

void report_case1(const PathTables& t, CycleSink& sink) {
  for (const EndpointEntry& e : t.endpoints()) {
    if (e.p.empty() || e.q.empty()) continue;
    if (!sink.charge()) return;
    for (const PathRef& pb : e.p) {
      const NodeId b1 = pb.node;
      for (const PathRef& qc : e.q) {
        const NodeId c2 = qc.node;
        for (NodeId c1 : t.n_bd_list(pb.list)) {
          for (NodeId b2 : t.n_ac_list(qc.list)) {
            if (!sink.charge()) return;
            if (b1 != b2 && c1 != c2 && !sink.submit(walk(e.a, b1, c1, e.d, c2, b2))) return;
          }
        }
      }
    }
  }
}

void report_case2(const PathTables& t, CycleSink& sink) {
  for (const EndpointEntry& e : t.endpoints()) {
    if (e.p.size() >= 2) {
      if (!sink.charge()) return;
      for (std::size_t i = 0; i < e.p.size(); ++i) {
        for (std::size_t j = i + 1; j < e.p.size(); ++j) {
          const NodeId b1 = e.p[i].node, b2 = e.p[j].node;
          for (NodeId c1 : t.n_bd_list(e.p[i].list)) {
            for (NodeId c2 : t.n_bd_list(e.p[j].list)) {
              if (!sink.charge()) return;
              if (c1 != c2 && !sink.submit(walk(e.a, b1, c1, e.d, c2, b2))) return;
            }
          }
        }
      }
    }
    if (e.q.size() >= 2) {
      if (!sink.charge()) return;
      for (std::size_t i = 0; i < e.q.size(); ++i) {
        for (std::size_t j = i + 1; j < e.q.size(); ++j) {
          const NodeId c1 = e.q[i].node, c2 = e.q[j].node;
          for (NodeId b1 : t.n_ac_list(e.q[i].list)) {
            for (NodeId b2 : t.n_ac_list(e.q[j].list)) {
              if (!sink.charge()) return;
              if (b1 != b2 && !sink.submit(walk(e.a, b1, c1, e.d, c2, b2))) return;
            }
          }
        }
      }
    }
  }
}

void report_case3(const PathTables& t, CycleSink& sink) {
  for (const EndpointEntry& e : t.endpoints()) {
    if (e.r.size() < 2) continue;
    if (!sink.charge()) return;
    for (std::size_t i = 0; i < e.r.size(); ++i) {
      for (std::size_t j = i + 1; j < e.r.size(); ++j) {
        const auto [b1, c1] = e.r[i];
        const auto [b2, c2] = e.r[j];
        check_distinct_middles(sink, b1, c1, b2, c2);
        if (!sink.submit(walk(e.a, b1, c1, e.d, c2, b2))) return;
      }
    }
  }
}

void report_case4(const PathTables& t, CycleSink& sink) {
  for (const EndpointEntry& e : t.endpoints()) {
    if (e.r.empty() || (e.p.empty() && e.q.empty())) continue;
    if (!sink.charge()) return;
    for (const PathRef& pb : e.p) {
      for (NodeId c1 : t.n_bd_list(pb.list)) {
        for (const auto [b2, c2] : e.r) {
          check_distinct_middles(sink, pb.node, c1, b2, c2);
          if (!sink.submit(walk(e.a, pb.node, c1, e.d, c2, b2))) return;
        }
      }
    }
    for (const PathRef& qc : e.q) {
      for (NodeId b1 : t.n_ac_list(qc.list)) {
        for (const auto [b2, c2] : e.r) {
          check_distinct_middles(sink, b1, qc.node, b2, c2);
          if (!sink.submit(walk(e.a, b1, qc.node, e.d, c2, b2))) return;
        }
      }
    }
  }
}

PathTables compute_tables(const Graph& g, const Partition4& part, CycleSink& sink) {
  QuadpartiteLister lister;
  lister.compute_tables(g, part, sink);
  return lister.tables();
}

TableSizes list_quadpartite(const Graph& g, const Partition4& part, CycleSink& sink) {
  QuadpartiteLister lister;
  return lister.run(g, part, sink).sizes();
}

}  // namespace sixcycle
