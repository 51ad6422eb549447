// Test-only reference implementations, kept independent of the library's
// solver paths: a Bellman-Ford relaxation for routing checks and exhaustive
// enumeration for head-set placement checks.
#pragma once

#include <cassert>
#include <limits>
#include <vector>

#include "recluster/model.hpp"
#include "recluster/placement.hpp"
#include "recluster/rng.hpp"
#include "recluster/routing.hpp"

namespace oracles {

struct BfResult {
  std::vector<double> cost;             // per head, index order of g.heads
  std::vector<recluster::NodeId> next;  // per head, head id or kSinkId
};

// Iterated relaxation over the same weight table, same summation order
// (w + dist) and the same lower-id tie rule as the library solver.
inline BfResult bellman_ford(const recluster::RoutingGraph& g) {
  const std::size_t n = g.heads.size();
  const std::size_t sink = n;
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> dist(n + 1, inf);
  dist[sink] = 0.0;
  std::vector<recluster::NodeId> next(n, recluster::kSinkId);
  auto vertex_id = [&](std::size_t v) {
    return v == sink ? recluster::kSinkId : g.heads[v];
  };

  bool changed = true;
  std::size_t sweeps = 0;
  while (changed) {
    changed = false;
    ++sweeps;
    assert(sweeps <= n + 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == i || dist[j] == inf) continue;
        const double cand = g.weights[i][j] + dist[j];
        if (cand < dist[i]) {
          dist[i] = cand;
          next[i] = vertex_id(j);
          changed = true;
        } else if (cand == dist[i] && vertex_id(j) < next[i]) {
          next[i] = vertex_id(j);
          changed = true;
        }
      }
    }
  }

  BfResult r;
  r.cost.assign(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(n));
  r.next = std::move(next);
  return r;
}

// Random head nodes for routing instances.
inline std::vector<recluster::SensorNode> random_heads(recluster::Rng& rng,
                                                       std::size_t count,
                                                       double area = 100.0,
                                                       double min_energy = 0.05) {
  std::vector<recluster::SensorNode> heads;
  heads.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    recluster::SensorNode n;
    n.id = static_cast<recluster::NodeId>(i);
    n.pos = {rng.next_double() * area, rng.next_double() * area};
    n.energy = min_energy + rng.next_double() * (1.0 - min_energy);
    n.is_head = true;
    heads.push_back(n);
  }
  return heads;
}

// All k-subsets of the candidate pool scored with placement_cost; returns the
// cheapest (ties to the lexicographically smallest id set).
struct EnumResult {
  std::vector<recluster::NodeId> best;
  double cost = std::numeric_limits<double>::infinity();
};

inline void enumerate_rec(const std::vector<recluster::NodeId>& pool, std::size_t k,
                          std::size_t start, std::vector<recluster::NodeId>& pick,
                          const std::vector<recluster::SensorNode>& nodes,
                          std::uint64_t p_total, const recluster::PlacementParams& p,
                          EnumResult& out) {
  if (pick.size() == k) {
    const double c = recluster::placement_cost(pick, nodes, p_total, p);
    if (c < out.cost) {
      out.cost = c;
      out.best = pick;
    }
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    pick.push_back(pool[i]);
    enumerate_rec(pool, k, i + 1, pick, nodes, p_total, p, out);
    pick.pop_back();
  }
}

inline EnumResult exhaustive_best(const std::vector<recluster::NodeId>& pool,
                                  std::size_t k,
                                  const std::vector<recluster::SensorNode>& nodes,
                                  std::uint64_t p_total,
                                  const recluster::PlacementParams& p) {
  EnumResult out;
  std::vector<recluster::NodeId> pick;
  enumerate_rec(pool, k, 0, pick, nodes, p_total, p, out);
  return out;
}

}  // namespace oracles
