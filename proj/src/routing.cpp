#include "recluster/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace recluster {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::size_t RoutingGraph::index_of(NodeId head) const {
  const auto it = std::lower_bound(heads.begin(), heads.end(), head);
  if (it == heads.end() || *it != head) {
    throw std::out_of_range("RoutingGraph: unknown head id " + std::to_string(head));
  }
  return static_cast<std::size_t>(it - heads.begin());
}

NodeId RoutingGraph::next_hop_of(NodeId head) const {
  if (!solved()) throw std::logic_error("RoutingGraph: paths not computed");
  return next_hop[index_of(head)];
}

double RoutingGraph::path_cost_of(NodeId head) const {
  if (!solved()) throw std::logic_error("RoutingGraph: paths not computed");
  return path_cost[index_of(head)];
}

RoutingGraph build_graph(const std::vector<SensorNode>& heads, Position sink,
                         const EnergyParams& p) {
  if (heads.empty()) throw std::invalid_argument("build_graph: no heads");

  std::vector<SensorNode> sorted = heads;
  std::sort(sorted.begin(), sorted.end(),
            [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].id == sorted[i + 1].id) {
      throw std::invalid_argument("build_graph: duplicate head id " +
                                  std::to_string(sorted[i].id));
    }
  }

  RoutingGraph g;
  g.sink = sink;
  g.heads.reserve(sorted.size());
  for (const SensorNode& h : sorted) {
    if (!h.alive || h.energy <= 0.0) {
      throw std::domain_error("build_graph: head " + std::to_string(h.id) +
                              " is not alive");
    }
    g.heads.push_back(h.id);
  }

  const std::size_t n = sorted.size();
  g.weights.assign(n, std::vector<double>(n + 1, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      const Position target = (j == n) ? sink : sorted[j].pos;
      g.weights[i][j] = edge_weight(sorted[i], target, p);
    }
  }
  return g;
}

RoutingGraph shortest_paths(RoutingGraph g) {
  const std::size_t n = g.heads.size();
  const std::size_t sink = n;

  // Dijkstra from the sink over reversed edges. Vertex indices follow
  // ascending head id with the sink last, so index order is id order.
  std::vector<double> dist(n + 1, kInf);
  std::vector<NodeId> hop(n, kSinkId);
  std::vector<char> settled(n + 1, 0);
  dist[sink] = 0.0;

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  pq.push({0.0, sink});

  auto vertex_id = [&](std::size_t v) { return v == sink ? kSinkId : g.heads[v]; };

  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (settled[i]) continue;
      const double cand = g.weights[i][u] + dist[u];
      if (cand < dist[i]) {
        dist[i] = cand;
        hop[i] = vertex_id(u);
        pq.push({cand, i});
      } else if (cand == dist[i] && vertex_id(u) < hop[i]) {
        hop[i] = vertex_id(u);
      }
    }
  }

  g.path_cost.assign(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(n));
  g.next_hop = std::move(hop);
  return g;
}

RoutingGraph refresh(const std::vector<SensorNode>& heads, Position sink,
                     const EnergyParams& p) {
  return shortest_paths(build_graph(heads, sink, p));
}

}  // namespace recluster
