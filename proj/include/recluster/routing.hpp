#pragma once

#include <vector>

#include "recluster/model.hpp"

namespace recluster {

/// Directed routing graph over the alive heads plus the sink. Edge weights
/// depend on the sender's residual energy, so weight(i,j) != weight(j,i) in
/// general. The sink emits no edges. Column heads.size() of the weight table
/// is the sink.
struct RoutingGraph {
  std::vector<NodeId> heads;  // ascending id order
  Position sink{};
  std::vector<std::vector<double>> weights;  // [sender][receiver]; diagonal unused
  std::vector<double> path_cost;             // per head, filled by shortest_paths
  std::vector<NodeId> next_hop;              // per head: a head id or kSinkId

  std::size_t sink_column() const { return heads.size(); }
  bool solved() const { return next_hop.size() == heads.size(); }

  std::size_t index_of(NodeId head) const;
  NodeId next_hop_of(NodeId head) const;
  double path_cost_of(NodeId head) const;
};

/// Build the weight table for the given heads and sink position. All heads
/// must be alive; throws std::domain_error otherwise.
RoutingGraph build_graph(const std::vector<SensorNode>& heads, Position sink,
                         const EnergyParams& p);

/// Fill next_hop and path_cost with the minimum-total-weight path from every
/// head to the sink (one single-source pass from the sink over reversed
/// edges). Ties between equal-cost paths prefer the lower next-hop vertex id,
/// the sink ranking above every head.
RoutingGraph shortest_paths(RoutingGraph g);

/// Rebuild weights from current residual energies and re-solve.
RoutingGraph refresh(const std::vector<SensorNode>& heads, Position sink,
                     const EnergyParams& p);

}  // namespace recluster
