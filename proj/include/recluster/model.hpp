#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace recluster {

using NodeId = std::uint32_t;

/// Reserved identifier for the sink; never a valid sensor node id.
inline constexpr NodeId kSinkId = std::numeric_limits<NodeId>::max();

struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

/// A static sensor node of the cluster.
struct SensorNode {
  NodeId id = 0;
  Position pos{};
  double energy = 1.0;           // residual energy, normalized units; clamped at 0
  std::uint32_t head_count = 0;  // times this node has served as cluster head
  bool alive = true;             // alive <=> energy > 0
  bool is_head = false;          // implies alive
};

/// Radio energy model constants.
struct EnergyParams {
  double tx_alpha = 1e-7;     // scales the distance-dependent radio cost
  double tx_beta = 1e-8;      // per-bit electronics cost
  double lambda = 1.0;        // path-loss coefficient on squared distance
  double rx_const = 1e-5;     // fixed cost of receiving one packet
  double theta = 1.0;         // residual-energy penalty in routing edge weights
  double packet_bits = 1000;  // payload size of one packet, in bits

  bool operator==(const EnergyParams&) const = default;
};

double squared_distance(Position a, Position b);
double distance(Position a, Position b);

/// Energy spent transmitting one packet between two positions:
/// tx_alpha * (lambda * d^2 * packet_bits) + tx_beta * packet_bits.
/// Symmetric in the endpoints and nondecreasing in distance.
double tx_energy(Position sender, Position receiver, const EnergyParams& p);

/// Energy spent receiving one packet; independent of distance and payload.
double rx_energy(const EnergyParams& p);

/// Directed routing weight of the link sender -> receiver: the transmission
/// cost inflated by the sender's residual energy, tx * (1 + theta / E).
/// Throws std::domain_error if the sender has no energy left.
double edge_weight(const SensorNode& sender, Position receiver, const EnergyParams& p);

/// Index of the node with the given id in an id-sorted node vector.
/// Throws std::out_of_range for unknown ids.
std::size_t node_index(const std::vector<SensorNode>& nodes, NodeId id);

/// Compensated sum of residual energies over all nodes.
double sum_energy(const std::vector<SensorNode>& nodes);

}  // namespace recluster
