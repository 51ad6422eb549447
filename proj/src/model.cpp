#include "recluster/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recluster {

double squared_distance(Position a, Position b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(Position a, Position b) {
  return std::sqrt(squared_distance(a, b));
}

double tx_energy(Position sender, Position receiver, const EnergyParams& p) {
  const double radio = p.lambda * squared_distance(sender, receiver) * p.packet_bits;
  return p.tx_alpha * radio + p.tx_beta * p.packet_bits;
}

double rx_energy(const EnergyParams& p) { return p.rx_const; }

double edge_weight(const SensorNode& sender, Position receiver, const EnergyParams& p) {
  if (sender.energy <= 0.0) {
    throw std::domain_error("edge_weight: sender " + std::to_string(sender.id) +
                            " has no residual energy");
  }
  return tx_energy(sender.pos, receiver, p) * (1.0 + p.theta / sender.energy);
}

std::size_t node_index(const std::vector<SensorNode>& nodes, NodeId id) {
  const auto it = std::lower_bound(
      nodes.begin(), nodes.end(), id,
      [](const SensorNode& n, NodeId v) { return n.id < v; });
  if (it == nodes.end() || it->id != id) {
    throw std::out_of_range("node_index: unknown node id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

double sum_energy(const std::vector<SensorNode>& nodes) {
  // Kahan summation; the energy ledger checks differences of these sums at
  // tolerances tighter than naive summation error.
  double sum = 0.0;
  double carry = 0.0;
  for (const SensorNode& n : nodes) {
    const double y = n.energy - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace recluster
