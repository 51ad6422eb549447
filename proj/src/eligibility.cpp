#include "recluster/eligibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace recluster {

double average_energy(const std::vector<SensorNode>& nodes) {
  if (nodes.empty()) throw std::domain_error("average_energy: empty cluster");
  double sum = 0.0;
  for (const SensorNode& n : nodes) sum += n.energy;
  return sum / static_cast<double>(nodes.size());
}

double average_head_count(const std::vector<SensorNode>& nodes) {
  if (nodes.empty()) throw std::domain_error("average_head_count: empty cluster");
  double sum = 0.0;
  for (const SensorNode& n : nodes) sum += static_cast<double>(n.head_count);
  return sum / static_cast<double>(nodes.size());
}

std::vector<NodeId> eligible_nodes(const std::vector<SensorNode>& nodes) {
  const double avg_e = average_energy(nodes);
  const double avg_p = average_head_count(nodes);
  const bool uniform_counts = std::all_of(
      nodes.begin(), nodes.end(),
      [&](const SensorNode& n) { return n.head_count == nodes.front().head_count; });

  std::vector<NodeId> out;
  for (const SensorNode& n : nodes) {
    if (!n.alive) continue;
    if (!(n.energy > avg_e)) continue;
    if (!uniform_counts && !(static_cast<double>(n.head_count) < avg_p)) continue;
    out.push_back(n.id);
  }
  return out;
}

bool reelection_needed(const std::vector<SensorNode>& heads,
                       const std::vector<SensorNode>& all_nodes,
                       const EligibilityParams& p) {
  if (heads.empty()) throw std::domain_error("reelection_needed: no heads");
  double min_e = heads.front().energy;
  for (const SensorNode& h : heads) min_e = std::min(min_e, h.energy);
  const double avg = average_energy(all_nodes);
  return min_e < p.th_alpha * (avg * avg);
}

}  // namespace recluster
