#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "recluster/eligibility.hpp"
#include "recluster/model.hpp"
#include "recluster/placement.hpp"
#include "recluster/rng.hpp"
#include "recluster/routing.hpp"

namespace recluster {

/// Full scenario configuration. The defaults describe the reference scenario:
/// 100 unit-energy nodes on a 100m x 100m field, ten heads, sink at (50, 110).
struct SimConfig {
  EnergyParams energy{};
  PlacementParams placement{};
  EligibilityParams eligibility{};
  double area_width = 100.0;
  double area_height = 100.0;
  std::uint32_t node_count = 100;
  Position sink{50.0, 110.0};
  std::uint64_t seed = 1;
  std::uint64_t max_rounds = 200000;
  std::uint64_t refresh_every_rounds = 1;

  bool operator==(const SimConfig&) const = default;
};

/// Throws std::invalid_argument when a field violates its range.
void validate_config(const SimConfig& cfg);

/// The evolving cluster.
struct ClusterState {
  std::vector<SensorNode> nodes;         // ascending id order
  HeadSet head_set;                      // current heads
  std::map<NodeId, NodeId> assignments;  // node -> its head; heads map to themselves
  std::uint64_t p_total = 0;             // head selections since simulation start
  std::uint64_t round = 0;               // next round index to execute
  std::uint64_t head_set_version = 0;    // elections so far
  RoutingGraph routing;
  bool cluster_dead = false;  // no alive node remains; absorbing
  std::uint64_t rounds_since_refresh = 0;
};

/// Per-round observables.
struct RoundMetrics {
  std::uint64_t round = 0;
  std::uint64_t alive_count = 0;
  double total_energy = 0.0;  // over all nodes
  double min_energy = 0.0;    // over alive nodes; 0 when none
  double max_energy = 0.0;
  double mean_energy = 0.0;
  std::uint64_t packets_delivered = 0;  // head aggregates that reached the sink
  std::uint64_t head_set_version = 0;
  // Ledger diagnostics, not part of the CSV schema.
  double energy_charged = 0.0;  // sum of all debits charged this round
  double clamp_loss = 0.0;      // charged amount in excess of what dying nodes held

  bool operator==(const RoundMetrics&) const = default;
};

/// Elect the initial head set, assign members, and build the routing graph.
/// A topology with no alive node yields a cluster_dead state.
/// Throws std::invalid_argument on an empty topology or duplicate ids.
ClusterState init_state(const SimConfig& cfg, std::vector<SensorNode> topology,
                        Rng& rng);

/// Execute one round: member uplink, head relay toward the sink, deaths,
/// re-election when a head died or fell below the energy threshold, and
/// routing refresh. Returns the end-of-round metrics.
RoundMetrics step_round(ClusterState& state, const SimConfig& cfg, Rng& rng);

struct RunResult {
  std::vector<RoundMetrics> trace;
  ClusterState final_state;
};

/// Run a full simulation: initial election, then rounds until max_rounds or
/// until every node is dead. Deterministic given (config, topology, seed).
RunResult run(const SimConfig& cfg, std::vector<SensorNode> topology);

}  // namespace recluster
