#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "recluster/model.hpp"
#include "recluster/rng.hpp"

namespace recluster {

struct PlacementParams {
  std::uint32_t n_heads = 10;    // heads to elect per round
  double cost_alpha = 1e-7;      // distance scale in the placement cost
  double cost_beta = 1.0;        // residual-energy penalty in the placement cost
  std::uint32_t iter = 1000;     // annealing iterations
  std::uint32_t neighbor_k = 5;  // neighborhood size for the annealing move

  bool operator==(const PlacementParams&) const = default;
};

struct HeadSet {
  std::vector<NodeId> heads;  // distinct, all alive at election time
  double cost = 0.0;          // placement cost of this set against the cluster
};

struct SelectionResult {
  HeadSet current;    // the elected set (final annealing state)
  HeadSet best_ever;  // lowest-cost set evaluated during the search (diagnostic)
};

/// Coverage/energy cost of a head set over the cluster: for every alive node,
/// the Euclidean distance to its nearest head, scaled by how loaded and how
/// drained that head is. Nearest-head ties go to the lower head id. The
/// head-load share P/p_total is taken as zero when p_total is zero.
/// Throws std::domain_error if any head has no energy.
double placement_cost(const std::vector<NodeId>& heads,
                      const std::vector<SensorNode>& nodes,
                      std::uint64_t p_total, const PlacementParams& p);

/// Probability of moving to a proposal set: 1 for a strict improvement, 0 for
/// an exact tie, otherwise exp(-(proposal - current) / ck) with the cooling
/// schedule ck = 1000 * exp(-k / 20).
double sa_acceptance_probability(double proposal_cost, double current_cost,
                                 std::uint32_t k);

/// Elect heads by simulated annealing over the candidate pool. When the pool
/// is smaller than n_heads it is padded with the highest-energy alive
/// non-candidates (ties to the lower id); if the padded pool is still smaller
/// every pool member is elected. Throws std::runtime_error when no node can
/// be elected at all.
SelectionResult select_heads(const std::vector<NodeId>& candidates,
                             const std::vector<SensorNode>& nodes,
                             std::uint64_t p_total, const PlacementParams& p,
                             Rng& rng);

/// Map every alive node to its nearest head by Euclidean distance, ties to
/// the lower head id. Heads map to themselves.
std::map<NodeId, NodeId> assign_members(const HeadSet& heads,
                                        const std::vector<SensorNode>& nodes);

}  // namespace recluster
