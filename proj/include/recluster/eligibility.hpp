#pragma once

#include <vector>

#include "recluster/model.hpp"

namespace recluster {

struct EligibilityParams {
  double th_alpha = 0.9;  // re-election threshold coefficient

  bool operator==(const EligibilityParams&) const = default;
};

/// Mean residual energy over the whole cluster, dead nodes included
/// (they contribute zero). Throws std::domain_error on an empty collection.
double average_energy(const std::vector<SensorNode>& nodes);

/// Mean head-service count over the whole cluster.
double average_head_count(const std::vector<SensorNode>& nodes);

/// Nodes allowed to stand for head election: alive, energy strictly above the
/// cluster mean, and head_count strictly below the mean head count. When every
/// node carries the same head count (the first round in particular) the count
/// clause is unsatisfiable and is waived. May return an empty collection;
/// callers fall back to pool padding in select_heads.
std::vector<NodeId> eligible_nodes(const std::vector<SensorNode>& nodes);

/// True when the weakest current head has dropped below
/// th_alpha * average_energy(all_nodes)^2.
bool reelection_needed(const std::vector<SensorNode>& heads,
                       const std::vector<SensorNode>& all_nodes,
                       const EligibilityParams& p);

}  // namespace recluster
