#include "recluster/placement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace recluster {

namespace {

std::vector<const SensorNode*> resolve(const std::vector<NodeId>& ids,
                                       const std::vector<SensorNode>& nodes) {
  std::vector<const SensorNode*> out;
  out.reserve(ids.size());
  for (NodeId id : ids) out.push_back(&nodes[node_index(nodes, id)]);
  return out;
}

}  // namespace

double placement_cost(const std::vector<NodeId>& heads,
                      const std::vector<SensorNode>& nodes,
                      std::uint64_t p_total, const PlacementParams& p) {
  if (heads.empty()) throw std::invalid_argument("placement_cost: empty head set");
  const auto hs = resolve(heads, nodes);

  // Per-head multiplier (1 + P/P_s + beta/E); independent of the member node.
  std::vector<double> factor(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const SensorNode& h = *hs[i];
    if (h.energy <= 0.0) {
      throw std::domain_error("placement_cost: head " + std::to_string(h.id) +
                              " has no residual energy");
    }
    const double share =
        p_total == 0 ? 0.0
                     : static_cast<double>(h.head_count) / static_cast<double>(p_total);
    factor[i] = 1.0 + share + p.cost_beta / h.energy;
  }

  double total = 0.0;
  for (const SensorNode& n : nodes) {
    if (!n.alive) continue;
    std::size_t best = 0;
    double best_d2 = squared_distance(n.pos, hs[0]->pos);
    for (std::size_t i = 1; i < hs.size(); ++i) {
      const double d2 = squared_distance(n.pos, hs[i]->pos);
      if (d2 < best_d2 || (d2 == best_d2 && hs[i]->id < hs[best]->id)) {
        best = i;
        best_d2 = d2;
      }
    }
    total += p.cost_alpha * std::sqrt(best_d2) * factor[best];
  }
  return total;
}

double sa_acceptance_probability(double proposal_cost, double current_cost,
                                 std::uint32_t k) {
  if (proposal_cost < current_cost) return 1.0;
  if (proposal_cost == current_cost) return 0.0;
  const double ck = 1000.0 * std::exp(-static_cast<double>(k) / 20.0);
  return std::exp(-(proposal_cost - current_cost) / ck);
}

SelectionResult select_heads(const std::vector<NodeId>& candidates,
                             const std::vector<SensorNode>& nodes,
                             std::uint64_t p_total, const PlacementParams& p,
                             Rng& rng) {
  // Candidate pool, padded to n_heads with the highest-energy alive
  // non-candidates when the eligible set is too small.
  std::vector<NodeId> pool = candidates;
  if (pool.size() < p.n_heads) {
    std::unordered_set<NodeId> in_pool(pool.begin(), pool.end());
    std::vector<const SensorNode*> spare;
    for (const SensorNode& n : nodes) {
      if (n.alive && !in_pool.count(n.id)) spare.push_back(&n);
    }
    std::sort(spare.begin(), spare.end(),
              [](const SensorNode* a, const SensorNode* b) {
                if (a->energy != b->energy) return a->energy > b->energy;
                return a->id < b->id;
              });
    for (const SensorNode* s : spare) {
      if (pool.size() >= p.n_heads) break;
      pool.push_back(s->id);
    }
  }
  if (pool.empty()) throw std::runtime_error("select_heads: no electable nodes");
  std::sort(pool.begin(), pool.end());

  const std::size_t n = std::min<std::size_t>(p.n_heads, pool.size());
  const auto pool_nodes = resolve(pool, nodes);

  // Full neighbor ordering per pool member: every other pool member sorted by
  // (distance, id). Random moves draw from the first neighbor_k entries; the
  // tail is only used to repair duplicate proposals deterministically.
  std::vector<std::vector<std::size_t>> nbrs(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    auto& list = nbrs[i];
    list.reserve(pool.size() - 1);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j != i) list.push_back(j);
    }
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      const double da = squared_distance(pool_nodes[i]->pos, pool_nodes[a]->pos);
      const double db = squared_distance(pool_nodes[i]->pos, pool_nodes[b]->pos);
      if (da != db) return da < db;
      return pool[a] < pool[b];
    });
  }

  // Initial state: n distinct uniform draws (partial Fisher-Yates).
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.next_below(order.size() - i);
    std::swap(order[i], order[j]);
  }
  std::vector<std::size_t> state(order.begin(), order.begin() + n);

  auto ids_of = [&](const std::vector<std::size_t>& s) {
    std::vector<NodeId> ids;
    ids.reserve(s.size());
    for (std::size_t i : s) ids.push_back(pool[i]);
    return ids;
  };

  double current_cost = placement_cost(ids_of(state), nodes, p_total, p);
  std::vector<std::size_t> best_state = state;
  double best_cost = current_cost;

  std::vector<std::size_t> proposal(n);
  std::vector<char> used(pool.size());
  for (std::uint32_t k = 0; k < p.iter; ++k) {
    // Move: each head is replaced by a uniform draw among its neighbor_k
    // nearest pool members. A draw that collides with an earlier pick falls
    // back to the head's current node, then to its nearest unused neighbor.
    std::fill(used.begin(), used.end(), 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
      const std::size_t cur = state[pos];
      const auto& list = nbrs[cur];
      std::size_t pick = cur;
      if (!list.empty()) {
        const std::size_t k_eff = std::min<std::size_t>(p.neighbor_k, list.size());
        pick = list[rng.next_below(k_eff)];
      }
      if (used[pick]) {
        if (!used[cur]) {
          pick = cur;
        } else {
          for (std::size_t cand : list) {
            if (!used[cand]) {
              pick = cand;
              break;
            }
          }
        }
      }
      proposal[pos] = pick;
      used[pick] = 1;
    }

    const double cn = placement_cost(ids_of(proposal), nodes, p_total, p);
    if (cn < best_cost) {
      best_cost = cn;
      best_state = proposal;
    }
    const double accept = sa_acceptance_probability(cn, current_cost, k);
    if (rng.next_double() < accept) {
      state = proposal;
      current_cost = cn;
    }
  }

  SelectionResult result;
  result.current = HeadSet{ids_of(state), current_cost};
  result.best_ever = HeadSet{ids_of(best_state), best_cost};
  return result;
}

std::map<NodeId, NodeId> assign_members(const HeadSet& heads,
                                        const std::vector<SensorNode>& nodes) {
  if (heads.heads.empty()) throw std::invalid_argument("assign_members: empty head set");
  const auto hs = resolve(heads.heads, nodes);
  std::unordered_set<NodeId> head_ids(heads.heads.begin(), heads.heads.end());

  std::map<NodeId, NodeId> out;
  for (const SensorNode& n : nodes) {
    if (!n.alive) continue;
    if (head_ids.count(n.id)) {
      out[n.id] = n.id;
      continue;
    }
    const SensorNode* best = hs[0];
    double best_d2 = squared_distance(n.pos, hs[0]->pos);
    for (std::size_t i = 1; i < hs.size(); ++i) {
      const double d2 = squared_distance(n.pos, hs[i]->pos);
      if (d2 < best_d2 || (d2 == best_d2 && hs[i]->id < best->id)) {
        best = hs[i];
        best_d2 = d2;
      }
    }
    out[n.id] = best->id;
  }
  return out;
}

}  // namespace recluster
