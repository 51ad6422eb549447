#include "recluster/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recluster {

namespace {

struct Ledger {
  double charged = 0.0;
  double lost = 0.0;
};

// Charge `amount` to the node, clamping at zero. Returns what was actually
// paid; a short payment means the node died mid-action and the packet in
// flight is lost.
double drain(SensorNode& n, double amount, Ledger& led) {
  led.charged += amount;
  const double paid = amount <= n.energy ? amount : n.energy;
  n.energy -= paid;
  if (n.energy <= 0.0) {
    n.energy = 0.0;
    n.alive = false;
  }
  led.lost += amount - paid;
  return paid;
}

std::vector<SensorNode> gather_heads(const ClusterState& st) {
  std::vector<SensorNode> out;
  out.reserve(st.head_set.heads.size());
  for (NodeId id : st.head_set.heads) out.push_back(st.nodes[node_index(st.nodes, id)]);
  return out;
}

bool any_alive(const std::vector<SensorNode>& nodes) {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const SensorNode& n) { return n.alive; });
}

void hold_election(ClusterState& st, const SimConfig& cfg, Rng& rng) {
  const auto candidates = eligible_nodes(st.nodes);
  auto selection = select_heads(candidates, st.nodes, st.p_total, cfg.placement, rng);
  st.head_set = std::move(selection.current);
  for (SensorNode& n : st.nodes) n.is_head = false;
  for (NodeId id : st.head_set.heads) {
    SensorNode& n = st.nodes[node_index(st.nodes, id)];
    n.is_head = true;
    n.head_count += 1;
  }
  st.p_total += st.head_set.heads.size();
  st.head_set_version += 1;
  st.assignments = assign_members(st.head_set, st.nodes);
}

void rebuild_routing(ClusterState& st, const SimConfig& cfg) {
  st.routing = refresh(gather_heads(st), cfg.sink, cfg.energy);
  st.rounds_since_refresh = 0;
}

RoundMetrics snapshot(const ClusterState& st, std::uint64_t round,
                      std::uint64_t delivered, const Ledger& led) {
  RoundMetrics m;
  m.round = round;
  m.total_energy = sum_energy(st.nodes);
  double min_e = 0.0;
  double max_e = 0.0;
  for (const SensorNode& n : st.nodes) {
    if (!n.alive) continue;
    if (m.alive_count == 0) {
      min_e = max_e = n.energy;
    } else {
      min_e = std::min(min_e, n.energy);
      max_e = std::max(max_e, n.energy);
    }
    m.alive_count += 1;
  }
  m.min_energy = min_e;
  m.max_energy = max_e;
  m.mean_energy =
      m.alive_count == 0 ? 0.0 : m.total_energy / static_cast<double>(m.alive_count);
  m.packets_delivered = delivered;
  m.head_set_version = st.head_set_version;
  m.energy_charged = led.charged;
  m.clamp_loss = led.lost;
  return m;
}

}  // namespace

void validate_config(const SimConfig& cfg) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("config: ") + what);
  };
  require(cfg.energy.tx_alpha > 0, "tx_alpha must be positive");
  require(cfg.energy.tx_beta > 0, "tx_beta must be positive");
  require(cfg.energy.lambda > 0, "lambda must be positive");
  require(cfg.energy.rx_const > 0, "rx_const must be positive");
  require(cfg.energy.theta > 0, "theta must be positive");
  require(cfg.energy.packet_bits > 0, "packet_bits must be positive");
  require(cfg.eligibility.th_alpha > 0 && cfg.eligibility.th_alpha <= 1,
          "th_alpha must be in (0, 1]");
  require(cfg.placement.n_heads >= 1, "n_heads must be >= 1");
  require(cfg.placement.cost_alpha > 0, "cost_alpha must be positive");
  require(cfg.placement.cost_beta > 0, "cost_beta must be positive");
  require(cfg.placement.iter >= 1, "iter must be >= 1");
  require(cfg.placement.neighbor_k >= 1, "neighbor_k must be >= 1");
  require(cfg.area_width > 0, "area_width must be positive");
  require(cfg.area_height > 0, "area_height must be positive");
  require(cfg.node_count >= 1, "node_count must be >= 1");
  require(std::isfinite(cfg.sink.x) && std::isfinite(cfg.sink.y),
          "sink position must be finite");
  require(cfg.refresh_every_rounds >= 1, "refresh_every_rounds must be >= 1");
  require(cfg.placement.n_heads <= cfg.node_count,
          "n_heads must not exceed node_count");
}

ClusterState init_state(const SimConfig& cfg, std::vector<SensorNode> topology,
                        Rng& rng) {
  if (topology.empty()) throw std::invalid_argument("init_state: empty topology");
  std::sort(topology.begin(), topology.end(),
            [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < topology.size(); ++i) {
    if (topology[i].id == topology[i + 1].id) {
      throw std::invalid_argument("init_state: duplicate node id " +
                                  std::to_string(topology[i].id));
    }
  }

  ClusterState st;
  st.nodes = std::move(topology);
  if (!any_alive(st.nodes)) {
    st.cluster_dead = true;
    return st;
  }
  hold_election(st, cfg, rng);
  rebuild_routing(st, cfg);
  return st;
}

RoundMetrics step_round(ClusterState& st, const SimConfig& cfg, Rng& rng) {
  Ledger led;
  std::uint64_t delivered = 0;

  if (!st.cluster_dead) {
    // Uplink: every alive member sends one packet to its head, in ascending
    // id order. A sender that cannot pay in full dies and the packet is lost;
    // a dead receiver loses the packet but the sender has already paid.
    for (const auto& [member_id, head_id] : st.assignments) {
      if (member_id == head_id) continue;
      SensorNode& m = st.nodes[node_index(st.nodes, member_id)];
      if (!m.alive) continue;
      SensorNode& h = st.nodes[node_index(st.nodes, head_id)];
      const double c = tx_energy(m.pos, h.pos, cfg.energy);
      if (drain(m, c, led) < c) continue;
      if (!h.alive) continue;
      drain(h, rx_energy(cfg.energy), led);
    }

    // Relay: every alive head emits one aggregate packet and forwards it along
    // the current next-hop chain. Each hop charges the sender a transmission
    // and the receiving head a reception; the sink pays nothing.
    std::vector<NodeId> origins = st.head_set.heads;
    std::sort(origins.begin(), origins.end());
    for (NodeId origin : origins) {
      if (!st.nodes[node_index(st.nodes, origin)].alive) continue;
      NodeId cur = origin;
      while (true) {
        const NodeId nxt = st.routing.next_hop_of(cur);
        SensorNode& sender = st.nodes[node_index(st.nodes, cur)];
        const Position target =
            nxt == kSinkId ? cfg.sink : st.nodes[node_index(st.nodes, nxt)].pos;
        const double c = tx_energy(sender.pos, target, cfg.energy);
        if (drain(sender, c, led) < c) break;  // died transmitting
        if (nxt == kSinkId) {
          ++delivered;
          break;
        }
        SensorNode& relay = st.nodes[node_index(st.nodes, nxt)];
        if (!relay.alive) break;  // dead relay loses the packet
        drain(relay, rx_energy(cfg.energy), led);
        if (!relay.alive) break;  // died receiving, cannot forward
        cur = nxt;
      }
    }

    // Deaths: energies are clamped and alive flags maintained by drain();
    // strip head status from the fallen.
    for (SensorNode& n : st.nodes) {
      if (!n.alive) n.is_head = false;
    }

    // Re-election when a head died or the weakest head fell below threshold.
    bool head_dead = false;
    for (NodeId id : st.head_set.heads) {
      if (!st.nodes[node_index(st.nodes, id)].alive) {
        head_dead = true;
        break;
      }
    }
    bool need = head_dead;
    if (!need) {
      need = reelection_needed(gather_heads(st), st.nodes, cfg.eligibility);
    }
    bool elected = false;
    if (need) {
      if (any_alive(st.nodes)) {
        hold_election(st, cfg, rng);
        elected = true;
      } else {
        st.cluster_dead = true;
      }
    }

    // Routing refresh from current energies.
    if (!st.cluster_dead) {
      ++st.rounds_since_refresh;
      if (elected || st.rounds_since_refresh >= cfg.refresh_every_rounds) {
        rebuild_routing(st, cfg);
      }
    }
  }

  const RoundMetrics m = snapshot(st, st.round, delivered, led);
  st.round += 1;
  return m;
}

RunResult run(const SimConfig& cfg, std::vector<SensorNode> topology) {
  validate_config(cfg);
  Rng rng(cfg.seed);
  RunResult res;
  ClusterState st = init_state(cfg, std::move(topology), rng);
  res.trace.reserve(std::min<std::uint64_t>(cfg.max_rounds, 4096));
  for (std::uint64_t i = 0; i < cfg.max_rounds && !st.cluster_dead; ++i) {
    res.trace.push_back(step_round(st, cfg, rng));
  }
  res.final_state = std::move(st);
  return res;
}

}  // namespace recluster
