#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recluster/rng.hpp"
#include "recluster/sim.hpp"

namespace recluster {

/// Malformed config or topology input; the message names the offending line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a key=value config. '#' starts a comment, blank lines are ignored,
/// unknown keys are rejected, absent keys keep their defaults.
SimConfig parse_config(std::string_view text);

/// Render a config as key=value lines; parse_config(write_config(c)) == c.
std::string write_config(const SimConfig& cfg);

/// Load nodes from CSV with the exact header "id,x,y,energy". Nodes start
/// with head_count 0 and are alive iff energy > 0. Rejects duplicate ids,
/// malformed rows, and negative energies.
std::vector<SensorNode> load_topology(std::string_view csv);

/// Render nodes as a topology CSV; coordinates round-trip exactly.
std::string write_topology(const std::vector<SensorNode>& nodes);

/// node_count unit-energy nodes uniformly placed on the configured area.
std::vector<SensorNode> generate_topology(const SimConfig& cfg, Rng& rng);

/// Render a metrics trace as CSV. Floating-point columns use fixed notation
/// with nine decimal places; output is byte-identical for identical traces.
std::string write_metrics(const std::vector<RoundMetrics>& trace);

}  // namespace recluster
