// Command-line front end: scenario ingestion, topology generation, simulation
// runs, routing dumps, and seed sweeps.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "recluster/io.hpp"
#include "recluster/model.hpp"
#include "recluster/routing.hpp"
#include "recluster/sim.hpp"

namespace {

using namespace recluster;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << data;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// "-" means stdout.
void emit(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::fwrite(data.data(), 1, data.size(), stdout);
  } else {
    write_file(path, data);
  }
}

SimConfig load_config(const std::optional<std::string>& path,
                      const std::optional<std::uint64_t>& seed_override) {
  SimConfig cfg = path ? parse_config(read_file(*path)) : SimConfig{};
  if (seed_override) cfg.seed = *seed_override;
  validate_config(cfg);
  return cfg;
}

std::vector<SensorNode> obtain_topology(const SimConfig& cfg,
                                        const std::optional<std::string>& path) {
  if (path) return load_topology(read_file(*path));
  Rng rng(cfg.seed);
  return generate_topology(cfg, rng);
}

std::string fmt_shortest(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string summarize(const RunResult& res, std::uint64_t node_count,
                      std::uint64_t seed) {
  std::uint64_t packets = 0;
  std::optional<std::uint64_t> first_death;
  for (const RoundMetrics& m : res.trace) {
    packets += m.packets_delivered;
    if (!first_death && m.alive_count < node_count) first_death = m.round;
  }
  std::ostringstream ss;
  ss << "seed=" << seed << " rounds=" << res.trace.size()
     << " elections=" << res.final_state.head_set_version
     << " head_selections=" << res.final_state.p_total
     << " packets_delivered=" << packets << " first_death_round="
     << (first_death ? std::to_string(*first_death) : std::string("-"))
     << " final_alive="
     << (res.trace.empty() ? node_count : res.trace.back().alive_count);
  return ss.str();
}

int cmd_run(const std::optional<std::string>& config_path,
            const std::optional<std::string>& topology_path,
            const std::optional<std::uint64_t>& seed, const std::string& out) {
  const SimConfig cfg = load_config(config_path, seed);
  auto topology = obtain_topology(cfg, topology_path);
  const std::uint64_t node_count = topology.size();
  const RunResult res = run(cfg, std::move(topology));
  emit(out, write_metrics(res.trace));
  std::cerr << "run summary: " << summarize(res, node_count, cfg.seed) << "\n";
  return 0;
}

int cmd_gen(const std::optional<std::string>& config_path,
            const std::optional<std::uint64_t>& seed, const std::string& out) {
  const SimConfig cfg = load_config(config_path, seed);
  Rng rng(cfg.seed);
  emit(out, write_topology(generate_topology(cfg, rng)));
  return 0;
}

int cmd_routes(const std::optional<std::string>& config_path,
               const std::string& topology_path,
               const std::optional<std::uint64_t>& seed) {
  const SimConfig cfg = load_config(config_path, seed);
  // Every row of the file is treated as a cluster head.
  const auto heads = load_topology(read_file(topology_path));
  const RoutingGraph g = refresh(heads, cfg.sink, cfg.energy);

  std::string out = "edge_weights\nfrom,to,weight\n";
  for (std::size_t i = 0; i < g.heads.size(); ++i) {
    for (std::size_t j = 0; j <= g.heads.size(); ++j) {
      if (j == i) continue;
      out += std::to_string(g.heads[i]);
      out += ',';
      out += j == g.sink_column() ? "sink" : std::to_string(g.heads[j]);
      out += ',';
      out += fmt_shortest(g.weights[i][j]);
      out += '\n';
    }
  }
  out += "next_hops\nhead,next_hop,path_cost\n";
  for (std::size_t i = 0; i < g.heads.size(); ++i) {
    out += std::to_string(g.heads[i]);
    out += ',';
    out += g.next_hop[i] == kSinkId ? "sink" : std::to_string(g.next_hop[i]);
    out += ',';
    out += fmt_shortest(g.path_cost[i]);
    out += '\n';
  }
  emit("-", out);
  return 0;
}

int cmd_sweep(const std::optional<std::string>& config_path,
              const std::optional<std::string>& topology_path,
              const std::optional<std::uint64_t>& seed, std::uint32_t seeds,
              const std::string& out_dir, std::uint32_t jobs) {
  const SimConfig base = load_config(config_path, seed);
  const std::optional<std::string> topology_text =
      topology_path ? std::optional<std::string>(read_file(*topology_path))
                    : std::nullopt;

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::mutex io_mutex;
  std::vector<std::string> errors;
  std::uint32_t next = 0;
  std::mutex next_mutex;

  auto worker = [&]() {
    for (;;) {
      std::uint32_t i;
      {
        std::lock_guard lock(next_mutex);
        if (next >= seeds) return;
        i = next++;
      }
      try {
        SimConfig cfg = base;
        cfg.seed = base.seed + i;
        auto topology = topology_text ? load_topology(*topology_text)
                                      : [&] {
                                          Rng rng(cfg.seed);
                                          return generate_topology(cfg, rng);
                                        }();
        const std::uint64_t node_count = topology.size();
        const RunResult res = run(cfg, std::move(topology));
        const std::string path =
            out_dir + "/metrics_seed" + std::to_string(cfg.seed) + ".csv";
        write_file(path, write_metrics(res.trace));
        std::lock_guard lock(io_mutex);
        std::cerr << "sweep: " << summarize(res, node_count, cfg.seed) << " -> "
                  << path << "\n";
      } catch (const std::exception& e) {
        std::lock_guard lock(io_mutex);
        errors.push_back(e.what());
      }
    }
  };

  std::vector<std::thread> pool;
  for (std::uint32_t t = 0; t < std::min(jobs, seeds); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const std::string& e : errors) std::cerr << "sweep error: " << e << "\n";
  return errors.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-head failure recovery simulator"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::string> topology_path;
  std::optional<std::uint64_t> seed;
  std::string out = "-";
  std::string out_dir = ".";
  std::uint32_t seeds = 3;
  std::uint32_t jobs = 0;

  auto* run_cmd = app.add_subcommand("run", "Simulate one scenario, emit metrics CSV");
  run_cmd->add_option("--config", config_path, "key=value config file");
  run_cmd->add_option("--topology", topology_path,
                      "topology CSV (generated from the config when absent)");
  run_cmd->add_option("--seed", seed, "seed override");
  run_cmd->add_option("--out", out, "metrics CSV path, '-' for stdout");

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated topology CSV");
  gen_cmd->add_option("--config", config_path, "key=value config file");
  gen_cmd->add_option("--seed", seed, "seed override");
  gen_cmd->add_option("--out", out, "topology CSV path, '-' for stdout");

  auto* routes_cmd =
      app.add_subcommand("routes", "Dump edge weights and next hops for a topology");
  routes_cmd->add_option("--config", config_path, "key=value config file");
  routes_cmd->add_option("--topology", topology_path, "topology CSV of cluster heads")
      ->required();
  routes_cmd->add_option("--seed", seed, "seed override");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Run consecutive seeds, one metrics file each");
  sweep_cmd->add_option("--config", config_path, "key=value config file");
  sweep_cmd->add_option("--topology", topology_path,
                        "fixed topology CSV shared by all seeds");
  sweep_cmd->add_option("--seed", seed, "base seed override");
  sweep_cmd->add_option("--seeds", seeds, "number of consecutive seeds");
  sweep_cmd->add_option("--out-dir", out_dir, "output directory");
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(config_path, topology_path, seed, out);
    if (gen_cmd->parsed()) return cmd_gen(config_path, seed, out);
    if (routes_cmd->parsed()) return cmd_routes(config_path, *topology_path, seed);
    if (sweep_cmd->parsed()) {
      return cmd_sweep(config_path, topology_path, seed, seeds, out_dir, jobs);
    }
  } catch (const recluster::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
