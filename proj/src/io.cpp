#include "recluster/io.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <unordered_set>

namespace recluster {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits text into lines; yields (1-based line number, line without newline).
void for_each_line(std::string_view text,
                   const std::function<void(std::size_t, std::string_view)>& fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const std::size_t nl = text.find('\n');
    const std::string_view line =
        nl == std::string_view::npos ? text : text.substr(0, nl);
    fn(lineno, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

double parse_double(std::string_view s, std::size_t lineno, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(lineno) + ": '" + std::string(s) +
                     "' is not a finite number for " + std::string(what));
  }
  return v;
}

std::uint64_t parse_u64(std::string_view s, std::size_t lineno, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(lineno) + ": '" + std::string(s) +
                     "' is not a non-negative integer for " + std::string(what));
  }
  return v;
}

std::uint32_t parse_u32(std::string_view s, std::size_t lineno, std::string_view what) {
  const std::uint64_t v = parse_u64(s, lineno, what);
  if (v > 0xffffffffull) {
    throw ParseError("line " + std::to_string(lineno) + ": " + std::string(what) +
                     " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::string fmt_shortest(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string fmt_fixed9(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 9);
  return std::string(buf, ptr);
}

void append_u64(std::string& out, std::uint64_t v) {
  char buf[24];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  for_each_line(text, [&](std::size_t lineno, std::string_view raw) {
    std::string_view line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) return;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));

    auto bad = [&](const char* why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + std::string(key) +
                       " " + why);
    };

    if (key == "tx_alpha") {
      if ((cfg.energy.tx_alpha = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "tx_beta") {
      if ((cfg.energy.tx_beta = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "lambda") {
      if ((cfg.energy.lambda = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "rx_const") {
      if ((cfg.energy.rx_const = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "theta") {
      if ((cfg.energy.theta = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "packet_bits") {
      if ((cfg.energy.packet_bits = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "th_alpha") {
      cfg.eligibility.th_alpha = parse_double(val, lineno, key);
      if (cfg.eligibility.th_alpha <= 0 || cfg.eligibility.th_alpha > 1) {
        bad("must be in (0, 1]");
      }
    } else if (key == "n_heads") {
      if ((cfg.placement.n_heads = parse_u32(val, lineno, key)) < 1) bad("must be >= 1");
    } else if (key == "cost_alpha") {
      if ((cfg.placement.cost_alpha = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "cost_beta") {
      if ((cfg.placement.cost_beta = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "iter") {
      if ((cfg.placement.iter = parse_u32(val, lineno, key)) < 1) bad("must be >= 1");
    } else if (key == "neighbor_k") {
      if ((cfg.placement.neighbor_k = parse_u32(val, lineno, key)) < 1) bad("must be >= 1");
    } else if (key == "area_width") {
      if ((cfg.area_width = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "area_height") {
      if ((cfg.area_height = parse_double(val, lineno, key)) <= 0) bad("must be positive");
    } else if (key == "node_count") {
      if ((cfg.node_count = parse_u32(val, lineno, key)) < 1) bad("must be >= 1");
    } else if (key == "sink_x") {
      cfg.sink.x = parse_double(val, lineno, key);
    } else if (key == "sink_y") {
      cfg.sink.y = parse_double(val, lineno, key);
    } else if (key == "seed") {
      cfg.seed = parse_u64(val, lineno, key);
    } else if (key == "max_rounds") {
      cfg.max_rounds = parse_u64(val, lineno, key);
    } else if (key == "refresh_every_rounds") {
      if ((cfg.refresh_every_rounds = parse_u64(val, lineno, key)) < 1) bad("must be >= 1");
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" +
                       std::string(key) + "'");
    }
  });

  if (cfg.placement.n_heads > cfg.node_count) {
    throw ParseError("config: n_heads (" + std::to_string(cfg.placement.n_heads) +
                     ") exceeds node_count (" + std::to_string(cfg.node_count) + ")");
  }
  return cfg;
}

std::string write_config(const SimConfig& cfg) {
  std::string out;
  auto kv = [&](const char* key, const std::string& val) {
    out += key;
    out += '=';
    out += val;
    out += '\n';
  };
  kv("tx_alpha", fmt_shortest(cfg.energy.tx_alpha));
  kv("tx_beta", fmt_shortest(cfg.energy.tx_beta));
  kv("lambda", fmt_shortest(cfg.energy.lambda));
  kv("rx_const", fmt_shortest(cfg.energy.rx_const));
  kv("theta", fmt_shortest(cfg.energy.theta));
  kv("packet_bits", fmt_shortest(cfg.energy.packet_bits));
  kv("th_alpha", fmt_shortest(cfg.eligibility.th_alpha));
  kv("n_heads", std::to_string(cfg.placement.n_heads));
  kv("cost_alpha", fmt_shortest(cfg.placement.cost_alpha));
  kv("cost_beta", fmt_shortest(cfg.placement.cost_beta));
  kv("iter", std::to_string(cfg.placement.iter));
  kv("neighbor_k", std::to_string(cfg.placement.neighbor_k));
  kv("area_width", fmt_shortest(cfg.area_width));
  kv("area_height", fmt_shortest(cfg.area_height));
  kv("node_count", std::to_string(cfg.node_count));
  kv("sink_x", fmt_shortest(cfg.sink.x));
  kv("sink_y", fmt_shortest(cfg.sink.y));
  kv("seed", std::to_string(cfg.seed));
  kv("max_rounds", std::to_string(cfg.max_rounds));
  kv("refresh_every_rounds", std::to_string(cfg.refresh_every_rounds));
  return out;
}

std::vector<SensorNode> load_topology(std::string_view csv) {
  std::vector<SensorNode> nodes;
  std::unordered_set<NodeId> seen;
  bool header_ok = false;

  for_each_line(csv, [&](std::size_t lineno, std::string_view raw) {
    const std::string_view line = trim(raw);
    if (!header_ok) {
      if (line != "id,x,y,energy") {
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header 'id,x,y,energy'");
      }
      header_ok = true;
      return;
    }
    if (line.empty()) return;

    std::string_view fields[4];
    std::string_view rest = line;
    for (int i = 0; i < 4; ++i) {
      const std::size_t comma = rest.find(',');
      if (i < 3) {
        if (comma == std::string_view::npos) {
          throw ParseError("line " + std::to_string(lineno) +
                           ": expected 4 comma-separated fields");
        }
        fields[i] = trim(rest.substr(0, comma));
        rest.remove_prefix(comma + 1);
      } else {
        if (comma != std::string_view::npos) {
          throw ParseError("line " + std::to_string(lineno) + ": too many fields");
        }
        fields[i] = trim(rest);
      }
    }

    SensorNode n;
    n.id = parse_u32(fields[0], lineno, "id");
    if (n.id == kSinkId) {
      throw ParseError("line " + std::to_string(lineno) + ": reserved node id");
    }
    if (!seen.insert(n.id).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate id " +
                       std::to_string(n.id));
    }
    n.pos.x = parse_double(fields[1], lineno, "x");
    n.pos.y = parse_double(fields[2], lineno, "y");
    n.energy = parse_double(fields[3], lineno, "energy");
    if (n.energy < 0) {
      throw ParseError("line " + std::to_string(lineno) + ": negative energy");
    }
    n.head_count = 0;
    n.alive = n.energy > 0;
    n.is_head = false;
    nodes.push_back(n);
  });

  if (!header_ok) throw ParseError("topology: empty file");
  if (nodes.empty()) throw ParseError("topology: no nodes");
  std::sort(nodes.begin(), nodes.end(),
            [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });
  return nodes;
}

std::string write_topology(const std::vector<SensorNode>& nodes) {
  std::string out = "id,x,y,energy\n";
  for (const SensorNode& n : nodes) {
    append_u64(out, n.id);
    out += ',';
    out += fmt_shortest(n.pos.x);
    out += ',';
    out += fmt_shortest(n.pos.y);
    out += ',';
    out += fmt_shortest(n.energy);
    out += '\n';
  }
  return out;
}

std::vector<SensorNode> generate_topology(const SimConfig& cfg, Rng& rng) {
  std::vector<SensorNode> nodes;
  nodes.reserve(cfg.node_count);
  for (std::uint32_t i = 0; i < cfg.node_count; ++i) {
    SensorNode n;
    n.id = i;
    n.pos.x = rng.next_double() * cfg.area_width;
    n.pos.y = rng.next_double() * cfg.area_height;
    n.energy = 1.0;
    nodes.push_back(n);
  }
  return nodes;
}

std::string write_metrics(const std::vector<RoundMetrics>& trace) {
  std::string out =
      "round,alive_count,total_energy,min_energy,max_energy,mean_energy,"
      "packets_delivered,head_set_version\n";
  for (const RoundMetrics& m : trace) {
    append_u64(out, m.round);
    out += ',';
    append_u64(out, m.alive_count);
    out += ',';
    out += fmt_fixed9(m.total_energy);
    out += ',';
    out += fmt_fixed9(m.min_energy);
    out += ',';
    out += fmt_fixed9(m.max_energy);
    out += ',';
    out += fmt_fixed9(m.mean_energy);
    out += ',';
    append_u64(out, m.packets_delivered);
    out += ',';
    append_u64(out, m.head_set_version);
    out += '\n';
  }
  return out;
}

}  // namespace recluster
