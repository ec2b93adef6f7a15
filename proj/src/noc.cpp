#include "chipletsim/noc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "chipletsim/errors.hpp"

namespace chipletsim {

std::int64_t packet_count(std::int64_t activations, int precision_bits,
                          int bus_width) {
  const std::int64_t bits = activations * precision_bits;
  return (bits + bus_width - 1) / bus_width;
}

Trace generate_trace(const std::vector<int>& sources,
                     const std::vector<int>& destinations,
                     std::int64_t packets) {
  Trace trace;
  if (sources.empty() || destinations.empty() || packets <= 0) return trace;
  std::int64_t k = 0;
  for (std::int64_t n = 0; n < packets; ++n) {
    for (int s : sources) {
      for (int d : destinations) {
        if (s == d) continue;  // no hop needed, no slot consumed
        trace.push_back({s, d, k});
        ++k;
      }
      ++k;  // per-source spacing slot
    }
  }
  return trace;
}

std::string serialize_trace(const Trace& trace) {
  std::ostringstream out;
  for (const auto& e : trace) {
    out << e.source << ' ' << e.destination << ' ' << e.timestamp << '\n';
  }
  return out.str();
}

Trace parse_trace_text(const std::string& text, const std::string& origin) {
  Trace trace;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    TraceEvent e;
    if (!(ls >> e.source)) continue;  // blank line
    if (!(ls >> e.destination >> e.timestamp)) {
      throw SimError(ErrorCode::malformed_row,
                     origin + ":" + std::to_string(lineno) +
                         ": expected `source destination timestamp`");
    }
    std::string rest;
    if (ls >> rest) {
      throw SimError(ErrorCode::malformed_row,
                     origin + ":" + std::to_string(lineno) +
                         ": trailing tokens after timestamp");
    }
    if (e.source == e.destination) {
      throw SimError(ErrorCode::invalid_value,
                     origin + ":" + std::to_string(lineno) +
                         ": source equals destination");
    }
    if (e.source < 0 || e.destination < 0 || e.timestamp < 0) {
      throw SimError(ErrorCode::invalid_value,
                     origin + ":" + std::to_string(lineno) +
                         ": negative field");
    }
    trace.push_back(e);
  }
  return trace;
}

std::pair<int, int> grid_shape(int nodes) {
  if (nodes <= 1) return {1, 1};
  const int w = int(std::ceil(std::sqrt(double(nodes))));
  const int h = int((nodes + w - 1) / w);
  return {w, h};
}

namespace {

// Output/input direction indices. Outputs are arbitrated in this order each
// cycle; inputs use the same numbering (LOCAL takes the EJECT slot).
enum Dir : int { EJECT = 0, LOCAL = 0, N = 1, E = 2, S = 3, W = 4 };

int opposite(int dir) {
  switch (dir) {
    case N: return S;
    case S: return N;
    case E: return W;
    case W: return E;
  }
  return dir;
}

struct FlitRec {
  int packet = 0;
  int flit = 0;  // 0 = head .. packet_flits-1 = tail
  int dest = 0;
  std::int64_t eligible = 0;  // arrival + router_pipeline
};

struct Router {
  std::array<std::deque<FlitRec>, 5> in;  // by input port
  std::array<int, 5> rr{};                // round-robin pointer per output
  std::array<int, 5> credits{};           // [N..W]; EJECT slot unused
  std::array<int, 5> lock{};              // packet holding the output, -1 free
};

}  // namespace

SimStats simulate_mesh(const Trace& trace, const MeshConfig& cfg) {
  SimStats stats;
  if (trace.empty()) return stats;

  const int w = cfg.width;
  const int h = cfg.height;
  const int node_count = w * h;
  for (const auto& e : trace) {
    if (e.source < 0 || e.source >= node_count || e.destination < 0 ||
        e.destination >= node_count) {
      throw SimError(ErrorCode::node_out_of_range,
                     "trace event references node outside the " +
                         std::to_string(w) + "x" + std::to_string(h) +
                         " grid");
    }
  }

  const int P = cfg.router_pipeline;
  const int L = cfg.link_latency;
  const int flits_per_packet = std::max(1, cfg.packet_flits);

  std::vector<Router> routers(static_cast<std::size_t>(node_count));
  for (auto& r : routers) {
    r.credits.fill(cfg.buffer_depth);
    r.lock.fill(-1);
  }

  // Inject every flit into its source's local FIFO in trace order.
  std::set<int> active;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    for (int f = 0; f < flits_per_packet; ++f) {
      routers[std::size_t(trace[i].source)].in[LOCAL].push_back(
          {int(i), f, trace[i].destination, trace[i].timestamp + P});
    }
    active.insert(trace[i].source);
  }

  auto route_output = [&](int node, int dest) -> int {
    if (node == dest) return EJECT;
    const int xs = node % w, ys = node / w;
    const int xd = dest % w, yd = dest / w;
    if (xd > xs) return E;
    if (xd < xs) return W;
    if (yd > ys) return S;
    return N;
  };
  auto neighbor = [&](int node, int dir) -> int {
    switch (dir) {
      case N: return node - w;
      case S: return node + w;
      case E: return node + 1;
      case W: return node - 1;
    }
    return node;
  };

  struct Arrival {
    int node = 0;
    int port = 0;
    FlitRec flit;
  };
  std::map<std::int64_t, std::vector<Arrival>> arrivals;
  std::map<std::int64_t, std::vector<std::pair<int, int>>> credit_returns;

  std::vector<std::int64_t> eject_time(trace.size(), -1);
  std::int64_t total_flits =
      std::int64_t(trace.size()) * flits_per_packet;
  std::int64_t ejected_flits = 0;
  std::int64_t t = 0;
  std::int64_t last_grant = 0;

  struct Grant {
    int node, out, port;
  };
  std::vector<Grant> grants;

  while (ejected_flits < total_flits) {
    if (t - last_grant > cfg.deadlock_cycles) {
      throw SimError(ErrorCode::deadlock_detected,
                     "no packet progress for " +
                         std::to_string(cfg.deadlock_cycles) + " cycles at cycle " +
                         std::to_string(t));
    }

    // deliver flits and credits that land this cycle
    if (auto it = arrivals.find(t); it != arrivals.end()) {
      for (const Arrival& a : it->second) {
        routers[std::size_t(a.node)].in[std::size_t(a.port)].push_back(a.flit);
        active.insert(a.node);
      }
      arrivals.erase(it);
    }
    if (auto it = credit_returns.find(t); it != credit_returns.end()) {
      for (auto [node, out] : it->second) {
        ++routers[std::size_t(node)].credits[std::size_t(out)];
      }
      credit_returns.erase(it);
    }

    // Phase 1: decide all grants from the cycle-start state.
    grants.clear();
    for (int node : active) {
      Router& r = routers[std::size_t(node)];
      for (int out = 0; out < 5; ++out) {
        if (out != EJECT && r.credits[std::size_t(out)] <= 0) continue;
        const int start = r.rr[std::size_t(out)];
        for (int k = 0; k < 5; ++k) {
          const int port = (start + k) % 5;
          const auto& fifo = r.in[std::size_t(port)];
          if (fifo.empty()) continue;
          const FlitRec& head = fifo.front();
          if (head.eligible > t) continue;
          if (route_output(node, head.dest) != out) continue;
          const int held = r.lock[std::size_t(out)];
          if (held >= 0 ? head.packet != held : head.flit != 0) continue;
          grants.push_back({node, out, port});
          break;
        }
      }
    }

    // Phase 2: apply.
    for (const Grant& g : grants) {
      Router& r = routers[std::size_t(g.node)];
      FlitRec flit = r.in[std::size_t(g.port)].front();
      r.in[std::size_t(g.port)].pop_front();
      r.rr[std::size_t(g.out)] = (g.port + 1) % 5;
      if (flits_per_packet > 1) {
        r.lock[std::size_t(g.out)] = flit.flit == 0 ? flit.packet : r.lock[std::size_t(g.out)];
        if (flit.flit == flits_per_packet - 1) r.lock[std::size_t(g.out)] = -1;
      }
      ++stats.flit_hops;
      if (g.port != LOCAL) {
        // free one buffer slot upstream, visible after the wire delay
        const int up = neighbor(g.node, g.port);
        credit_returns[t + L].push_back({up, opposite(g.port)});
      }
      if (g.out == EJECT) {
        ++ejected_flits;
        if (flit.flit == flits_per_packet - 1) {
          eject_time[std::size_t(flit.packet)] = t + L;
        }
      } else {
        flit.eligible = t + L + P;
        --r.credits[std::size_t(g.out)];
        arrivals[t + L].push_back(
            {neighbor(g.node, g.out), opposite(g.out), flit});
      }
      last_grant = t;
    }

    // prune drained routers from the active set
    for (auto it = active.begin(); it != active.end();) {
      const Router& r = routers[std::size_t(*it)];
      bool any = false;
      for (const auto& fifo : r.in) any |= !fifo.empty();
      it = any ? std::next(it) : active.erase(it);
    }

    // Fast-forward over dead time: jump to the next moment anything can
    // change (arrival, credit return, or a head flit turning eligible).
    std::int64_t next = t + 1;
    if (grants.empty()) {
      std::int64_t wake = -1;
      auto consider = [&](std::int64_t v) {
        if (v > t && (wake < 0 || v < wake)) wake = v;
      };
      if (!arrivals.empty()) consider(arrivals.begin()->first);
      if (!credit_returns.empty()) consider(credit_returns.begin()->first);
      for (int node : active) {
        for (const auto& fifo : routers[std::size_t(node)].in) {
          if (!fifo.empty()) consider(fifo.front().eligible);
        }
      }
      if (wake < 0) {
        if (ejected_flits < total_flits) {
          throw SimError(ErrorCode::deadlock_detected,
                         "network stalled with " +
                             std::to_string(total_flits - ejected_flits) +
                             " flits in flight at cycle " + std::to_string(t));
        }
        break;
      }
      if (wake - last_grant > cfg.deadlock_cycles) {
        throw SimError(ErrorCode::deadlock_detected,
                       "no packet progress for " +
                           std::to_string(cfg.deadlock_cycles) +
                           " cycles at cycle " + std::to_string(wake));
      }
      next = wake;
    }
    t = next;
  }

  stats.packets_injected = std::int64_t(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (eject_time[i] < 0) continue;
    ++stats.packets_ejected;
    const std::int64_t lat = eject_time[i] - trace[i].timestamp;
    stats.total_latency_cycles += lat;
    stats.max_packet_latency_cycles =
        std::max(stats.max_packet_latency_cycles, lat);
    stats.makespan_cycles = std::max(stats.makespan_cycles, eject_time[i]);
  }
  return stats;
}

SimStats simulate_htree(const Trace& trace, const MeshConfig& cfg, int nodes) {
  SimStats stats;
  if (trace.empty()) return stats;
  for (const auto& e : trace) {
    if (e.source < 0 || e.source >= nodes || e.destination < 0 ||
        e.destination >= nodes) {
      throw SimError(ErrorCode::node_out_of_range,
                     "trace event references node outside the " +
                         std::to_string(nodes) + "-leaf tree");
    }
  }
  const int levels =
      std::max(1, int(std::ceil(std::log2(double(std::max(2, nodes))))));
  const std::int64_t zero_load =
      std::int64_t(2) * levels * (cfg.router_pipeline + cfg.link_latency) +
      (std::max(1, cfg.packet_flits) - 1);

  // Shared medium: packets are serialized in timestamp order, one per cycle.
  std::vector<std::size_t> order(trace.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return trace[a].timestamp < trace[b].timestamp;
  });

  std::int64_t prev_eject = -1;
  for (std::size_t idx : order) {
    const std::int64_t eject =
        std::max(trace[idx].timestamp + zero_load, prev_eject + 1);
    prev_eject = eject;
    const std::int64_t lat = eject - trace[idx].timestamp;
    stats.total_latency_cycles += lat;
    stats.max_packet_latency_cycles =
        std::max(stats.max_packet_latency_cycles, lat);
    stats.makespan_cycles = std::max(stats.makespan_cycles, eject);
  }
  stats.packets_injected = std::int64_t(trace.size());
  stats.packets_ejected = stats.packets_injected;
  stats.flit_hops = std::int64_t(trace.size()) * 2 * levels *
                    std::max(1, cfg.packet_flits);
  return stats;
}

SimStats simulate_network(const Trace& trace, const MeshConfig& cfg,
                          NocTopology topology, int nodes) {
  if (topology == NocTopology::htree) {
    return simulate_htree(trace, cfg, nodes);
  }
  return simulate_mesh(trace, cfg);
}

NetworkCost network_cost(int nodes, const MeshConfig& cfg) {
  NetworkCost c;
  if (nodes <= 0) return c;
  const auto [w, h] = grid_shape(nodes);
  c.routers = nodes;
  c.links = h * (w - 1) + w * (h - 1);
  c.area_um2 = c.routers * cfg.router_area_um2 +
               c.links * cfg.link_area_per_mm_um2 * cfg.node_pitch_mm;
  return c;
}

double network_energy_pj(const SimStats& stats, const MeshConfig& cfg) {
  return double(stats.flit_hops) *
         (cfg.router_energy_per_flit_pj +
          cfg.flit_width * cfg.link_energy_per_bit_mm_pj * cfg.node_pitch_mm);
}

MeshConfig noc_mesh_config(const HardwareConfig& hw, int tiles) {
  MeshConfig m;
  const auto [w, h] = grid_shape(tiles);
  m.width = w;
  m.height = h;
  m.flit_width = hw.noc.flit_width;
  m.buffer_depth = hw.noc.buffer_depth;
  m.router_pipeline = hw.noc.router_pipeline;
  m.link_latency = hw.noc.link_latency;
  m.frequency_hz = hw.noc.frequency_hz;
  m.packet_flits = hw.noc.packet_flits;
  m.node_pitch_mm = hw.noc.node_pitch_mm;
  m.deadlock_cycles = hw.noc.deadlock_cycles;
  m.router_energy_per_flit_pj = hw.components.at("noc_router").energy_pj;
  m.link_energy_per_bit_mm_pj = hw.components.at("noc_link_per_mm").energy_pj;
  m.router_area_um2 = hw.components.at("noc_router").area_um2;
  m.link_area_per_mm_um2 = hw.components.at("noc_link_per_mm").area_um2;
  return m;
}

}  // namespace chipletsim
