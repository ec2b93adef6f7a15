#pragma once

#include <cstdint>
#include <vector>

#include "chipletsim/types.hpp"

namespace chipletsim {

/// One injected packet: emitted by the trace generator, consumed by the
/// network simulator. Node ids index a width x height grid row-major.
struct TraceEvent {
  int source = 0;
  int destination = 0;
  std::int64_t timestamp = 0;  // injection cycle

  bool operator==(const TraceEvent&) const = default;
};

using Trace = std::vector<TraceEvent>;

/// Geometry + timing of one simulated network instance.
struct MeshConfig {
  int width = 1;
  int height = 1;
  int flit_width = 32;      // bits per flit
  int buffer_depth = 4;     // flits per router input FIFO
  int router_pipeline = 2;  // cycles from arrival to grant eligibility
  int link_latency = 1;     // cycles per hop (links and ejection alike)
  double frequency_hz = 1e9;
  int packet_flits = 1;
  double node_pitch_mm = 0.25;
  std::int64_t deadlock_cycles = 100000;
  // per-event costs, from the component library
  double router_energy_per_flit_pj = 0.0;
  double link_energy_per_bit_mm_pj = 0.0;
  double router_area_um2 = 0.0;
  double link_area_per_mm_um2 = 0.0;
};

/// Result of draining one trace through one network.
struct SimStats {
  std::int64_t packets_injected = 0;
  std::int64_t packets_ejected = 0;
  std::int64_t makespan_cycles = 0;       // last ejection time
  std::int64_t total_latency_cycles = 0;  // sum over packets
  std::int64_t max_packet_latency_cycles = 0;
  std::int64_t flit_hops = 0;             // router traversals incl. ejection

  double avg_packet_latency_cycles() const {
    return packets_ejected ? double(total_latency_cycles) / double(packets_ejected)
                           : 0.0;
  }
};

/// Static cost of a network instance.
struct NetworkCost {
  int routers = 0;
  int links = 0;  // bidirectional grid links, full bounding grid
  double area_um2 = 0.0;
};

/// Packets needed to move `activations` values of `precision_bits` each over
/// a `bus_width`-bit channel: ceil(A*Q/W).
std::int64_t packet_count(std::int64_t activations, int precision_bits,
                          int bus_width);

/// Cross-product event stream for one producer->consumer layer edge.
///
/// For each of `packets` rounds, every (source, destination) pair emits one
/// event; the shared timestamp counter advances once per destination and
/// once more per source, and resets only between generator calls.
/// Source==destination pairs are dropped without advancing the counter.
Trace generate_trace(const std::vector<int>& sources,
                     const std::vector<int>& destinations,
                     std::int64_t packets);

/// Serialize/parse the on-disk trace format: one `source destination
/// timestamp` triple per line.
std::string serialize_trace(const Trace& trace);
Trace parse_trace_text(const std::string& text,
                       const std::string& origin = "<string>");

/// Cycle-accurate wormhole mesh: five-port routers, X-then-Y dimension-order
/// routing, credit-based flow control, round-robin output arbitration.
/// Deterministic. Throws NodeOutOfRange for bad ids and DeadlockDetected if
/// the watchdog expires (which signals a simulator bug on X-Y meshes).
SimStats simulate_mesh(const Trace& trace, const MeshConfig& cfg);

/// Analytic H-tree: every packet pays 2*ceil(log2(nodes)) router+link
/// traversals; the shared medium serializes packets one per cycle.
SimStats simulate_htree(const Trace& trace, const MeshConfig& cfg, int nodes);

/// Route a trace through the configured topology over `nodes` endpoints.
SimStats simulate_network(const Trace& trace, const MeshConfig& cfg,
                          NocTopology topology, int nodes);

/// Router/link area of a grid hosting `nodes` endpoints: one router per
/// endpoint, links wired for the full bounding grid.
NetworkCost network_cost(int nodes, const MeshConfig& cfg);

/// Dynamic energy for a finished simulation: every router traversal pays the
/// router energy plus one node-pitch of link at flit width.
double network_energy_pj(const SimStats& stats, const MeshConfig& cfg);

/// Grid dimensions used for `nodes` endpoints: width = ceil(sqrt(nodes)),
/// height = ceil(nodes/width).
std::pair<int, int> grid_shape(int nodes);

/// MeshConfig for the intra-chiplet network of one chiplet.
MeshConfig noc_mesh_config(const HardwareConfig& hw, int tiles);

}  // namespace chipletsim
