#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chipletsim/mapping.hpp"
#include "chipletsim/noc.hpp"
#include "chipletsim/types.hpp"

namespace chipletsim {

/// Package-grid coordinate of one chiplet.
struct GridPos {
  int x = 0;
  int y = 0;

  bool operator==(const GridPos&) const = default;
};

/// Serpentine placement of chiplets on the package plus the dedicated
/// accumulator node attached at the grid edge.
struct Placement {
  int grid_width = 1;
  int grid_height = 1;
  std::vector<GridPos> chiplets;  // indexed by chiplet id, layer order
  GridPos accumulator;            // edge node, not part of the routed mesh

  int node_of(int chiplet_id) const {
    const GridPos& p = chiplets[std::size_t(chiplet_id)];
    return p.y * grid_width + p.x;
  }
};

/// RC timing of one package wire and the bandwidth it supports.
struct WireTiming {
  double delay_ns = 0.0;          // lumped RC (Elmore) delay
  double max_bandwidth_hz = 0.0;  // 1 / (2 * delay)
  double effective_bandwidth_hz = 0.0;
  bool clamped = false;           // target exceeded what the wire allows
};

/// Driver (TX/RX) energy of all inter-chiplet transfers.
struct DriverEnergy {
  double total_pj = 0.0;
  std::int64_t total_bits = 0;  // bits the energy model charged for
  std::vector<double> per_edge_pj;  // aligned with TrafficSummary::edges
};

/// NoP area breakdown.
struct NopArea {
  double txrx_um2 = 0.0;
  double clocking_um2 = 0.0;
  double routers_um2 = 0.0;
  double wiring_um2 = 0.0;
  double total_um2 = 0.0;
  int links = 0;
};

/// Lay out `chiplet_count` chiplets on the smallest square-ish grid in
/// serpentine order, so chiplets of consecutive layers sit adjacent.
Placement place_chiplets(int chiplet_count);

/// Elmore RC delay of the configured package wire and the resulting
/// effective per-lane bandwidth (clamped to what RC permits).
WireTiming wire_timing(const NopConfig& cfg);

/// Driver energy over all inter-chiplet edges of a mapping. Charged bits per
/// (edge, destination chiplet): packets = ceil(A*Q/W); bits = packets *
/// activation_precision (literal algorithmic form, the default) or packets *
/// channel_width (bus_bits mode). Source-layer sparsity scales the result.
DriverEnergy nop_driver_energy(const Network& net, const MappingResult& map,
                               const HardwareConfig& hw);

/// Package-level area: per-chiplet fixed circuits (TX/RX, clocking, NoP
/// router) plus channel wiring on every grid link at the shielded pitch.
NopArea nop_area(int chiplet_count, const NopConfig& cfg,
                 const ComponentCostLibrary& lib);

/// MeshConfig for the chiplet-to-chiplet network of a placement.
MeshConfig nop_mesh_config(const HardwareConfig& hw,
                           const Placement& placement);

}  // namespace chipletsim
