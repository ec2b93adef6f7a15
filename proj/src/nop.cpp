#include "chipletsim/nop.hpp"

#include <cmath>
#include <limits>

#include "chipletsim/errors.hpp"

namespace chipletsim {

Placement place_chiplets(int chiplet_count) {
  Placement p;
  if (chiplet_count < 1) {
    throw SimError(ErrorCode::invalid_value,
                   "placement needs at least one chiplet");
  }
  const auto [w, h] = grid_shape(chiplet_count);
  p.grid_width = w;
  p.grid_height = h;
  p.chiplets.reserve(std::size_t(chiplet_count));
  // Boustrophedon walk: left-to-right on even rows, right-to-left on odd
  // rows, so chiplets consecutive in layer order stay grid-adjacent.
  for (int i = 0; i < chiplet_count; ++i) {
    const int row = i / w;
    const int col = i % w;
    p.chiplets.push_back({row % 2 == 0 ? col : w - 1 - col, row});
  }
  // The shared accumulator/buffer block sits just outside the first row.
  p.accumulator = {0, -1};
  return p;
}

WireTiming wire_timing(const NopConfig& cfg) {
  WireTiming t;
  const double r_total = cfg.wire_resistance_ohm_per_mm * cfg.wire_length_mm;
  const double c_total_ff = cfg.wire_capacitance_ff_per_mm * cfg.wire_length_mm;
  // 0.69*R*C lumped delay; fF * ohm = 1e-15 s = 1e-6 ns
  t.delay_ns = 0.69 * r_total * c_total_ff * 1e-6;
  t.max_bandwidth_hz =
      t.delay_ns > 0 ? 1e9 / (2.0 * t.delay_ns)
                     : std::numeric_limits<double>::infinity();
  t.clamped = cfg.frequency_hz > t.max_bandwidth_hz;
  t.effective_bandwidth_hz =
      t.clamped ? t.max_bandwidth_hz : cfg.frequency_hz;
  return t;
}

DriverEnergy nop_driver_energy(const Network& net, const MappingResult& map,
                               const HardwareConfig& hw) {
  DriverEnergy out;
  const TrafficSummary traffic = traffic_summary(net, map, hw);
  out.per_edge_pj.assign(traffic.edges.size(), 0.0);
  for (std::size_t ei = 0; ei < traffic.edges.size(); ++ei) {
    const TrafficEdge& e = traffic.edges[ei];
    if (e.intra_chiplet) continue;
    const LayerSpec& src = net[std::size_t(e.src_layer)];
    // The transported tensor: the producer's own output stream on the
    // sequential edge, the consumer's declared input set on a skip edge.
    const std::int64_t activations =
        e.src_layer + 1 == e.dst_layer
            ? src.activations
            : net[std::size_t(e.dst_layer)].activations;
    const std::int64_t packets = packet_count(
        activations, hw.general.weight_precision, hw.nop.channel_width);
    const std::int64_t bits_per_dest =
        hw.nop.energy_mode == NopEnergyMode::activation_bits
            ? packets * hw.general.activation_precision
            : packets * hw.nop.channel_width;
    const double kept = 1.0 - src.sparsity;
    const auto& src_slices = map.layers[std::size_t(e.src_layer)].slices;
    for (const ChipletSlice& d : map.layers[std::size_t(e.dst_layer)].slices) {
      // a destination fed only by itself never crosses the package
      if (src_slices.size() == 1 &&
          src_slices[0].chiplet_id == d.chiplet_id) {
        continue;
      }
      out.total_bits += std::int64_t(std::llround(double(bits_per_dest) * kept));
      const double pj = double(bits_per_dest) * hw.nop.energy_per_bit_pj * kept;
      out.per_edge_pj[ei] += pj;
      out.total_pj += pj;
    }
  }
  return out;
}

NopArea nop_area(int chiplet_count, const NopConfig& cfg,
                 const ComponentCostLibrary& lib) {
  NopArea a;
  if (chiplet_count < 1) return a;
  a.txrx_um2 = double(chiplet_count) * cfg.txrx_area_um2;
  a.clocking_um2 = double(chiplet_count) * cfg.clocking_area_um2;
  a.routers_um2 = double(chiplet_count) * lib.at("nop_router").area_um2;
  const auto [w, h] = grid_shape(chiplet_count);
  a.links = h * (w - 1) + w * (h - 1);
  // Each link carries channel_width wires at the shielded pitch.
  a.wiring_um2 = double(a.links) * cfg.channel_width * cfg.wire_pitch_um *
                 (cfg.wire_length_mm * 1000.0);
  a.total_um2 = a.txrx_um2 + a.clocking_um2 + a.routers_um2 + a.wiring_um2;
  return a;
}

MeshConfig nop_mesh_config(const HardwareConfig& hw,
                           const Placement& placement) {
  MeshConfig m;
  m.width = placement.grid_width;
  m.height = placement.grid_height;
  m.flit_width = hw.nop.channel_width;
  m.buffer_depth = hw.nop.buffer_depth;
  m.router_pipeline = hw.nop.router_pipeline;
  m.link_latency = hw.nop.link_latency;
  m.frequency_hz = wire_timing(hw.nop).effective_bandwidth_hz;
  m.packet_flits = 1;
  m.node_pitch_mm = hw.nop.wire_length_mm;
  m.deadlock_cycles = hw.noc.deadlock_cycles;
  m.router_energy_per_flit_pj = hw.components.at("nop_router").energy_pj;
  m.link_energy_per_bit_mm_pj = 0.0;  // wire energy is the driver PHY's job
  m.router_area_um2 = hw.components.at("nop_router").area_um2;
  m.link_area_per_mm_um2 = 0.0;
  return m;
}

}  // namespace chipletsim
