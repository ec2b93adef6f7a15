#include "chipletsim/pipeline.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chipletsim/errors.hpp"

namespace chipletsim {

namespace {

using ordered_json = nlohmann::ordered_json;

// Incoming transfers of one destination layer, simulated in the window
// between its predecessor's compute and its own.
struct WindowResult {
  SimStats noc;              // worst chiplet of this window
  SimStats noc_sum;          // all chiplets of this window combined
  double noc_energy_pj = 0.0;
  SimStats nop;
  double nop_router_energy_pj = 0.0;
  double nop_driver_energy_pj = 0.0;
};

struct InterconnectResult {
  std::vector<WindowResult> windows;  // indexed by destination layer
  WireTiming wire;
  DriverEnergy driver;
  Placement placement;
};

std::vector<int> slice_nodes(const ChipletSlice& s) {
  std::vector<int> nodes;
  nodes.reserve(std::size_t(s.tiles));
  for (std::int64_t t = 0; t < s.tiles; ++t) {
    nodes.push_back(int(s.tile_offset + t));
  }
  return nodes;
}

void merge_by_timestamp(Trace& trace) {
  std::stable_sort(trace.begin(), trace.end(),
                   [](const TraceEvent& a, const TraceEvent& b) {
                     return a.timestamp < b.timestamp;
                   });
}

void add_stats(SimStats& acc, const SimStats& s) {
  acc.packets_injected += s.packets_injected;
  acc.packets_ejected += s.packets_ejected;
  acc.makespan_cycles += s.makespan_cycles;  // windows run back to back
  acc.total_latency_cycles += s.total_latency_cycles;
  acc.max_packet_latency_cycles =
      std::max(acc.max_packet_latency_cycles, s.max_packet_latency_cycles);
  acc.flit_hops += s.flit_hops;
}

// The activation count a traffic edge transports (the producer's own output
// stream on the sequential edge, the consumer's input set on a skip edge).
std::int64_t edge_activations(const Network& net, const TrafficEdge& e) {
  return e.src_layer + 1 == e.dst_layer
             ? net[std::size_t(e.src_layer)].activations
             : net[std::size_t(e.dst_layer)].activations;
}

InterconnectResult run_interconnect(const Network& net,
                                    const MappingResult& map,
                                    const TrafficSummary& traffic,
                                    const HardwareConfig& hw) {
  InterconnectResult out;
  out.windows.resize(net.size());
  out.wire = wire_timing(hw.nop);
  out.driver = nop_driver_energy(net, map, hw);

  const int placed = map.mode == ChipMode::monolithic ? 1
                     : map.structure == ChipletStructure::homogeneous
                         ? hw.chiplet.chiplet_count
                         : std::max(1, map.chiplets_used);
  out.placement = place_chiplets(placed);

  // group incoming edges by destination layer
  std::map<int, std::vector<std::size_t>> incoming;
  for (std::size_t ei = 0; ei < traffic.edges.size(); ++ei) {
    incoming[traffic.edges[ei].dst_layer].push_back(ei);
  }

  const MeshConfig nop_cfg = nop_mesh_config(hw, out.placement);

  for (const auto& [dst, edge_ids] : incoming) {
    WindowResult& win = out.windows[std::size_t(dst)];

    // --- on-chip segments: one merged trace per chiplet hosting both ends
    const int tiles_per_die = int(map.tiles_per_chiplet);
    const MeshConfig noc_cfg = noc_mesh_config(hw, tiles_per_die);
    std::map<int, Trace> per_chiplet;
    for (std::size_t ei : edge_ids) {
      const TrafficEdge& e = traffic.edges[ei];
      const std::int64_t packets =
          packet_count(edge_activations(net, e), hw.general.weight_precision,
                       hw.noc.flit_width);
      const auto& src_slices = map.layers[std::size_t(e.src_layer)].slices;
      const auto& dst_slices = map.layers[std::size_t(e.dst_layer)].slices;
      for (const ChipletSlice& ss : src_slices) {
        for (const ChipletSlice& ds : dst_slices) {
          if (ss.chiplet_id != ds.chiplet_id) continue;
          Trace seg =
              generate_trace(slice_nodes(ss), slice_nodes(ds), packets);
          Trace& sink = per_chiplet[ss.chiplet_id];
          sink.insert(sink.end(), seg.begin(), seg.end());
        }
      }
    }
    for (auto& [chiplet, trace] : per_chiplet) {
      merge_by_timestamp(trace);
      const SimStats s = simulate_network(trace, noc_cfg, hw.noc.topology,
                                          tiles_per_die);
      if (s.makespan_cycles > win.noc.makespan_cycles) win.noc = s;
      add_stats(win.noc_sum, s);
      win.noc_energy_pj += network_energy_pj(s, noc_cfg);
    }

    // --- package segments: one merged trace over all chiplet pairs
    Trace nop_trace;
    for (std::size_t ei : edge_ids) {
      const TrafficEdge& e = traffic.edges[ei];
      if (e.intra_chiplet) continue;
      const std::int64_t packets =
          packet_count(edge_activations(net, e), hw.general.weight_precision,
                       hw.nop.channel_width);
      std::vector<int> srcs, dsts;
      for (const ChipletSlice& s : map.layers[std::size_t(e.src_layer)].slices) {
        srcs.push_back(out.placement.node_of(s.chiplet_id));
      }
      for (const ChipletSlice& s : map.layers[std::size_t(e.dst_layer)].slices) {
        dsts.push_back(out.placement.node_of(s.chiplet_id));
      }
      Trace seg = generate_trace(srcs, dsts, packets);
      nop_trace.insert(nop_trace.end(), seg.begin(), seg.end());
      win.nop_driver_energy_pj += out.driver.per_edge_pj[ei];
    }
    if (!nop_trace.empty()) {
      merge_by_timestamp(nop_trace);
      win.nop = simulate_mesh(nop_trace, nop_cfg);
      win.nop_router_energy_pj = network_energy_pj(win.nop, nop_cfg);
    }
  }
  return out;
}

}  // namespace

PerfReport run_pipeline(const Network& net, const HardwareConfig& hw,
                        bool concurrent_engines) {
  if (net.empty()) {
    throw SimError(ErrorCode::empty_network, "cannot simulate an empty network");
  }
  PerfReport rep;
  rep.config = hw;

  // Stage 1: partition and mapping, alone.
  rep.mapping = partition_network(net, hw);
  rep.traffic = traffic_summary(net, rep.mapping, hw);

  // Stage 2: the four engines, each a pure function of the mapping.
  CircuitReport circuit;
  InterconnectResult icn;
  DramReport dram;
  if (concurrent_engines) {
    auto circuit_f = std::async(std::launch::async, [&] {
      return circuit_report(net, rep.mapping, rep.traffic, hw);
    });
    auto icn_f = std::async(std::launch::async, [&] {
      return run_interconnect(net, rep.mapping, rep.traffic, hw);
    });
    auto dram_f = std::async(std::launch::async,
                             [&] { return dram_weight_load(net, hw); });
    circuit = circuit_f.get();
    icn = icn_f.get();
    dram = dram_f.get();
  } else {
    circuit = circuit_report(net, rep.mapping, rep.traffic, hw);
    icn = run_interconnect(net, rep.mapping, rep.traffic, hw);
    dram = dram_weight_load(net, hw);
  }
  rep.circuit = std::move(circuit);
  rep.placement = icn.placement;
  rep.nop_wire = icn.wire;
  rep.nop_driver = icn.driver;
  rep.dram = dram;

  const int fabricated = rep.mapping.mode == ChipMode::monolithic
                             ? std::max(1, int((rep.mapping.total_tiles +
                                                hw.chiplet.tiles_per_chiplet - 1) /
                                               hw.chiplet.tiles_per_chiplet))
                         : rep.mapping.structure == ChipletStructure::homogeneous
                             ? hw.chiplet.chiplet_count
                             : rep.mapping.chiplets_used;
  rep.nop_area_breakdown =
      nop_area(rep.mapping.mode == ChipMode::monolithic ? 1 : fabricated,
               hw.nop, hw.components);

  // Stage 3: sequential per-layer composition.
  const double noc_ns_per_cycle = 1e9 / hw.noc.frequency_hz;
  const double nop_ns_per_cycle = 1e9 / icn.wire.effective_bandwidth_hz;

  std::vector<double> compute_ns(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    compute_ns[i] = rep.circuit.layers[i].compute.latency_ns;
  }

  for (std::size_t i = 0; i < net.size(); ++i) {
    const LayerCircuit& lc = rep.circuit.layers[i];
    LayerPerf lp;
    lp.name = net[i].name;
    lp.chiplets = int(rep.mapping.layers[i].slices.size());
    lp.compute_latency_ns = lc.compute.latency_ns;
    lp.compute_energy_pj = lc.compute.energy_pj;

    if (lp.chiplets > 1) {
      // every hosting chiplet streams its partial sums to the accumulator
      const std::int64_t a_out = output_activations(net, i);
      const double bits = double(lp.chiplets) * double(a_out) *
                          hw.general.weight_precision;
      lp.accumulator_transfer_ns =
          bits / (double(hw.nop.channel_width) *
                  icn.wire.effective_bandwidth_hz) *
          1e9;
      lp.accumulator_latency_ns = lc.global_accumulator.latency_ns;
    }
    lp.accumulator_energy_pj =
        lc.global_accumulator.energy_pj + lc.global_buffer_energy_pj;

    // transfers delivering this layer's region of the dataflow: the window
    // of the next layer in program order
    if (i + 1 < net.size()) {
      const WindowResult& win = icn.windows[i + 1];
      lp.noc_latency_ns = double(win.noc.makespan_cycles) * noc_ns_per_cycle;
      lp.noc_energy_pj = win.noc_energy_pj;
      const double nop_ns = double(win.nop.makespan_cycles) * nop_ns_per_cycle;
      lp.nop_latency_ns =
          hw.general.overlap_nop_compute
              ? std::max(0.0, nop_ns - compute_ns[i + 1])
              : nop_ns;
      lp.nop_energy_pj = win.nop_router_energy_pj + win.nop_driver_energy_pj;

      add_stats(rep.noc_stats, win.noc_sum);
      add_stats(rep.nop_stats, win.nop);
    }

    lp.latency_ns = lp.compute_latency_ns + lp.accumulator_transfer_ns +
                    lp.accumulator_latency_ns + lp.noc_latency_ns +
                    lp.nop_latency_ns;
    lp.energy_pj = lp.compute_energy_pj + lp.accumulator_energy_pj +
                   lp.noc_energy_pj + lp.nop_energy_pj;
    rep.noc_energy_pj += lp.noc_energy_pj;
    rep.nop_energy_pj += lp.nop_energy_pj;
    rep.per_layer.push_back(std::move(lp));
  }

  // Stage 4: totals and the fabrication-cost comparison.
  Totals& t = rep.totals;
  for (const LayerPerf& lp : rep.per_layer) {
    t.latency_ns += lp.latency_ns;
    t.energy_pj += lp.energy_pj;
  }
  t.leakage_energy_pj =
      rep.circuit.leakage_power_uw * t.latency_ns * 1e-3;  // uW * ns = 1e-3 pJ
  t.energy_pj += t.leakage_energy_pj;
  if (hw.dram.include_in_totals) {
    t.energy_pj += rep.dram.energy_pj;
    t.latency_ns += rep.dram.latency_ns;
  }

  const double chiplet_die = chiplet_die_area_um2(hw);
  const double mono_die = monolithic_die_area_um2(hw, rep.mapping.total_tiles);
  bool any_adds = false;
  for (auto a : rep.traffic.accumulator_adds) any_adds |= a > 0;
  double area_um2 = 0.0;
  if (rep.mapping.mode == ChipMode::monolithic) {
    area_um2 = mono_die;
  } else {
    area_um2 = double(fabricated) * chiplet_die +
               rep.nop_area_breakdown.wiring_um2;
    if (any_adds) {
      area_um2 += hw.components.at("global_accumulator_per_add").area_um2 +
                  hw.components.at("global_buffer_per_access").area_um2;
    }
  }
  t.area_mm2 = area_um2 * 1e-6;
  t.power_mw = t.latency_ns > 0 ? t.energy_pj / t.latency_ns : 0.0;
  t.edp_pj_ns = t.energy_pj * t.latency_ns;
  t.edap_pj_ns_mm2 = t.edp_pj_ns * t.area_mm2;
  t.inferences_per_second = t.latency_ns > 0 ? 1e9 / t.latency_ns : 0.0;
  t.inferences_per_joule = t.energy_pj > 0 ? 1e12 / t.energy_pj : 0.0;

  const WaferSpec wafer{hw.general.wafer_diameter_mm,
                        hw.general.defect_density_per_mm2};
  rep.cost = architecture_cost(chiplet_die * 1e-6, fabricated, mono_die * 1e-6,
                               hw.general.packaging_cost_fraction, wafer);
  return rep;
}

namespace {

ordered_json config_to_json(const HardwareConfig& hw) {
  const auto& g = hw.general;
  const auto& c = hw.chiplet;
  const auto& n = hw.noc;
  const auto& p = hw.nop;
  const auto& m = hw.dram;
  ordered_json j;
  j["general"] = {
      {"weight_precision", g.weight_precision},
      {"activation_precision", g.activation_precision},
      {"cell_type", g.cell_type == CellType::rram ? "RRAM" : "SRAM"},
      {"bits_per_cell", g.bits_per_cell},
      {"crossbar_rows", g.crossbar_rows},
      {"crossbar_cols", g.crossbar_cols},
      {"adc_resolution", g.adc_resolution},
      {"columns_per_adc", g.columns_per_adc},
      {"clock_frequency_hz", g.clock_frequency_hz},
      {"readout_mode",
       g.readout == ReadoutMode::parallel ? "parallel" : "sequential"},
      {"overlap_nop_compute", g.overlap_nop_compute},
      {"wafer_diameter_mm", g.wafer_diameter_mm},
      {"defect_density_per_mm2", g.defect_density_per_mm2},
      {"packaging_cost_fraction", g.packaging_cost_fraction},
  };
  j["chiplet"] = {
      {"chip_mode", c.mode == ChipMode::chiplet ? "chiplet" : "monolithic"},
      {"chiplet_structure",
       c.structure == ChipletStructure::custom ? "custom" : "homogeneous"},
      {"crossbars_per_tile", c.crossbars_per_tile},
      {"tiles_per_chiplet", c.tiles_per_chiplet},
      {"global_accumulator_width", c.global_accumulator_width},
      {"chiplet_sharing", c.sharing},
  };
  if (c.structure == ChipletStructure::homogeneous) {
    j["chiplet"]["chiplet_count"] = c.chiplet_count;
  }
  j["noc"] = {
      {"topology", n.topology == NocTopology::mesh ? "mesh" : "htree"},
      {"flit_width", n.flit_width},
      {"buffer_depth", n.buffer_depth},
      {"router_pipeline", n.router_pipeline},
      {"link_latency", n.link_latency},
      {"frequency_hz", n.frequency_hz},
      {"packet_flits", n.packet_flits},
      {"node_pitch_mm", n.node_pitch_mm},
      {"deadlock_cycles", n.deadlock_cycles},
  };
  j["nop"] = {
      {"frequency_hz", p.frequency_hz},
      {"channel_width", p.channel_width},
      {"energy_per_bit_pj", p.energy_per_bit_pj},
      {"txrx_area_um2", p.txrx_area_um2},
      {"clocking_area_um2", p.clocking_area_um2},
      {"wire_length_mm", p.wire_length_mm},
      {"wire_resistance_ohm_per_mm", p.wire_resistance_ohm_per_mm},
      {"wire_capacitance_ff_per_mm", p.wire_capacitance_ff_per_mm},
      {"wire_pitch_um", p.wire_pitch_um},
      {"router_pipeline", p.router_pipeline},
      {"link_latency", p.link_latency},
      {"buffer_depth", p.buffer_depth},
      {"energy_mode", p.energy_mode == NopEnergyMode::activation_bits
                          ? "activation_bits"
                          : "bus_bits"},
  };
  j["dram"] = {
      {"standard", m.standard},
      {"clock_mhz", m.clock_mhz},
      {"burst_bytes", m.burst_bytes},
      {"burst_cycles", m.burst_cycles},
      {"trcd", m.trcd},
      {"tcas", m.tcas},
      {"trp", m.trp},
      {"row_bytes", m.row_bytes},
      {"energy_activate_pj", m.energy_activate_pj},
      {"energy_read_pj", m.energy_read_pj},
      {"energy_precharge_pj", m.energy_precharge_pj},
      {"background_power_mw", m.background_power_mw},
      {"include_in_totals", m.include_in_totals},
      {"chunk_fraction", m.chunk_fraction},
  };
  ordered_json comps;
  for (const auto& [name, cost] : hw.components.entries()) {
    comps[name] = {
        {"area_um2", cost.area_um2},
        {"energy_pj", cost.energy_pj},
        {"latency_ns", cost.latency_ns},
        {"leakage_uw", cost.leakage_uw},
    };
  }
  j["components"] = comps;
  return j;
}

ordered_json stats_to_json(const SimStats& s) {
  return {
      {"packets_injected", s.packets_injected},
      {"packets_ejected", s.packets_ejected},
      {"makespan_cycles", s.makespan_cycles},
      {"avg_packet_latency_cycles", s.avg_packet_latency_cycles()},
      {"max_packet_latency_cycles", s.max_packet_latency_cycles},
      {"flit_hops", s.flit_hops},
  };
}

}  // namespace

std::string report_to_json(const PerfReport& rep) {
  ordered_json j;
  j["schema_version"] = 1;
  j["config"] = config_to_json(rep.config);

  ordered_json layers = ordered_json::array();
  for (const LayerMapping& lm : rep.mapping.layers) {
    ordered_json slices = ordered_json::array();
    for (const ChipletSlice& s : lm.slices) {
      slices.push_back({{"chiplet", s.chiplet_id},
                        {"tile_offset", s.tile_offset},
                        {"tiles", s.tiles},
                        {"crossbars", s.crossbars}});
    }
    layers.push_back({
        {"name", lm.name},
        {"rows_of_crossbars", lm.demand.rows_needed},
        {"cols_of_crossbars", lm.demand.cols_needed},
        {"total_crossbars", lm.demand.total},
        {"tiles", lm.demand.tiles},
        {"utilization", lm.utilization},
        {"slices", slices},
    });
  }
  j["mapping"] = {
      {"mode",
       rep.mapping.mode == ChipMode::chiplet ? "chiplet" : "monolithic"},
      {"structure", rep.mapping.structure == ChipletStructure::custom
                        ? "custom"
                        : "homogeneous"},
      {"chiplets_used", rep.mapping.chiplets_used},
      {"total_tiles", rep.mapping.total_tiles},
      {"total_crossbars", rep.mapping.total_crossbars},
      {"tiles_per_chiplet", rep.mapping.tiles_per_chiplet},
      {"crossbars_per_tile", rep.mapping.crossbars_per_tile},
      {"global_utilization", rep.mapping.global_utilization},
      {"layers", layers},
  };

  j["traffic"] = {
      {"inter_chiplet_bits", rep.traffic.total_inter_chiplet_bits},
      {"intra_chiplet_bits", rep.traffic.total_intra_chiplet_bits},
      {"accumulator_adds", rep.traffic.accumulator_adds},
      {"global_buffer_accesses", rep.traffic.global_buffer_accesses},
  };

  j["circuit"] = {
      {"compute_area_um2", rep.circuit.compute_total.area_um2},
      {"compute_energy_pj", rep.circuit.compute_total.energy_pj},
      {"compute_latency_ns", rep.circuit.compute_total.latency_ns},
      {"global_accumulator_energy_pj",
       rep.circuit.global_accumulator_total.energy_pj},
      {"global_accumulator_latency_ns",
       rep.circuit.global_accumulator_total.latency_ns},
      {"global_buffer_energy_pj", rep.circuit.global_buffer_energy_pj},
      {"leakage_power_uw", rep.circuit.leakage_power_uw},
  };

  j["noc"] = stats_to_json(rep.noc_stats);
  j["noc"]["energy_pj"] = rep.noc_energy_pj;

  j["nop"] = stats_to_json(rep.nop_stats);
  j["nop"]["energy_pj"] = rep.nop_energy_pj;
  j["nop"]["driver_energy_pj"] = rep.nop_driver.total_pj;
  j["nop"]["driver_bits"] = rep.nop_driver.total_bits;
  j["nop"]["wire"] = {
      {"delay_ns", rep.nop_wire.delay_ns},
      {"max_bandwidth_hz", rep.nop_wire.max_bandwidth_hz},
      {"effective_bandwidth_hz", rep.nop_wire.effective_bandwidth_hz},
      {"clamped", rep.nop_wire.clamped},
  };
  j["nop"]["area"] = {
      {"txrx_um2", rep.nop_area_breakdown.txrx_um2},
      {"clocking_um2", rep.nop_area_breakdown.clocking_um2},
      {"routers_um2", rep.nop_area_breakdown.routers_um2},
      {"wiring_um2", rep.nop_area_breakdown.wiring_um2},
      {"total_um2", rep.nop_area_breakdown.total_um2},
      {"links", rep.nop_area_breakdown.links},
  };
  ordered_json grid = ordered_json::array();
  for (const GridPos& p : rep.placement.chiplets) {
    grid.push_back({{"x", p.x}, {"y", p.y}});
  }
  j["nop"]["placement"] = {
      {"grid_width", rep.placement.grid_width},
      {"grid_height", rep.placement.grid_height},
      {"chiplets", grid},
  };

  j["dram"] = {
      {"weight_bytes", rep.dram.weight_bytes},
      {"transactions", rep.dram.transactions},
      {"simulated_transactions", rep.dram.simulated_transactions},
      {"row_activations", rep.dram.row_activations},
      {"latency_ns", rep.dram.latency_ns},
      {"energy_pj", rep.dram.energy_pj},
      {"edp_pj_ns", rep.dram.energy_pj * rep.dram.latency_ns},
      {"chunk_fraction", rep.config.dram.chunk_fraction},
      {"included_in_totals", rep.config.dram.include_in_totals},
  };

  j["cost"] = {
      {"chiplet_die_area_mm2", rep.cost.chiplet_die_area_mm2},
      {"monolithic_die_area_mm2", rep.cost.monolithic_die_area_mm2},
      {"chiplet_count", rep.cost.chiplet_count},
      {"chiplet_cost_wafers", rep.cost.chiplet_cost},
      {"monolithic_cost_wafers", rep.cost.monolithic_cost},
      {"improvement_percent", rep.cost.improvement_percent},
  };

  ordered_json per_layer = ordered_json::array();
  for (const LayerPerf& lp : rep.per_layer) {
    per_layer.push_back({
        {"name", lp.name},
        {"chiplets", lp.chiplets},
        {"compute_latency_ns", lp.compute_latency_ns},
        {"accumulator_transfer_ns", lp.accumulator_transfer_ns},
        {"accumulator_latency_ns", lp.accumulator_latency_ns},
        {"noc_latency_ns", lp.noc_latency_ns},
        {"nop_latency_ns", lp.nop_latency_ns},
        {"latency_ns", lp.latency_ns},
        {"compute_energy_pj", lp.compute_energy_pj},
        {"accumulator_energy_pj", lp.accumulator_energy_pj},
        {"noc_energy_pj", lp.noc_energy_pj},
        {"nop_energy_pj", lp.nop_energy_pj},
        {"energy_pj", lp.energy_pj},
    });
  }
  j["per_layer"] = per_layer;

  j["totals"] = {
      {"area_mm2", rep.totals.area_mm2},
      {"latency_ns", rep.totals.latency_ns},
      {"energy_pj", rep.totals.energy_pj},
      {"leakage_energy_pj", rep.totals.leakage_energy_pj},
      {"power_mw", rep.totals.power_mw},
      {"edp_pj_ns", rep.totals.edp_pj_ns},
      {"edap_pj_ns_mm2", rep.totals.edap_pj_ns_mm2},
      {"inferences_per_second", rep.totals.inferences_per_second},
      {"inferences_per_joule", rep.totals.inferences_per_joule},
      {"utilization", rep.mapping.global_utilization},
  };
  return j.dump(2) + "\n";
}

std::vector<SweepPoint> sweep(const Network& net, const HardwareConfig& hw,
                              const std::string& axis,
                              const std::vector<long long>& values) {
  if (axis != "tiles_per_chiplet" && axis != "chiplet_count" &&
      axis != "crossbar_size") {
    throw SimError(ErrorCode::invalid_value,
                   "unknown sweep axis '" + axis +
                       "' (expected tiles_per_chiplet, chiplet_count or "
                       "crossbar_size)");
  }
  std::vector<SweepPoint> points;
  for (long long v : values) {
    SweepPoint pt;
    pt.axis = axis;
    pt.value = v;
    HardwareConfig cfg = hw;
    try {
      if (v < 1) {
        throw SimError(ErrorCode::invalid_value,
                       axis + " must be >= 1, got " + std::to_string(v));
      }
      if (axis == "tiles_per_chiplet") {
        cfg.chiplet.tiles_per_chiplet = int(v);
      } else if (axis == "chiplet_count") {
        cfg.chiplet.structure = ChipletStructure::homogeneous;
        cfg.chiplet.chiplet_count = int(v);
      } else {
        cfg.general.crossbar_rows = int(v);
        cfg.general.crossbar_cols = int(v);
      }
      pt.report = run_pipeline(net, cfg);
      pt.ok = true;
    } catch (const SimError& e) {
      pt.error = e.what();
    }
    points.push_back(std::move(pt));
  }
  return points;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out << "axis,value,ok,chiplets,total_tiles,utilization,area_mm2,latency_ns,"
         "energy_pj,edp_pj_ns,noc_latency_ns,noc_energy_pj,noc_edp,"
         "nop_latency_ns,nop_energy_pj,nop_edp,improvement_percent,error\n";
  out.precision(12);
  for (const SweepPoint& pt : points) {
    out << pt.axis << ',' << pt.value << ',' << (pt.ok ? 1 : 0) << ',';
    if (pt.ok) {
      const PerfReport& r = pt.report;
      double noc_ns = 0.0, nop_ns = 0.0;
      for (const LayerPerf& lp : r.per_layer) {
        noc_ns += lp.noc_latency_ns;
        nop_ns += lp.nop_latency_ns;
      }
      out << r.mapping.chiplets_used << ',' << r.mapping.total_tiles << ','
          << r.mapping.global_utilization << ',' << r.totals.area_mm2 << ','
          << r.totals.latency_ns << ',' << r.totals.energy_pj << ','
          << r.totals.edp_pj_ns << ',' << noc_ns << ',' << r.noc_energy_pj
          << ',' << noc_ns * r.noc_energy_pj << ',' << nop_ns << ','
          << r.nop_energy_pj << ',' << nop_ns * r.nop_energy_pj << ','
          << r.cost.improvement_percent << ',';
    } else {
      out << ",,,,,,,,,,,,,,";
    }
    // commas inside error messages would break the row
    std::string err = pt.error;
    for (char& ch : err) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out << err << "\n";
  }
  return out.str();
}

}  // namespace chipletsim
