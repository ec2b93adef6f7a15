#include "chipletsim/circuit.hpp"

#include <cmath>

#include "chipletsim/errors.hpp"
#include "chipletsim/noc.hpp"

namespace chipletsim {

CrossbarUnit estimate_crossbar_unit(const GeneralConfig& g,
                                    const ComponentCostLibrary& lib) {
  const ComponentCost& arr = lib.at("crossbar_cell_array");
  const ComponentCost& adc = lib.at("adc");
  const ComponentCost& mux = lib.at("column_mux");
  const ComponentCost& sa = lib.at("shift_add");

  CrossbarUnit u;
  u.adc_count = int((g.crossbar_cols + g.columns_per_adc - 1) / g.columns_per_adc);
  u.area_um2 = arr.area_um2 + u.adc_count * adc.area_um2 + mux.area_um2 +
               sa.area_um2;

  // One row read: array access, the muxed columns converted one after the
  // other through the shared ADC, then mux switch and shift-add.
  const double per_row_latency = arr.latency_ns +
                                 g.columns_per_adc * adc.latency_ns +
                                 mux.latency_ns + sa.latency_ns;
  const double per_row_energy = g.crossbar_cols * adc.energy_pj +
                                mux.energy_pj + sa.energy_pj;
  if (g.readout == ReadoutMode::sequential) {
    u.read_latency_ns = g.crossbar_rows * per_row_latency;
    u.read_energy_pj = arr.energy_pj + g.crossbar_rows * per_row_energy;
  } else {
    u.read_latency_ns = per_row_latency;
    u.read_energy_pj = arr.energy_pj + per_row_energy;
  }
  return u;
}

double layer_passes(const Network& net, std::size_t idx,
                    const GeneralConfig& general) {
  const std::int64_t a_out = output_activations(net, idx);
  return double(a_out) / double(net[idx].nof) * general.activation_precision;
}

PerfTriple estimate_layer_circuit(const LayerSpec& layer,
                                  const LayerMapping& mapping,
                                  std::int64_t output_acts,
                                  const HardwareConfig& hw) {
  const auto& lib = hw.components;
  const CrossbarUnit unit = estimate_crossbar_unit(hw.general, lib);
  const ComponentCost& buf = lib.at("tile_buffer");
  const ComponentCost& acc = lib.at("tile_accumulator");
  const ComponentCost& pool = lib.at("pooling_unit");
  const ComponentCost& act = lib.at("activation_unit");

  const double passes = double(output_acts) / double(layer.nof) *
                        hw.general.activation_precision;
  const double dense = 1.0 - layer.sparsity;
  const double used_xb = double(mapping.demand.total);

  PerfTriple t;
  // All crossbars of the layer fire in parallel; passes serialize.
  t.latency_ns = passes * unit.read_latency_ns;
  t.energy_pj = used_xb * unit.read_energy_pj * passes * dense   // reads
                + acc.energy_pj * used_xb * passes * dense       // merge
                + buf.energy_pj * (double(layer.activations) * dense +
                                   double(output_acts))          // staging
                + act.energy_pj * double(output_acts);
  if (layer.pool != PoolKind::none) {
    t.energy_pj += pool.energy_pj * double(output_acts);
  }
  // Area follows allocation: every tile set aside for the layer, full.
  std::int64_t allocated_tiles = 0;
  for (const auto& s : mapping.slices) allocated_tiles += s.tiles;
  const double per_tile =
      double(hw.chiplet.crossbars_per_tile) * unit.area_um2 + buf.area_um2 +
      acc.area_um2;
  t.area_um2 = double(allocated_tiles) * per_tile;
  return t;
}

PerfTriple estimate_global_accumulator(std::int64_t adds,
                                       const HardwareConfig& hw) {
  PerfTriple t;
  if (adds <= 0) return t;
  const ComponentCost& ga = hw.components.at("global_accumulator_per_add");
  t.energy_pj = double(adds) * ga.energy_pj;
  const std::int64_t width = hw.chiplet.global_accumulator_width;
  const std::int64_t cycles = (adds + width - 1) / width;
  t.latency_ns = double(cycles) * 1e9 / hw.general.clock_frequency_hz;
  t.area_um2 = ga.area_um2;  // one accumulator instance serves the package
  return t;
}

CircuitReport circuit_report(const Network& net, const MappingResult& map,
                             const TrafficSummary& traffic,
                             const HardwareConfig& hw) {
  CircuitReport rep;
  const ComponentCost& gbuf = hw.components.at("global_buffer_per_access");
  for (size_t i = 0; i < net.size(); ++i) {
    LayerCircuit lc;
    lc.name = net[i].name;
    lc.passes = layer_passes(net, i, hw.general);
    const std::int64_t a_out = output_activations(net, i);
    lc.compute = estimate_layer_circuit(net[i], map.layers[i], a_out, hw);
    lc.global_accumulator =
        estimate_global_accumulator(traffic.accumulator_adds[i], hw);
    lc.global_buffer_energy_pj =
        double(traffic.global_buffer_accesses[i]) * gbuf.energy_pj;

    rep.compute_total += lc.compute;
    rep.global_accumulator_total.energy_pj += lc.global_accumulator.energy_pj;
    rep.global_accumulator_total.latency_ns += lc.global_accumulator.latency_ns;
    rep.global_buffer_energy_pj += lc.global_buffer_energy_pj;
    rep.layers.push_back(std::move(lc));
  }
  // One accumulator + one buffer instance at package level.
  bool any_adds = false;
  for (auto a : traffic.accumulator_adds) any_adds |= a > 0;
  if (any_adds) {
    rep.global_accumulator_total.area_um2 =
        hw.components.at("global_accumulator_per_add").area_um2;
  }
  rep.leakage_power_uw = system_leakage_uw(hw, map);
  return rep;
}

namespace {

// Leakage and area of the per-tile circuit block.
double tile_area_um2(const HardwareConfig& hw) {
  const CrossbarUnit unit = estimate_crossbar_unit(hw.general, hw.components);
  return double(hw.chiplet.crossbars_per_tile) * unit.area_um2 +
         hw.components.at("tile_buffer").area_um2 +
         hw.components.at("tile_accumulator").area_um2;
}

double tile_leakage_uw(const HardwareConfig& hw) {
  const auto& lib = hw.components;
  const GeneralConfig& g = hw.general;
  const int n_adc = (g.crossbar_cols + g.columns_per_adc - 1) / g.columns_per_adc;
  const double per_xb = lib.at("crossbar_cell_array").leakage_uw +
                        n_adc * lib.at("adc").leakage_uw +
                        lib.at("column_mux").leakage_uw +
                        lib.at("shift_add").leakage_uw;
  return double(hw.chiplet.crossbars_per_tile) * per_xb +
         lib.at("tile_buffer").leakage_uw +
         lib.at("tile_accumulator").leakage_uw;
}

}  // namespace

double chiplet_die_area_um2(const HardwareConfig& hw) {
  const auto& lib = hw.components;
  const int tiles = hw.chiplet.tiles_per_chiplet;
  const MeshConfig mesh = noc_mesh_config(hw, tiles);
  const NetworkCost noc = network_cost(tiles, mesh);
  return double(tiles) * tile_area_um2(hw) +
         lib.at("pooling_unit").area_um2 +
         lib.at("activation_unit").area_um2 + noc.area_um2 +
         hw.nop.txrx_area_um2 + hw.nop.clocking_area_um2 +
         lib.at("nop_router").area_um2;
}

double monolithic_die_area_um2(const HardwareConfig& hw,
                               std::int64_t total_tiles) {
  const auto& lib = hw.components;
  const MeshConfig mesh = noc_mesh_config(hw, int(total_tiles));
  const NetworkCost noc = network_cost(int(total_tiles), mesh);
  return double(total_tiles) * tile_area_um2(hw) +
         lib.at("pooling_unit").area_um2 +
         lib.at("activation_unit").area_um2 + noc.area_um2;
}

double system_leakage_uw(const HardwareConfig& hw, const MappingResult& map) {
  const auto& lib = hw.components;
  const double tile_leak = tile_leakage_uw(hw);
  double per_die_tiles = 0.0;
  double dies = 0.0;
  if (map.mode == ChipMode::monolithic) {
    dies = 1.0;
    per_die_tiles = double(map.total_tiles);
  } else {
    dies = double(map.structure == ChipletStructure::homogeneous
                      ? hw.chiplet.chiplet_count
                      : map.chiplets_used);
    per_die_tiles = double(hw.chiplet.tiles_per_chiplet);
  }
  double per_die = per_die_tiles * tile_leak +
                   lib.at("pooling_unit").leakage_uw +
                   lib.at("activation_unit").leakage_uw;
  // mesh routers and links
  const int tiles = int(per_die_tiles);
  const MeshConfig mesh = noc_mesh_config(hw, tiles);
  const NetworkCost noc = network_cost(tiles, mesh);
  per_die += noc.routers * lib.at("noc_router").leakage_uw +
             noc.links * lib.at("noc_link_per_mm").leakage_uw *
                 hw.noc.node_pitch_mm;
  if (map.mode != ChipMode::monolithic) {
    per_die += lib.at("nop_router").leakage_uw;
  }
  double total = dies * per_die;
  bool multi = false;
  for (const auto& l : map.layers) multi |= l.slices.size() > 1;
  if (multi) {
    total += lib.at("global_accumulator_per_add").leakage_uw +
             lib.at("global_buffer_per_access").leakage_uw;
  }
  return total;
}

}  // namespace chipletsim
