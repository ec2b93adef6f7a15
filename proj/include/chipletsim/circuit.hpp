#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chipletsim/mapping.hpp"
#include "chipletsim/types.hpp"

namespace chipletsim {

/// Cost of a single crossbar plus its read periphery (ADCs, column mux,
/// shift-and-add), under the configured readout mode.
struct CrossbarUnit {
  int adc_count = 0;          // ADC instances per crossbar
  double area_um2 = 0.0;      // array + ADCs + mux + shift-add
  double read_energy_pj = 0.0;   // one full matrix-vector read
  double read_latency_ns = 0.0;  // one full matrix-vector read
};

/// Per-layer circuit estimate.
struct LayerCircuit {
  std::string name;
  double passes = 0.0;  // bit-serial activation passes per crossbar
  PerfTriple compute;   // crossbars + tile periphery, allocated-area basis
  PerfTriple global_accumulator;  // cross-chiplet partial-sum merging
  double global_buffer_energy_pj = 0.0;
};

/// Whole-network circuit report (interconnect handled separately).
struct CircuitReport {
  std::vector<LayerCircuit> layers;
  PerfTriple compute_total;
  PerfTriple global_accumulator_total;
  double global_buffer_energy_pj = 0.0;
  double leakage_power_uw = 0.0;  // static power of all instantiated parts

  // compute + accumulator + buffer dynamic energy (no leakage)
  double dynamic_energy_pj() const {
    return compute_total.energy_pj + global_accumulator_total.energy_pj +
           global_buffer_energy_pj;
  }
};

/// Area/energy/latency of one crossbar with read periphery.
CrossbarUnit estimate_crossbar_unit(const GeneralConfig& general,
                                    const ComponentCostLibrary& lib);

/// Bit-serial passes a layer performs per crossbar: one pass per output
/// activation row per activation bit.
double layer_passes(const Network& net, std::size_t idx,
                    const GeneralConfig& general);

/// Circuit estimate for one mapped layer (no interconnect, no global parts).
PerfTriple estimate_layer_circuit(const LayerSpec& layer,
                                  const LayerMapping& mapping,
                                  std::int64_t output_acts,
                                  const HardwareConfig& hw);

/// Global accumulator contribution of one layer: `adds` partial-sum
/// additions serialized at the accumulator width, clocked at the core clock.
PerfTriple estimate_global_accumulator(std::int64_t adds,
                                       const HardwareConfig& hw);

/// Full circuit report for a mapped network.
CircuitReport circuit_report(const Network& net, const MappingResult& map,
                             const TrafficSummary& traffic,
                             const HardwareConfig& hw);

/// Die area of one chiplet: all tiles (allocated or not), shared pooling and
/// activation units, the intra-chiplet mesh, and the package-interface
/// circuits (TX/RX, clocking, NoP router port).
double chiplet_die_area_um2(const HardwareConfig& hw);

/// Die area of a monolithic chip holding `total_tiles` tiles plus its mesh.
/// No package-interface circuits: there is no network on package.
double monolithic_die_area_um2(const HardwareConfig& hw,
                               std::int64_t total_tiles);

/// Static (leakage) power of the full system in microwatts.
double system_leakage_uw(const HardwareConfig& hw, const MappingResult& map);

}  // namespace chipletsim
