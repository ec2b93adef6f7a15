#pragma once

#include <string>
#include <vector>

#include "chipletsim/circuit.hpp"
#include "chipletsim/cost.hpp"
#include "chipletsim/dram.hpp"
#include "chipletsim/mapping.hpp"
#include "chipletsim/noc.hpp"
#include "chipletsim/nop.hpp"
#include "chipletsim/types.hpp"

namespace chipletsim {

/// Latency/energy contributions of one layer in program order. Transfers of
/// a layer's outputs (on-chip and cross-chiplet) are charged to the
/// producing layer, matching the sequential dataflow.
struct LayerPerf {
  std::string name;
  int chiplets = 0;
  double compute_latency_ns = 0.0;
  double accumulator_transfer_ns = 0.0;  // streaming partial sums off-die
  double accumulator_latency_ns = 0.0;   // serialized adds
  double noc_latency_ns = 0.0;           // on-chip delivery of outputs
  double nop_latency_ns = 0.0;           // cross-chiplet delivery of outputs
  double latency_ns = 0.0;               // sum of the above
  double compute_energy_pj = 0.0;
  double accumulator_energy_pj = 0.0;    // adds + global buffer traffic
  double noc_energy_pj = 0.0;
  double nop_energy_pj = 0.0;            // router hops + TX/RX drivers
  double energy_pj = 0.0;                // sum of the above
};

/// Aggregate figures of merit for one inference.
struct Totals {
  double area_mm2 = 0.0;
  double latency_ns = 0.0;
  double energy_pj = 0.0;  // dynamic + leakage; DRAM excluded by default
  double leakage_energy_pj = 0.0;
  double power_mw = 0.0;
  double edp_pj_ns = 0.0;
  double edap_pj_ns_mm2 = 0.0;
  double inferences_per_second = 0.0;
  double inferences_per_joule = 0.0;
};

/// Everything one pipeline run produces.
struct PerfReport {
  HardwareConfig config;
  MappingResult mapping;
  TrafficSummary traffic;
  CircuitReport circuit;
  Placement placement;
  SimStats noc_stats;  // summed over per-chiplet, per-layer simulations
  SimStats nop_stats;  // summed over per-layer package simulations
  WireTiming nop_wire;
  DriverEnergy nop_driver;
  NopArea nop_area_breakdown;
  DramReport dram;
  ArchitectureCost cost;
  std::vector<LayerPerf> per_layer;
  double noc_energy_pj = 0.0;
  double nop_energy_pj = 0.0;  // router hops + driver energy
  Totals totals;
};

/// Run the full pipeline: partition, then circuit / interconnect / package /
/// DRAM engines (concurrently when asked — results are identical either
/// way), then compose per-layer latency and energy sequentially.
PerfReport run_pipeline(const Network& net, const HardwareConfig& hw,
                        bool concurrent_engines = true);

/// Deterministic JSON rendering of a report (stable key order, fixed
/// formatting, no environment-dependent fields).
std::string report_to_json(const PerfReport& report);

/// One row of a sweep: the axis value, the report (when the run succeeded)
/// and the error message (when it failed). Failed points do not abort the
/// sweep.
struct SweepPoint {
  std::string axis;
  long long value = 0;
  bool ok = false;
  std::string error;
  PerfReport report;
};

/// Re-run the pipeline for each value of `axis` (tiles_per_chiplet,
/// chiplet_count or crossbar_size).
std::vector<SweepPoint> sweep(const Network& net, const HardwareConfig& hw,
                              const std::string& axis,
                              const std::vector<long long>& values);

/// Plot-ready CSV over sweep points (one row per point, errors in-row).
std::string sweep_csv(const std::vector<SweepPoint>& points);

}  // namespace chipletsim
