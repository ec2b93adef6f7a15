#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chipletsim {

enum class LayerKind { conv, fc };
enum class PoolKind { none, max, avg };

// One row of the network description. `activations` is the number of input
// activations the layer consumes per inference (H*W*C for conv, Nif for fc).
struct LayerSpec {
  std::string name;
  LayerKind kind = LayerKind::conv;
  int kx = 1;
  int ky = 1;
  int nif = 1;
  int nof = 1;
  std::int64_t activations = 0;
  double sparsity = 0.0;  // fraction of zero input activations, [0, 1)
  std::string input_from;  // optional branch source, names an earlier layer
  PoolKind pool = PoolKind::none;

  bool operator==(const LayerSpec&) const = default;
};

using Network = std::vector<LayerSpec>;

enum class CellType { rram, sram };
enum class ReadoutMode { parallel, sequential };
enum class ChipMode { chiplet, monolithic };
enum class ChipletStructure { custom, homogeneous };
enum class NocTopology { mesh, htree };
enum class NopEnergyMode { activation_bits, bus_bits };

struct GeneralConfig {
  int weight_precision = 8;       // bits per weight
  int activation_precision = 8;   // bits per activation
  CellType cell_type = CellType::rram;
  int bits_per_cell = 1;
  int crossbar_rows = 128;
  int crossbar_cols = 128;
  int adc_resolution = 4;         // bits
  int columns_per_adc = 8;        // columns multiplexed onto one ADC
  double clock_frequency_hz = 1e9;
  ReadoutMode readout = ReadoutMode::parallel;
  bool overlap_nop_compute = false;
  double wafer_diameter_mm = 300.0;
  double defect_density_per_mm2 = 0.012;
  double packaging_cost_fraction = 0.10;  // adder on summed die cost

  bool operator==(const GeneralConfig&) const = default;
};

struct ChipletConfig {
  ChipMode mode = ChipMode::chiplet;
  ChipletStructure structure = ChipletStructure::custom;
  int chiplet_count = 0;  // fabricated chiplets, required iff homogeneous
  int crossbars_per_tile = 16;
  int tiles_per_chiplet = 16;
  int global_accumulator_width = 16;  // partial-sum adds per cycle
  bool sharing = true;  // let a layer reuse the previous layer's tail chiplet

  // crossbars per chiplet
  std::int64_t size() const {
    return std::int64_t(crossbars_per_tile) * tiles_per_chiplet;
  }

  bool operator==(const ChipletConfig&) const = default;
};

struct NocConfig {
  NocTopology topology = NocTopology::mesh;
  int flit_width = 32;   // bits moved per flit
  int buffer_depth = 4;  // flits per router input FIFO
  int router_pipeline = 2;  // cycles per router traversal
  int link_latency = 1;     // cycles per link traversal
  double frequency_hz = 1e9;
  int packet_flits = 1;
  double node_pitch_mm = 0.25;  // tile-to-tile link length
  std::int64_t deadlock_cycles = 100000;  // watchdog threshold

  bool operator==(const NocConfig&) const = default;
};

struct NopConfig {
  double frequency_hz = 250e6;  // target interconnect clock
  int channel_width = 32;       // lanes per inter-chiplet link
  double energy_per_bit_pj = 0.54;
  double txrx_area_um2 = 5304.0;      // driver pair, per chiplet
  double clocking_area_um2 = 10609.0;  // per chiplet
  double wire_length_mm = 2.0;
  double wire_resistance_ohm_per_mm = 50.0;
  double wire_capacitance_ff_per_mm = 200.0;
  double wire_pitch_um = 10.0;  // shielded signal pitch on the package
  int router_pipeline = 2;
  int link_latency = 1;
  int buffer_depth = 4;
  // activation_bits: energy scales with packets * activation_precision;
  // bus_bits: with packets * channel_width (the physically clocked bits).
  NopEnergyMode energy_mode = NopEnergyMode::activation_bits;

  bool operator==(const NopConfig&) const = default;
};

struct DramConfig {
  std::string standard = "DDR4";
  double clock_mhz = 1200.0;
  int burst_bytes = 64;
  int burst_cycles = 4;  // data-bus cycles per burst
  int trcd = 17;         // activate-to-read, cycles
  int tcas = 17;         // read-to-data, cycles
  int trp = 17;          // precharge, cycles
  int row_bytes = 8192;  // bytes streamed per row activation
  double energy_activate_pj = 2000.0;
  double energy_read_pj = 500.0;  // per burst
  double energy_precharge_pj = 800.0;
  double background_power_mw = 100.0;
  bool include_in_totals = false;
  double chunk_fraction = 1.0;  // fraction of transactions actually simulated

  bool operator==(const DramConfig&) const = default;
};

struct ComponentCost {
  double area_um2 = 0.0;
  double energy_pj = 0.0;   // per operation (read, conversion, access, flit...)
  double latency_ns = 0.0;  // per operation, where meaningful
  double leakage_uw = 0.0;

  bool operator==(const ComponentCost&) const = default;
};

// Fixed set of circuit building blocks the estimators compose over.
class ComponentCostLibrary {
 public:
  static const std::vector<std::string>& component_names();
  static ComponentCostLibrary defaults();

  // Throws SimError(missing_component) when no entry exists.
  const ComponentCost& at(const std::string& name) const;
  void set(const std::string& name, const ComponentCost& cost);
  bool has(const std::string& name) const;
  const std::map<std::string, ComponentCost>& entries() const { return entries_; }

  bool operator==(const ComponentCostLibrary&) const = default;

 private:
  std::map<std::string, ComponentCost> entries_;
};

struct HardwareConfig {
  GeneralConfig general;
  ChipletConfig chiplet;
  NocConfig noc;
  NopConfig nop;
  DramConfig dram;
  ComponentCostLibrary components;

  bool operator==(const HardwareConfig&) const = default;
};

// Area in um^2, energy in pJ, latency in ns, everywhere.
struct PerfTriple {
  double area_um2 = 0.0;
  double energy_pj = 0.0;
  double latency_ns = 0.0;

  PerfTriple& operator+=(const PerfTriple& o) {
    area_um2 += o.area_um2;
    energy_pj += o.energy_pj;
    latency_ns += o.latency_ns;
    return *this;
  }
  bool operator==(const PerfTriple&) const = default;
};

}  // namespace chipletsim
