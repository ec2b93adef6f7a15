#include "chipletsim/circuit.hpp"
#include "chipletsim/errors.hpp"
#include "chipletsim/ingest.hpp"
#include "chipletsim/mapping.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace chipletsim;

// Hand-computed unit figures at the default 32nm-class library:
//   16 ADCs per 128-column crossbar (8 columns share one ADC)
//   area    = 800 + 16*60 + 25 + 120           = 1905 um^2
//   latency = 1.0 + 8*0.8 + 0.05 + 0.1          = 7.55 ns   (parallel read)
//   energy  = 1.2 + (128*0.05 + 0.01 + 0.02)    = 7.63 pJ   (parallel read)
TEST_CASE("crossbar unit: parallel readout figures") {
  const HardwareConfig hw = testutil::default_hw();
  const CrossbarUnit u = estimate_crossbar_unit(hw.general, hw.components);
  CHECK(u.adc_count == 16);
  CHECK(u.area_um2 == doctest::Approx(1905.0));
  CHECK(u.read_latency_ns == doctest::Approx(7.55));
  CHECK(u.read_energy_pj == doctest::Approx(7.63));
}

TEST_CASE("crossbar unit: sequential readout pays per row") {
  HardwareConfig hw = testutil::default_hw();
  hw.general.readout = ReadoutMode::sequential;
  const CrossbarUnit u = estimate_crossbar_unit(hw.general, hw.components);
  CHECK(u.area_um2 == doctest::Approx(1905.0));  // same silicon
  CHECK(u.read_latency_ns == doctest::Approx(128 * 7.55));   // 966.4
  CHECK(u.read_energy_pj == doctest::Approx(1.2 + 128 * 6.43));  // 824.24
}

TEST_CASE("crossbar unit: fewer columns per ADC buys latency with area") {
  HardwareConfig hw = testutil::default_hw();
  hw.general.columns_per_adc = 4;  // 32 ADCs
  const CrossbarUnit u = estimate_crossbar_unit(hw.general, hw.components);
  CHECK(u.adc_count == 32);
  CHECK(u.area_um2 == doctest::Approx(800 + 32 * 60 + 25 + 120));
  CHECK(u.read_latency_ns == doctest::Approx(1.0 + 4 * 0.8 + 0.05 + 0.1));
}

TEST_CASE("layer passes: output rows times activation bits") {
  const Network net = testutil::small_net();
  const HardwareConfig hw = testutil::default_hw();
  // conv1 produces conv2's 256 inputs over 64 filters: 4 rows * 8 bits
  CHECK(layer_passes(net, 0, hw.general) == doctest::Approx(256.0 / 64 * 8));
  // last layer: one output row, 8 bit-serial passes
  CHECK(layer_passes(net, 2, hw.general) == doctest::Approx(8.0));
}

TEST_CASE("layer circuit: energy/latency/area composition") {
  const HardwareConfig hw = testutil::default_hw();
  LayerSpec l = testutil::layer("x", LayerKind::conv, 3, 3, 64, 128, 256);

  LayerMapping lm;
  lm.name = "x";
  lm.demand = crossbars_for_layer(l, hw.general, hw.chiplet);
  REQUIRE(lm.demand.total == 40);
  REQUIRE(lm.demand.tiles == 3);
  ChipletSlice s;
  s.tiles = 3;
  s.crossbars = 40;
  lm.slices.push_back(s);  // area is charged for the allocated tiles

  // passes = (128 outputs / 128 filters) * 8 bits = 8
  const PerfTriple t = estimate_layer_circuit(l, lm, 128, hw);
  // 40 xb * 7.63 pJ * 8 passes            = 2441.6
  // tile accumulation 0.04 * 40 * 8       = 12.8
  // buffer 0.08 * (256 in + 128 out)      = 30.72
  // activation 0.02 * 128                 = 2.56
  CHECK(t.energy_pj == doctest::Approx(2487.68));
  CHECK(t.latency_ns == doctest::Approx(8 * 7.55));
  // 3 tiles * (16*1905 + 9000 + 2500) um^2
  CHECK(t.area_um2 == doctest::Approx(3 * 41980.0));
}

TEST_CASE("layer circuit: sparsity skips compute but not outputs") {
  const HardwareConfig hw = testutil::default_hw();
  LayerSpec l = testutil::layer("x", LayerKind::conv, 3, 3, 64, 128, 256, 0.5);
  LayerMapping lm;
  lm.demand = crossbars_for_layer(l, hw.general, hw.chiplet);

  const PerfTriple t = estimate_layer_circuit(l, lm, 128, hw);
  // crossbar + tile-accumulator work halves; output-side costs stay
  // 0.5*(2441.6 + 12.8) + 0.08*(128 + 128) + 2.56
  CHECK(t.energy_pj == doctest::Approx(1250.24));
  CHECK(t.latency_ns == doctest::Approx(8 * 7.55));  // dataflow unchanged
}

TEST_CASE("layer circuit: pooling adds a per-output charge when declared") {
  const HardwareConfig hw = testutil::default_hw();
  LayerSpec l = testutil::layer("x", LayerKind::conv, 3, 3, 64, 128, 256);
  LayerMapping lm;
  lm.demand = crossbars_for_layer(l, hw.general, hw.chiplet);
  const double plain = estimate_layer_circuit(l, lm, 128, hw).energy_pj;
  l.pool = PoolKind::max;
  const double pooled = estimate_layer_circuit(l, lm, 128, hw).energy_pj;
  CHECK(pooled - plain == doctest::Approx(0.05 * 128));
}

TEST_CASE("global accumulator: adds serialized at the accumulator width") {
  const HardwareConfig hw = testutil::default_hw();
  const PerfTriple t = estimate_global_accumulator(1000, hw);
  CHECK(t.energy_pj == doctest::Approx(100.0));       // 1000 * 0.1
  CHECK(t.latency_ns == doctest::Approx(63.0));       // ceil(1000/16) @ 1GHz
  CHECK(t.area_um2 == doctest::Approx(30000.0));
  const PerfTriple none = estimate_global_accumulator(0, hw);
  CHECK(none.energy_pj == 0.0);
  CHECK(none.area_um2 == 0.0);
}

TEST_CASE("circuit report: per-layer and total composition") {
  Network net = testutil::small_net();
  HardwareConfig hw = testutil::default_hw();
  hw.chiplet.structure = ChipletStructure::homogeneous;
  hw.chiplet.chiplet_count = 4;
  hw.chiplet.tiles_per_chiplet = 2;  // conv2 splits in two
  const MappingResult map = partition_network(net, hw);
  const TrafficSummary tr = traffic_summary(net, map, hw);
  const CircuitReport rep = circuit_report(net, map, tr, hw);

  REQUIRE(rep.layers.size() == 3);
  // conv2 merges 2048 partial outputs from its second slice
  CHECK(rep.layers[1].global_accumulator.energy_pj ==
        doctest::Approx(2048 * 0.1));
  CHECK(rep.layers[1].global_accumulator.latency_ns ==
        doctest::Approx(128.0));  // 2048/16 adds per cycle @ 1 GHz
  CHECK(rep.layers[1].global_buffer_energy_pj ==
        doctest::Approx(2048 * 3 * 0.15));
  CHECK(rep.layers[0].global_accumulator.energy_pj == 0.0);

  PerfTriple sum;
  double buffer = 0.0;
  for (const LayerCircuit& lc : rep.layers) {
    sum += lc.compute;
    buffer += lc.global_buffer_energy_pj;
  }
  CHECK(rep.compute_total.energy_pj == doctest::Approx(sum.energy_pj));
  CHECK(rep.compute_total.latency_ns == doctest::Approx(sum.latency_ns));
  CHECK(rep.compute_total.area_um2 == doctest::Approx(sum.area_um2));
  CHECK(rep.global_buffer_energy_pj == doctest::Approx(buffer));
  CHECK(rep.dynamic_energy_pj() ==
        doctest::Approx(rep.compute_total.energy_pj +
                        rep.global_accumulator_total.energy_pj +
                        rep.global_buffer_energy_pj));
  // one shared accumulator instance, counted once
  CHECK(rep.global_accumulator_total.area_um2 == doctest::Approx(30000.0));
}

TEST_CASE("die areas: chiplet and monolithic hand values") {
  const HardwareConfig hw = testutil::default_hw();
  // 16 tiles * 41980 + pooling 2400 + activation 1500
  // + mesh (16 routers * 12000 + 24 links * 6400 * 0.25mm)
  // + package interface (5304 + 10609 + 50000)
  CHECK(chiplet_die_area_um2(hw) == doctest::Approx(971893.0));

  // 145 tiles on a 13x12 grid: 287 links
  CHECK(monolithic_die_area_um2(hw, 145) == doctest::Approx(8290200.0));
  // 43 tiles on a 7x7 grid: 84 links
  CHECK(monolithic_die_area_um2(hw, 43) == doctest::Approx(2459440.0));
}

TEST_CASE("system leakage: per-die parts plus shared merge logic") {
  Network net = testutil::small_net();
  HardwareConfig hw = testutil::default_hw();
  hw.chiplet.structure = ChipletStructure::homogeneous;
  hw.chiplet.chiplet_count = 4;
  hw.chiplet.tiles_per_chiplet = 2;
  const MappingResult map = partition_network(net, hw);

  // tile leakage: 16*(2 + 16*1.5 + 0.1 + 0.5) + 15 + 4 = 444.6 uW
  // per die: 2 tiles + pool 3 + act 2 + mesh(2 routers*8 + 1 link*0.25)
  //          + package router 20 = 930.45 uW
  // 4 fabricated dies + shared accumulator 25 + buffer 60
  CHECK(system_leakage_uw(hw, map) == doctest::Approx(4 * 930.45 + 85.0));

  // single-slice mapping drops the shared merge logic
  HardwareConfig flat = testutil::default_hw();
  const MappingResult flat_map = partition_network(net, flat);
  const double per_die =
      16 * 444.6 + 3 + 2 + (16 * 8 + 24 * 1 * 0.25) + 20;  // 7272.6
  CHECK(system_leakage_uw(flat, flat_map) ==
        doctest::Approx(flat_map.chiplets_used * per_die));
}

TEST_CASE("fixture sanity: one-chip network area matches the die estimator") {
  const Network lenet = parse_network(testutil::fixture("lenet5.csv"));
  HardwareConfig hw = testutil::default_hw();
  hw.chiplet.mode = ChipMode::monolithic;
  const MappingResult map = partition_network(lenet, hw);
  CHECK(map.total_tiles == 43);
  CHECK(monolithic_die_area_um2(hw, map.total_tiles) ==
        doctest::Approx(2459440.0));
}
