// sim: command-line front end for the chiplet accelerator simulator.
//
//   sim run    --network net.csv [--config hw.cfg] [--out report.json]
//   sim map    --network net.csv [--config hw.cfg] [--out mapping.json]
//   sim trace  --sources 0,1 --destinations 2,3 [--packets N] [--out t.txt]
//              [--simulate --width W --height H]
//   sim cost   --area MM2 [--ref-area MM2] [--diameter MM] [--defect-density D]
//   sim sweep  --network net.csv --axis AXIS --values 4,9,16 [--out sweep.csv]
//
// Exits 0 on success; structured failures print "error: <Code>: <message>"
// on stderr and exit 1.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "chipletsim/circuit.hpp"
#include "chipletsim/cost.hpp"
#include "chipletsim/errors.hpp"
#include "chipletsim/ingest.hpp"
#include "chipletsim/mapping.hpp"
#include "chipletsim/noc.hpp"
#include "chipletsim/pipeline.hpp"

using namespace chipletsim;

namespace {

HardwareConfig load_config(const std::string& path) {
  if (path.empty()) {
    HardwareConfig hw;
    hw.components = ComponentCostLibrary::defaults();
    return hw;
  }
  return parse_config(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw SimError(ErrorCode::invalid_value,
                   "cannot write output file: " + out_path);
  }
  out << text;
}

std::string mapping_json(const Network& net, const HardwareConfig& hw) {
  const MappingResult map = partition_network(net, hw);
  const TrafficSummary traffic = traffic_summary(net, map, hw);
  nlohmann::ordered_json j;
  j["chiplets_used"] = map.chiplets_used;
  j["total_tiles"] = map.total_tiles;
  j["total_crossbars"] = map.total_crossbars;
  j["global_utilization"] = map.global_utilization;
  j["layers"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < map.layers.size(); ++i) {
    const LayerMapping& lm = map.layers[i];
    nlohmann::ordered_json lj;
    lj["name"] = lm.name;
    lj["crossbars"] = lm.demand.total;
    lj["tiles"] = lm.demand.tiles;
    lj["utilization"] = lm.utilization;
    lj["accumulator_adds"] = traffic.accumulator_adds[i];
    lj["slices"] = nlohmann::ordered_json::array();
    for (const ChipletSlice& s : lm.slices) {
      lj["slices"].push_back({{"chiplet", s.chiplet_id},
                              {"tile_offset", s.tile_offset},
                              {"tiles", s.tiles},
                              {"crossbars", s.crossbars}});
    }
    j["layers"].push_back(std::move(lj));
  }
  j["inter_chiplet_bits"] = traffic.total_inter_chiplet_bits;
  j["intra_chiplet_bits"] = traffic.total_intra_chiplet_bits;
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiplet in-memory-computing accelerator simulator"};
  app.require_subcommand(1);

  std::string network_path, config_path, out_path, axis;
  std::vector<long long> values;
  bool serial = false;

  CLI::App* run = app.add_subcommand("run", "full performance/energy report");
  run->add_option("--network", network_path, "network CSV")->required();
  run->add_option("--config", config_path, "hardware config (INI)");
  run->add_option("--out", out_path, "write report JSON here");
  run->add_flag("--serial", serial, "run analysis engines sequentially");

  CLI::App* map_cmd = app.add_subcommand("map", "partition summary only");
  map_cmd->add_option("--network", network_path, "network CSV")->required();
  map_cmd->add_option("--config", config_path, "hardware config (INI)");
  map_cmd->add_option("--out", out_path, "write mapping JSON here");

  std::vector<int> sources, destinations;
  long long packets = 1;
  bool do_sim = false;
  int width = 0, height = 0;
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "generate (and optionally simulate) a trace");
  trace_cmd->add_option("--sources", sources, "source node ids")
      ->required()
      ->delimiter(',');
  trace_cmd->add_option("--destinations", destinations, "destination node ids")
      ->required()
      ->delimiter(',');
  trace_cmd->add_option("--packets", packets, "packets per source/dest pair");
  trace_cmd->add_option("--out", out_path, "write the trace text here");
  trace_cmd->add_flag("--simulate", do_sim, "run the trace through a mesh");
  trace_cmd->add_option("--width", width, "mesh width (with --simulate)");
  trace_cmd->add_option("--height", height, "mesh height (with --simulate)");

  double area = 0.0, ref_area = 0.0, diameter = 300.0, defect = 0.012;
  CLI::App* cost_cmd = app.add_subcommand("cost", "wafer economics for a die");
  cost_cmd->add_option("--area", area, "die area in mm^2")->required();
  cost_cmd->add_option("--ref-area", ref_area,
                       "normalize against this die area");
  cost_cmd->add_option("--diameter", diameter, "wafer diameter in mm");
  cost_cmd->add_option("--defect-density", defect, "defects per mm^2");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "re-run over a value axis");
  sweep_cmd->add_option("--network", network_path, "network CSV")->required();
  sweep_cmd->add_option("--config", config_path, "hardware config (INI)");
  sweep_cmd
      ->add_option("--axis", axis,
                   "tiles_per_chiplet | chiplet_count | crossbar_size")
      ->required();
  sweep_cmd->add_option("--values", values, "axis values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--out", out_path, "write sweep CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const Network net = parse_network(network_path);
      const HardwareConfig hw = load_config(config_path);
      emit(report_to_json(run_pipeline(net, hw, !serial)), out_path);
    } else if (map_cmd->parsed()) {
      const Network net = parse_network(network_path);
      const HardwareConfig hw = load_config(config_path);
      emit(mapping_json(net, hw), out_path);
    } else if (trace_cmd->parsed()) {
      const Trace trace = generate_trace(sources, destinations, packets);
      emit(serialize_trace(trace), out_path);
      if (do_sim) {
        if (width < 1 || height < 1) {
          throw SimError(ErrorCode::invalid_value,
                         "--simulate needs --width and --height");
        }
        MeshConfig cfg;
        cfg.width = width;
        cfg.height = height;
        const SimStats s = simulate_mesh(trace, cfg);
        nlohmann::ordered_json j;
        j["packets_injected"] = s.packets_injected;
        j["packets_ejected"] = s.packets_ejected;
        j["makespan_cycles"] = s.makespan_cycles;
        j["total_latency_cycles"] = s.total_latency_cycles;
        j["max_packet_latency_cycles"] = s.max_packet_latency_cycles;
        j["flit_hops"] = s.flit_hops;
        std::cerr << j.dump(2) << "\n";
      }
    } else if (cost_cmd->parsed()) {
      const WaferSpec wafer{diameter, defect};
      nlohmann::ordered_json j;
      j["wafer_diameter_mm"] = diameter;
      j["defect_density_per_mm2"] = defect;
      j["area_mm2"] = area;
      j["chips_per_wafer"] = chips_per_wafer(diameter, area);
      j["yield"] = die_yield(defect, area);
      j["cost_per_good_die_wafers"] = cost_per_good_die(wafer, area);
      if (ref_area > 0.0) {
        j["ref_area_mm2"] = ref_area;
        j["normalized_cost"] = normalized_cost(ref_area, area, wafer);
      }
      emit(j.dump(2) + "\n", out_path);
    } else if (sweep_cmd->parsed()) {
      const Network net = parse_network(network_path);
      const HardwareConfig hw = load_config(config_path);
      emit(sweep_csv(sweep(net, hw, axis, values)), out_path);
    }
  } catch (const SimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
