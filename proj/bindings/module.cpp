// Python bindings: the main simulator operations, JSON-in/JSON-out so the
// python layer stays a thin veneer (see python/chipletsim/__init__.py).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "chipletsim/cost.hpp"
#include "chipletsim/errors.hpp"
#include "chipletsim/ingest.hpp"
#include "chipletsim/mapping.hpp"
#include "chipletsim/noc.hpp"
#include "chipletsim/pipeline.hpp"

namespace py = pybind11;
using namespace chipletsim;

namespace {

HardwareConfig config_from(const std::string& path, const std::string& text) {
  if (!path.empty()) return parse_config(path);
  if (!text.empty()) return parse_config_text(text, "<config>");
  HardwareConfig hw;
  hw.components = ComponentCostLibrary::defaults();
  return hw;
}

std::string run_json(const std::string& network_path,
                     const std::string& config_path, bool concurrent) {
  const Network net = parse_network(network_path);
  return report_to_json(run_pipeline(net, config_from(config_path, ""), concurrent));
}

std::string run_text_json(const std::string& network_text,
                          const std::string& config_text, bool concurrent) {
  const Network net = parse_network_text(network_text, "<network>");
  return report_to_json(run_pipeline(net, config_from("", config_text), concurrent));
}

std::string sweep_csv_files(const std::string& network_path,
                            const std::string& config_path,
                            const std::string& axis,
                            const std::vector<long long>& values) {
  const Network net = parse_network(network_path);
  return sweep_csv(sweep(net, config_from(config_path, ""), axis, values));
}

py::dict simulate_trace_py(const std::string& trace_text, int width,
                           int height, int packet_flits, int buffer_depth) {
  MeshConfig cfg;
  cfg.width = width;
  cfg.height = height;
  cfg.packet_flits = packet_flits;
  cfg.buffer_depth = buffer_depth;
  const SimStats s = simulate_mesh(parse_trace_text(trace_text, "<trace>"), cfg);
  py::dict d;
  d["packets_injected"] = s.packets_injected;
  d["packets_ejected"] = s.packets_ejected;
  d["makespan_cycles"] = s.makespan_cycles;
  d["total_latency_cycles"] = s.total_latency_cycles;
  d["max_packet_latency_cycles"] = s.max_packet_latency_cycles;
  d["flit_hops"] = s.flit_hops;
  return d;
}

std::string generate_trace_py(const std::vector<int>& sources,
                              const std::vector<int>& destinations,
                              long long packets) {
  return serialize_trace(generate_trace(sources, destinations, packets));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "chiplet in-memory-computing accelerator simulator (C++ core)";

  py::register_exception<SimError>(m, "SimError");

  m.def("run_json", &run_json, py::arg("network_path"),
        py::arg("config_path") = std::string(), py::arg("concurrent") = true,
        "Full pipeline over files; returns the report as a JSON string.");
  m.def("run_text_json", &run_text_json, py::arg("network_text"),
        py::arg("config_text") = std::string(), py::arg("concurrent") = true,
        "Full pipeline over in-memory text; returns the report JSON string.");
  m.def("sweep_csv", &sweep_csv_files, py::arg("network_path"),
        py::arg("config_path"), py::arg("axis"), py::arg("values"),
        "Re-run the pipeline over an axis; returns plot-ready CSV.");

  m.def("generate_trace", &generate_trace_py, py::arg("sources"),
        py::arg("destinations"), py::arg("packets") = 1,
        "Cross-product packet trace as serialized text.");
  m.def("simulate_trace", &simulate_trace_py, py::arg("trace_text"),
        py::arg("width"), py::arg("height"), py::arg("packet_flits") = 1,
        py::arg("buffer_depth") = 4,
        "Cycle-accurate mesh simulation of a serialized trace.");

  m.def("chips_per_wafer", &chips_per_wafer, py::arg("diameter_mm"),
        py::arg("area_mm2"));
  m.def(
      "die_yield",
      [](double d0, double area) { return die_yield(d0, area); },
      py::arg("defect_density_per_mm2"), py::arg("area_mm2"));
  m.def(
      "cost_per_good_die",
      [](double diameter, double d0, double area) {
        return cost_per_good_die(WaferSpec{diameter, d0}, area);
      },
      py::arg("diameter_mm"), py::arg("defect_density_per_mm2"),
      py::arg("area_mm2"));
  m.def(
      "normalized_cost",
      [](double ref, double target, double diameter, double d0) {
        return normalized_cost(ref, target, WaferSpec{diameter, d0});
      },
      py::arg("ref_area_mm2"), py::arg("target_area_mm2"),
      py::arg("diameter_mm") = 300.0,
      py::arg("defect_density_per_mm2") = 0.012);

  m.attr("__version__") = "0.1.0";
}
