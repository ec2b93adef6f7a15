#include "chipletsim/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "chipletsim/errors.hpp"

namespace chipletsim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_row: return "MalformedRow";
    case ErrorCode::invalid_value: return "InvalidValue";
    case ErrorCode::empty_network: return "EmptyNetwork";
    case ErrorCode::unknown_key: return "UnknownKey";
    case ErrorCode::missing_required_key: return "MissingRequiredKey";
    case ErrorCode::inconsistent_mode: return "InconsistentMode";
    case ErrorCode::chiplet_budget_exceeded: return "ChipletBudgetExceeded";
    case ErrorCode::missing_component: return "MissingComponent";
    case ErrorCode::node_out_of_range: return "NodeOutOfRange";
    case ErrorCode::deadlock_detected: return "DeadlockDetected";
    case ErrorCode::area_too_large: return "AreaTooLarge";
  }
  return "UnknownError";
}

const std::vector<std::string>& ComponentCostLibrary::component_names() {
  static const std::vector<std::string> names = {
      "crossbar_cell_array", "adc", "column_mux", "shift_add",
      "tile_buffer", "tile_accumulator", "pooling_unit", "activation_unit",
      "global_accumulator_per_add", "global_buffer_per_access",
      "noc_router", "noc_link_per_mm", "nop_router",
  };
  return names;
}

ComponentCostLibrary ComponentCostLibrary::defaults() {
  // Illustrative 32nm-class constants. Stream units (buffers, pooling,
  // activation) carry zero latency: their work overlaps crossbar readout.
  ComponentCostLibrary lib;
  lib.set("crossbar_cell_array", {800.0, 1.2, 1.0, 2.0});
  lib.set("adc", {60.0, 0.05, 0.8, 1.5});
  lib.set("column_mux", {25.0, 0.01, 0.05, 0.1});
  lib.set("shift_add", {120.0, 0.02, 0.1, 0.5});
  lib.set("tile_buffer", {9000.0, 0.08, 0.0, 15.0});
  lib.set("tile_accumulator", {2500.0, 0.04, 0.0, 4.0});
  lib.set("pooling_unit", {2400.0, 0.05, 0.0, 3.0});
  lib.set("activation_unit", {1500.0, 0.02, 0.0, 2.0});
  lib.set("global_accumulator_per_add", {30000.0, 0.1, 0.0, 25.0});
  lib.set("global_buffer_per_access", {120000.0, 0.15, 0.0, 60.0});
  lib.set("noc_router", {12000.0, 0.8, 0.0, 8.0});
  lib.set("noc_link_per_mm", {6400.0, 0.05, 0.0, 1.0});  // energy is pJ/bit/mm
  lib.set("nop_router", {50000.0, 1.5, 0.0, 20.0});
  return lib;
}

const ComponentCost& ComponentCostLibrary::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw SimError(ErrorCode::missing_component,
                   "no cost entry for component '" + name + "'");
  }
  return it->second;
}

void ComponentCostLibrary::set(const std::string& name, const ComponentCost& cost) {
  entries_[name] = cost;
}

bool ComponentCostLibrary::has(const std::string& name) const {
  return entries_.count(name) != 0;
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void fail(ErrorCode code, const std::string& origin, int line,
                       const std::string& msg) {
  throw SimError(code, origin + ":" + std::to_string(line) + ": " + msg);
}

long long parse_int_field(const std::string& raw, const std::string& field,
                          const std::string& origin, int line) {
  const std::string v = trim(raw);
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(v, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_value, origin, line,
         "field '" + field + "' is not an integer: '" + v + "'");
  }
  if (pos != v.size()) {
    fail(ErrorCode::invalid_value, origin, line,
         "field '" + field + "' is not an integer: '" + v + "'");
  }
  return value;
}

double parse_double_field(const std::string& raw, const std::string& field,
                          const std::string& origin, int line) {
  const std::string v = trim(raw);
  size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(v, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_value, origin, line,
         "field '" + field + "' is not a number: '" + v + "'");
  }
  if (pos != v.size() || std::isnan(value)) {
    fail(ErrorCode::invalid_value, origin, line,
         "field '" + field + "' is not a number: '" + v + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SimError(ErrorCode::invalid_value, "cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Network parse_network_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  // locate the header
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    header = split(t, ',');
    for (auto& h : header) h = trim(lower(h));
    break;
  }
  static const std::vector<std::string> base = {
      "name", "kind", "kx", "ky", "nif", "nof", "activations", "sparsity"};
  if (header.size() < base.size() ||
      !std::equal(base.begin(), base.end(), header.begin())) {
    fail(ErrorCode::malformed_row, origin, lineno,
         "header must start with name,kind,kx,ky,nif,nof,activations,sparsity");
  }
  int col_input_from = -1, col_has_pool = -1;
  for (size_t i = base.size(); i < header.size(); ++i) {
    if (header[i] == "input_from" && col_input_from < 0) {
      col_input_from = int(i);
    } else if (header[i] == "has_pool" && col_has_pool < 0) {
      col_has_pool = int(i);
    } else {
      fail(ErrorCode::malformed_row, origin, lineno,
           "unexpected column '" + header[i] + "'");
    }
  }

  Network net;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> f = split(t, ',');
    if (f.size() != header.size()) {
      fail(ErrorCode::malformed_row, origin, lineno,
           "expected " + std::to_string(header.size()) + " fields, got " +
               std::to_string(f.size()));
    }
    LayerSpec ls;
    ls.name = trim(f[0]);
    if (ls.name.empty()) {
      fail(ErrorCode::invalid_value, origin, lineno, "field 'name' is empty");
    }
    if (!seen.insert(ls.name).second) {
      fail(ErrorCode::invalid_value, origin, lineno,
           "duplicate layer name '" + ls.name + "'");
    }
    const std::string kind = trim(lower(f[1]));
    if (kind == "conv") {
      ls.kind = LayerKind::conv;
    } else if (kind == "fc") {
      ls.kind = LayerKind::fc;
    } else {
      fail(ErrorCode::invalid_value, origin, lineno,
           "field 'kind' must be conv or fc, got '" + trim(f[1]) + "'");
    }
    auto int_field = [&](int idx, const std::string& nm, long long lo) {
      long long v = parse_int_field(f[idx], nm, origin, lineno);
      if (v < lo) {
        fail(ErrorCode::invalid_value, origin, lineno,
             "field '" + nm + "' must be >= " + std::to_string(lo));
      }
      return v;
    };
    ls.kx = int(int_field(2, "kx", 1));
    ls.ky = int(int_field(3, "ky", 1));
    ls.nif = int(int_field(4, "nif", 1));
    ls.nof = int(int_field(5, "nof", 1));
    ls.activations = int_field(6, "activations", 0);
    ls.sparsity = parse_double_field(f[7], "sparsity", origin, lineno);
    if (ls.sparsity < 0.0 || ls.sparsity >= 1.0) {
      fail(ErrorCode::invalid_value, origin, lineno,
           "field 'sparsity' must be in [0,1)");
    }
    if (col_input_from >= 0) {
      ls.input_from = trim(f[col_input_from]);
      if (!ls.input_from.empty() && !seen.count(ls.input_from)) {
        fail(ErrorCode::invalid_value, origin, lineno,
             "input_from '" + ls.input_from + "' does not name an earlier layer");
      }
      if (ls.input_from == ls.name) {
        fail(ErrorCode::invalid_value, origin, lineno,
             "input_from must not reference the layer itself");
      }
    }
    if (col_has_pool >= 0) {
      const std::string p = trim(lower(f[col_has_pool]));
      if (p == "" || p == "0" || p == "none") {
        ls.pool = PoolKind::none;
      } else if (p == "1" || p == "max") {
        ls.pool = PoolKind::max;
      } else if (p == "avg") {
        ls.pool = PoolKind::avg;
      } else {
        fail(ErrorCode::invalid_value, origin, lineno,
             "field 'has_pool' must be 0, 1, none, max or avg");
      }
    }
    net.push_back(std::move(ls));
  }
  if (net.empty()) {
    throw SimError(ErrorCode::empty_network,
                   origin + ": no layer rows found");
  }
  return net;
}

Network parse_network(const std::string& path) {
  return parse_network_text(read_file(path), path);
}

std::string serialize_network(const Network& net) {
  bool any_branch = false, any_pool = false;
  for (const auto& l : net) {
    any_branch |= !l.input_from.empty();
    any_pool |= l.pool != PoolKind::none;
  }
  std::ostringstream out;
  out << "name,kind,kx,ky,nif,nof,activations,sparsity";
  if (any_branch) out << ",input_from";
  if (any_pool) out << ",has_pool";
  out << "\n";
  for (const auto& l : net) {
    std::ostringstream sp;
    sp << l.sparsity;
    out << l.name << ',' << (l.kind == LayerKind::conv ? "conv" : "fc") << ','
        << l.kx << ',' << l.ky << ',' << l.nif << ',' << l.nof << ','
        << l.activations << ',' << sp.str();
    if (any_branch) out << ',' << l.input_from;
    if (any_pool) {
      out << ',';
      if (l.pool == PoolKind::max) out << "max";
      else if (l.pool == PoolKind::avg) out << "avg";
      else out << "none";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// Config parsing: every recognized key gets a typed setter; anything else is
// an unknown_key error with section, key and line.
struct ConfigParseState {
  HardwareConfig hw;
  bool chiplet_count_set = false;
};

bool parse_bool(const std::string& v, const std::string& key,
                const std::string& origin, int line) {
  const std::string s = lower(trim(v));
  if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
  if (s == "off" || s == "false" || s == "0" || s == "no") return false;
  fail(ErrorCode::invalid_value, origin, line,
       "key '" + key + "' must be on/off, got '" + v + "'");
}

void apply_key(ConfigParseState& st, const std::string& section,
               const std::string& key, const std::string& value,
               const std::string& origin, int line) {
  auto& hw = st.hw;
  auto i = [&](long long lo) {
    long long v = parse_int_field(value, key, origin, line);
    if (v < lo) {
      fail(ErrorCode::invalid_value, origin, line,
           "key '" + key + "' must be >= " + std::to_string(lo));
    }
    return v;
  };
  auto d = [&](double lo) {
    double v = parse_double_field(value, key, origin, line);
    if (v < lo) {
      fail(ErrorCode::invalid_value, origin, line,
           "key '" + key + "' must be >= " + std::to_string(lo));
    }
    return v;
  };
  auto dpos = [&]() {
    double v = parse_double_field(value, key, origin, line);
    if (v <= 0) {
      fail(ErrorCode::invalid_value, origin, line,
           "key '" + key + "' must be > 0");
    }
    return v;
  };

  if (section == "general") {
    auto& g = hw.general;
    if (key == "weight_precision") g.weight_precision = int(i(1));
    else if (key == "activation_precision") g.activation_precision = int(i(1));
    else if (key == "cell_type") {
      const std::string v = lower(trim(value));
      if (v == "rram") g.cell_type = CellType::rram;
      else if (v == "sram") g.cell_type = CellType::sram;
      else fail(ErrorCode::invalid_value, origin, line,
                "cell_type must be RRAM or SRAM");
    }
    else if (key == "bits_per_cell") g.bits_per_cell = int(i(1));
    else if (key == "crossbar_rows") g.crossbar_rows = int(i(1));
    else if (key == "crossbar_cols") g.crossbar_cols = int(i(1));
    else if (key == "adc_resolution") g.adc_resolution = int(i(1));
    else if (key == "columns_per_adc") g.columns_per_adc = int(i(1));
    else if (key == "clock_frequency_hz") g.clock_frequency_hz = dpos();
    else if (key == "readout_mode") {
      const std::string v = lower(trim(value));
      if (v == "parallel") g.readout = ReadoutMode::parallel;
      else if (v == "sequential") g.readout = ReadoutMode::sequential;
      else fail(ErrorCode::invalid_value, origin, line,
                "readout_mode must be parallel or sequential");
    }
    else if (key == "overlap_nop_compute")
      g.overlap_nop_compute = parse_bool(value, key, origin, line);
    else if (key == "wafer_diameter_mm") g.wafer_diameter_mm = dpos();
    else if (key == "defect_density_per_mm2") g.defect_density_per_mm2 = d(0);
    else if (key == "packaging_cost_fraction") g.packaging_cost_fraction = d(0);
    else fail(ErrorCode::unknown_key, origin, line,
              "unknown key '" + key + "' in section [general]");
  } else if (section == "chiplet") {
    auto& c = hw.chiplet;
    if (key == "chip_mode") {
      const std::string v = lower(trim(value));
      if (v == "chiplet") c.mode = ChipMode::chiplet;
      else if (v == "monolithic") c.mode = ChipMode::monolithic;
      else fail(ErrorCode::invalid_value, origin, line,
                "chip_mode must be chiplet or monolithic");
    }
    else if (key == "chiplet_structure") {
      const std::string v = lower(trim(value));
      if (v == "custom") c.structure = ChipletStructure::custom;
      else if (v == "homogeneous") c.structure = ChipletStructure::homogeneous;
      else fail(ErrorCode::invalid_value, origin, line,
                "chiplet_structure must be homogeneous or custom");
    }
    else if (key == "chiplet_count") {
      c.chiplet_count = int(i(1));
      st.chiplet_count_set = true;
    }
    else if (key == "crossbars_per_tile") c.crossbars_per_tile = int(i(1));
    else if (key == "tiles_per_chiplet") c.tiles_per_chiplet = int(i(1));
    else if (key == "global_accumulator_width") c.global_accumulator_width = int(i(1));
    else if (key == "chiplet_sharing") c.sharing = parse_bool(value, key, origin, line);
    else fail(ErrorCode::unknown_key, origin, line,
              "unknown key '" + key + "' in section [chiplet]");
  } else if (section == "noc") {
    auto& n = hw.noc;
    if (key == "topology") {
      const std::string v = lower(trim(value));
      if (v == "mesh") n.topology = NocTopology::mesh;
      else if (v == "htree") n.topology = NocTopology::htree;
      else fail(ErrorCode::invalid_value, origin, line,
                "topology must be mesh or htree");
    }
    else if (key == "flit_width") n.flit_width = int(i(1));
    else if (key == "buffer_depth") n.buffer_depth = int(i(1));
    else if (key == "router_pipeline") n.router_pipeline = int(i(1));
    else if (key == "link_latency") n.link_latency = int(i(1));
    else if (key == "frequency_hz") n.frequency_hz = dpos();
    else if (key == "packet_flits") n.packet_flits = int(i(1));
    else if (key == "node_pitch_mm") n.node_pitch_mm = dpos();
    else if (key == "deadlock_cycles") n.deadlock_cycles = i(1);
    else fail(ErrorCode::unknown_key, origin, line,
              "unknown key '" + key + "' in section [noc]");
  } else if (section == "nop") {
    auto& n = hw.nop;
    if (key == "frequency_hz") n.frequency_hz = dpos();
    else if (key == "channel_width") n.channel_width = int(i(1));
    else if (key == "energy_per_bit_pj") n.energy_per_bit_pj = d(0);
    else if (key == "txrx_area_um2") n.txrx_area_um2 = d(0);
    else if (key == "clocking_area_um2") n.clocking_area_um2 = d(0);
    else if (key == "wire_length_mm") n.wire_length_mm = dpos();
    else if (key == "wire_resistance_ohm_per_mm") n.wire_resistance_ohm_per_mm = dpos();
    else if (key == "wire_capacitance_ff_per_mm") n.wire_capacitance_ff_per_mm = dpos();
    else if (key == "wire_pitch_um") n.wire_pitch_um = dpos();
    else if (key == "router_pipeline") n.router_pipeline = int(i(1));
    else if (key == "link_latency") n.link_latency = int(i(1));
    else if (key == "buffer_depth") n.buffer_depth = int(i(1));
    else if (key == "energy_mode") {
      const std::string v = lower(trim(value));
      if (v == "activation_bits") n.energy_mode = NopEnergyMode::activation_bits;
      else if (v == "bus_bits") n.energy_mode = NopEnergyMode::bus_bits;
      else fail(ErrorCode::invalid_value, origin, line,
                "energy_mode must be activation_bits or bus_bits");
    }
    else fail(ErrorCode::unknown_key, origin, line,
              "unknown key '" + key + "' in section [nop]");
  } else if (section == "dram") {
    auto& m = hw.dram;
    if (key == "standard") m.standard = trim(value);
    else if (key == "clock_mhz") m.clock_mhz = dpos();
    else if (key == "burst_bytes") m.burst_bytes = int(i(1));
    else if (key == "burst_cycles") m.burst_cycles = int(i(1));
    else if (key == "trcd") m.trcd = int(i(0));
    else if (key == "tcas") m.tcas = int(i(0));
    else if (key == "trp") m.trp = int(i(0));
    else if (key == "row_bytes") m.row_bytes = int(i(1));
    else if (key == "energy_activate_pj") m.energy_activate_pj = d(0);
    else if (key == "energy_read_pj") m.energy_read_pj = d(0);
    else if (key == "energy_precharge_pj") m.energy_precharge_pj = d(0);
    else if (key == "background_power_mw") m.background_power_mw = d(0);
    else if (key == "include_in_totals") m.include_in_totals = parse_bool(value, key, origin, line);
    else if (key == "chunk_fraction") {
      m.chunk_fraction = parse_double_field(value, key, origin, line);
      if (m.chunk_fraction <= 0.0 || m.chunk_fraction > 1.0) {
        fail(ErrorCode::invalid_value, origin, line,
             "chunk_fraction must be in (0,1]");
      }
    }
    else fail(ErrorCode::unknown_key, origin, line,
              "unknown key '" + key + "' in section [dram]");
  } else if (section == "components") {
    // keys look like crossbar_cell_array.energy_pj
    auto dot = key.find('.');
    if (dot == std::string::npos) {
      fail(ErrorCode::unknown_key, origin, line,
           "component key must be <component>.<field>, got '" + key + "'");
    }
    const std::string comp = key.substr(0, dot);
    const std::string field = key.substr(dot + 1);
    const auto& names = ComponentCostLibrary::component_names();
    if (std::find(names.begin(), names.end(), comp) == names.end()) {
      fail(ErrorCode::unknown_key, origin, line,
           "unknown component '" + comp + "' in section [components]");
    }
    ComponentCost cost = hw.components.at(comp);
    const double v = d(0);
    if (field == "area_um2") cost.area_um2 = v;
    else if (field == "energy_pj") cost.energy_pj = v;
    else if (field == "latency_ns") cost.latency_ns = v;
    else if (field == "leakage_uw") cost.leakage_uw = v;
    else fail(ErrorCode::unknown_key, origin, line,
              "unknown component field '" + field + "'");
    hw.components.set(comp, cost);
  } else {
    fail(ErrorCode::unknown_key, origin, line,
         "unknown section [" + section + "]");
  }
}

}  // namespace

HardwareConfig parse_config_text(const std::string& text, const std::string& origin) {
  ConfigParseState st;
  st.hw.components = ComponentCostLibrary::defaults();

  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        fail(ErrorCode::malformed_row, origin, lineno,
             "unterminated section header");
      }
      section = lower(trim(t.substr(1, t.size() - 2)));
      static const std::set<std::string> valid = {
          "general", "chiplet", "noc", "nop", "dram", "components"};
      if (!valid.count(section)) {
        fail(ErrorCode::unknown_key, origin, lineno,
             "unknown section [" + section + "]");
      }
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::malformed_row, origin, lineno,
           "expected key = value, got '" + t + "'");
    }
    const std::string key = lower(trim(t.substr(0, eq)));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      fail(ErrorCode::malformed_row, origin, lineno, "empty key");
    }
    if (section.empty()) {
      fail(ErrorCode::unknown_key, origin, lineno,
           "key '" + key + "' appears before any section header");
    }
    apply_key(st, section, key, value, origin, lineno);
  }

  // cross-field checks
  const auto& c = st.hw.chiplet;
  if (c.mode == ChipMode::chiplet) {
    if (c.structure == ChipletStructure::homogeneous && !st.chiplet_count_set) {
      throw SimError(ErrorCode::missing_required_key,
                     origin + ": homogeneous chiplet_structure requires "
                     "chiplet.chiplet_count");
    }
    if (c.structure == ChipletStructure::custom && st.chiplet_count_set) {
      throw SimError(ErrorCode::inconsistent_mode,
                     origin + ": chiplet.chiplet_count is only valid with "
                     "chiplet_structure = homogeneous");
    }
  }
  return st.hw;
}

HardwareConfig parse_config(const std::string& path) {
  return parse_config_text(read_file(path), path);
}

std::string serialize_config(const HardwareConfig& hw) {
  std::ostringstream o;
  o.precision(17);
  const auto& g = hw.general;
  o << "[general]\n";
  o << "weight_precision = " << g.weight_precision << "\n";
  o << "activation_precision = " << g.activation_precision << "\n";
  o << "cell_type = " << (g.cell_type == CellType::rram ? "RRAM" : "SRAM") << "\n";
  o << "bits_per_cell = " << g.bits_per_cell << "\n";
  o << "crossbar_rows = " << g.crossbar_rows << "\n";
  o << "crossbar_cols = " << g.crossbar_cols << "\n";
  o << "adc_resolution = " << g.adc_resolution << "\n";
  o << "columns_per_adc = " << g.columns_per_adc << "\n";
  o << "clock_frequency_hz = " << g.clock_frequency_hz << "\n";
  o << "readout_mode = "
    << (g.readout == ReadoutMode::parallel ? "parallel" : "sequential") << "\n";
  o << "overlap_nop_compute = " << (g.overlap_nop_compute ? "on" : "off") << "\n";
  o << "wafer_diameter_mm = " << g.wafer_diameter_mm << "\n";
  o << "defect_density_per_mm2 = " << g.defect_density_per_mm2 << "\n";
  o << "packaging_cost_fraction = " << g.packaging_cost_fraction << "\n";

  const auto& c = hw.chiplet;
  o << "\n[chiplet]\n";
  o << "chip_mode = "
    << (c.mode == ChipMode::chiplet ? "chiplet" : "monolithic") << "\n";
  o << "chiplet_structure = "
    << (c.structure == ChipletStructure::custom ? "custom" : "homogeneous") << "\n";
  if (c.structure == ChipletStructure::homogeneous && c.chiplet_count > 0) {
    o << "chiplet_count = " << c.chiplet_count << "\n";
  }
  o << "crossbars_per_tile = " << c.crossbars_per_tile << "\n";
  o << "tiles_per_chiplet = " << c.tiles_per_chiplet << "\n";
  o << "global_accumulator_width = " << c.global_accumulator_width << "\n";
  o << "chiplet_sharing = " << (c.sharing ? "on" : "off") << "\n";

  const auto& n = hw.noc;
  o << "\n[noc]\n";
  o << "topology = " << (n.topology == NocTopology::mesh ? "mesh" : "htree") << "\n";
  o << "flit_width = " << n.flit_width << "\n";
  o << "buffer_depth = " << n.buffer_depth << "\n";
  o << "router_pipeline = " << n.router_pipeline << "\n";
  o << "link_latency = " << n.link_latency << "\n";
  o << "frequency_hz = " << n.frequency_hz << "\n";
  o << "packet_flits = " << n.packet_flits << "\n";
  o << "node_pitch_mm = " << n.node_pitch_mm << "\n";
  o << "deadlock_cycles = " << n.deadlock_cycles << "\n";

  const auto& p = hw.nop;
  o << "\n[nop]\n";
  o << "frequency_hz = " << p.frequency_hz << "\n";
  o << "channel_width = " << p.channel_width << "\n";
  o << "energy_per_bit_pj = " << p.energy_per_bit_pj << "\n";
  o << "txrx_area_um2 = " << p.txrx_area_um2 << "\n";
  o << "clocking_area_um2 = " << p.clocking_area_um2 << "\n";
  o << "wire_length_mm = " << p.wire_length_mm << "\n";
  o << "wire_resistance_ohm_per_mm = " << p.wire_resistance_ohm_per_mm << "\n";
  o << "wire_capacitance_ff_per_mm = " << p.wire_capacitance_ff_per_mm << "\n";
  o << "wire_pitch_um = " << p.wire_pitch_um << "\n";
  o << "router_pipeline = " << p.router_pipeline << "\n";
  o << "link_latency = " << p.link_latency << "\n";
  o << "buffer_depth = " << p.buffer_depth << "\n";
  o << "energy_mode = "
    << (p.energy_mode == NopEnergyMode::activation_bits ? "activation_bits"
                                                        : "bus_bits")
    << "\n";

  const auto& m = hw.dram;
  o << "\n[dram]\n";
  o << "standard = " << m.standard << "\n";
  o << "clock_mhz = " << m.clock_mhz << "\n";
  o << "burst_bytes = " << m.burst_bytes << "\n";
  o << "burst_cycles = " << m.burst_cycles << "\n";
  o << "trcd = " << m.trcd << "\n";
  o << "tcas = " << m.tcas << "\n";
  o << "trp = " << m.trp << "\n";
  o << "row_bytes = " << m.row_bytes << "\n";
  o << "energy_activate_pj = " << m.energy_activate_pj << "\n";
  o << "energy_read_pj = " << m.energy_read_pj << "\n";
  o << "energy_precharge_pj = " << m.energy_precharge_pj << "\n";
  o << "background_power_mw = " << m.background_power_mw << "\n";
  o << "include_in_totals = " << (m.include_in_totals ? "on" : "off") << "\n";
  o << "chunk_fraction = " << m.chunk_fraction << "\n";

  o << "\n[components]\n";
  for (const auto& [name, cost] : hw.components.entries()) {
    o << name << ".area_um2 = " << cost.area_um2 << "\n";
    o << name << ".energy_pj = " << cost.energy_pj << "\n";
    o << name << ".latency_ns = " << cost.latency_ns << "\n";
    o << name << ".leakage_uw = " << cost.leakage_uw << "\n";
  }
  return o.str();
}

}  // namespace chipletsim
