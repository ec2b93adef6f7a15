#pragma once

#include <string>

#include "chipletsim/types.hpp"

namespace chipletsim {

// Network CSV. Header: name,kind,kx,ky,nif,nof,activations,sparsity with
// optional trailing input_from and has_pool columns. Blank lines and lines
// starting with '#' are skipped. Structural problems raise malformed_row,
// bad field values raise invalid_value, both with the 1-based line number.
Network parse_network(const std::string& path);
Network parse_network_text(const std::string& text, const std::string& origin = "<string>");
std::string serialize_network(const Network& net);

// Sectioned key=value config. Sections: [general] [chiplet] [noc] [nop]
// [dram] [components]. Unknown sections or keys are unknown_key errors;
// homogeneous mode without chiplet_count is missing_required_key; custom
// mode with chiplet_count set is inconsistent_mode. Missing keys fall back
// to defaults that match the shipped 32nm RRAM preset.
HardwareConfig parse_config(const std::string& path);
HardwareConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");
std::string serialize_config(const HardwareConfig& hw);

}  // namespace chipletsim
