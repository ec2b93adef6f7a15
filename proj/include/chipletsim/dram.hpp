#pragma once

#include <cstdint>

#include "chipletsim/types.hpp"

namespace chipletsim {

/// One-time DRAM weight-load estimate.
struct DramReport {
  std::int64_t weight_bytes = 0;
  std::int64_t transactions = 0;       // total bursts to move the weights
  std::int64_t simulated_transactions = 0;  // bursts actually walked
  std::int64_t row_activations = 0;    // for the simulated chunk
  double latency_ns = 0.0;             // scaled back to all transactions
  double energy_pj = 0.0;              // scaled back to all transactions
  double scale = 1.0;                  // transactions / simulated
};

/// Total weight parameters of a network (kx*ky*nif*nof summed).
std::int64_t weight_parameter_count(const Network& net);

/// Bytes occupied by all weights at the configured weight precision.
std::int64_t weight_bytes(const Network& net, const GeneralConfig& general);

/// Bursts needed to stream `bytes` at the configured burst size.
std::int64_t dram_transactions(std::int64_t bytes, const DramConfig& cfg);

/// Closed-row streaming model: each DRAM row pays activate + CAS + precharge
/// once and then streams its bursts back-to-back. chunk_fraction < 1 walks
/// only a leading fraction of the bursts and scales time and energy back up.
DramReport dram_weight_load(const Network& net, const HardwareConfig& hw);

}  // namespace chipletsim
