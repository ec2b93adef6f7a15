#include "chipletsim/dram.hpp"

#include <cmath>

#include "chipletsim/errors.hpp"

namespace chipletsim {

std::int64_t weight_parameter_count(const Network& net) {
  std::int64_t params = 0;
  for (const LayerSpec& l : net) {
    params += std::int64_t(l.kx) * l.ky * l.nif * l.nof;
  }
  return params;
}

std::int64_t weight_bytes(const Network& net, const GeneralConfig& general) {
  const std::int64_t bits = weight_parameter_count(net) * general.weight_precision;
  return (bits + 7) / 8;
}

std::int64_t dram_transactions(std::int64_t bytes, const DramConfig& cfg) {
  return (bytes + cfg.burst_bytes - 1) / cfg.burst_bytes;
}

namespace {

struct StreamCost {
  std::int64_t rows = 0;
  double latency_ns = 0.0;
  double energy_pj = 0.0;
};

// Closed-row sequential stream of `bursts` transactions: every row pays
// activate + CAS + precharge once, its bursts stream back to back.
StreamCost stream_cost(std::int64_t bursts, const DramConfig& cfg) {
  StreamCost c;
  if (bursts <= 0) return c;
  const std::int64_t bursts_per_row =
      std::max<std::int64_t>(1, cfg.row_bytes / cfg.burst_bytes);
  c.rows = (bursts + bursts_per_row - 1) / bursts_per_row;
  const std::int64_t cycles =
      c.rows * (cfg.trcd + cfg.tcas + cfg.trp) + bursts * cfg.burst_cycles;
  c.latency_ns = double(cycles) * 1e3 / cfg.clock_mhz;
  c.energy_pj = double(c.rows) *
                    (cfg.energy_activate_pj + cfg.energy_precharge_pj) +
                double(bursts) * cfg.energy_read_pj +
                cfg.background_power_mw * c.latency_ns;  // mW * ns = pJ
  return c;
}

}  // namespace

DramReport dram_weight_load(const Network& net, const HardwareConfig& hw) {
  const DramConfig& cfg = hw.dram;
  DramReport rep;
  rep.weight_bytes = weight_bytes(net, hw.general);
  rep.transactions = dram_transactions(rep.weight_bytes, cfg);
  rep.simulated_transactions = std::max<std::int64_t>(
      1, std::int64_t(std::ceil(double(rep.transactions) * cfg.chunk_fraction)));
  rep.simulated_transactions =
      std::min(rep.simulated_transactions, rep.transactions);
  rep.scale = double(rep.transactions) / double(rep.simulated_transactions);

  const StreamCost sim = stream_cost(rep.simulated_transactions, cfg);
  rep.row_activations = sim.rows;
  rep.latency_ns = sim.latency_ns * rep.scale;
  rep.energy_pj = sim.energy_pj * rep.scale;
  return rep;
}

}  // namespace chipletsim
