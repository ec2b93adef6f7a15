#include "chipletsim/mapping.hpp"

#include <cmath>
#include <numeric>

#include "chipletsim/errors.hpp"

namespace chipletsim {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

}  // namespace

CrossbarDemand crossbars_for_layer(const LayerSpec& layer,
                                   const GeneralConfig& general,
                                   const ChipletConfig& chiplet) {
  CrossbarDemand d;
  const std::int64_t weight_rows =
      std::int64_t(layer.kx) * layer.ky * layer.nif;
  const std::int64_t weight_cols =
      std::int64_t(layer.nof) * general.weight_precision;
  d.rows_needed = ceil_div(weight_rows, general.crossbar_rows);
  d.cols_needed = ceil_div(weight_cols, general.crossbar_cols);
  d.total = d.rows_needed * d.cols_needed;
  d.tiles = ceil_div(d.total, chiplet.crossbars_per_tile);
  return d;
}

std::int64_t output_activations(const Network& net, std::size_t idx) {
  if (idx + 1 < net.size()) return net[idx + 1].activations;
  return net[idx].nof;
}

MappingResult partition_network(const Network& net, const HardwareConfig& hw) {
  if (net.empty()) {
    throw SimError(ErrorCode::empty_network, "cannot partition an empty network");
  }
  const auto& cc = hw.chiplet;
  MappingResult out;
  out.mode = cc.mode;
  out.structure = cc.structure;
  out.crossbars_per_tile = cc.crossbars_per_tile;

  // Demand pass: crossbars and tiles per layer.
  std::vector<CrossbarDemand> demand(net.size());
  for (size_t i = 0; i < net.size(); ++i) {
    demand[i] = crossbars_for_layer(net[i], hw.general, cc);
    out.total_tiles += demand[i].tiles;
    out.total_crossbars += demand[i].total;
  }

  // A monolithic chip is the degenerate single-chiplet case sized to hold
  // the whole network.
  const std::int64_t tiles_per_chiplet =
      cc.mode == ChipMode::monolithic ? out.total_tiles : cc.tiles_per_chiplet;
  out.tiles_per_chiplet = tiles_per_chiplet;
  const std::int64_t budget =
      (cc.mode == ChipMode::chiplet && cc.structure == ChipletStructure::homogeneous)
          ? cc.chiplet_count
          : -1;
  // A monolithic chip always stacks layers onto its single die; in chiplet
  // mode tail-sharing is the configurable packing knob.
  const bool sharing = cc.mode == ChipMode::monolithic || cc.sharing;

  int next_chiplet = 0;        // first never-used chiplet id
  std::int64_t tail_free = 0;  // spare tiles on chiplet next_chiplet-1

  for (size_t i = 0; i < net.size(); ++i) {
    const CrossbarDemand& d = demand[i];
    LayerMapping lm;
    lm.name = net[i].name;
    lm.demand = d;

    const std::int64_t m = ceil_div(d.tiles, tiles_per_chiplet);
    const std::int64_t base = d.tiles / m;
    const std::int64_t extra = d.tiles % m;

    const bool reuse_tail =
        sharing && next_chiplet > 0 && m == 1 && d.tiles <= tail_free;
    int first_id = reuse_tail ? next_chiplet - 1 : next_chiplet;

    std::int64_t xb_left = d.total;
    for (std::int64_t j = 0; j < m; ++j) {
      ChipletSlice s;
      s.chiplet_id = first_id + int(j);
      s.tile_offset = (reuse_tail && j == 0) ? tiles_per_chiplet - tail_free : 0;
      s.tiles = base + (j < extra ? 1 : 0);
      s.crossbars = std::min(xb_left, s.tiles * cc.crossbars_per_tile);
      xb_left -= s.crossbars;
      lm.slices.push_back(s);
    }

    if (reuse_tail) {
      tail_free -= d.tiles;
    } else {
      next_chiplet = first_id + int(m);
      tail_free = tiles_per_chiplet - lm.slices.back().tiles;
    }

    if (budget > 0 && next_chiplet > budget) {
      throw SimError(ErrorCode::chiplet_budget_exceeded,
                     "Exceeded the maximum number of chiplets: layer '" +
                         net[i].name + "' needs chiplet " +
                         std::to_string(next_chiplet) + " of " +
                         std::to_string(budget));
    }

    const double allocated =
        double(m) * tiles_per_chiplet * cc.crossbars_per_tile;
    lm.utilization = double(d.total) / allocated;
    out.layers.push_back(std::move(lm));
  }

  out.chiplets_used = next_chiplet;

  const std::int64_t chiplet_capacity =
      tiles_per_chiplet * cc.crossbars_per_tile;
  double capacity = 0;
  if (cc.mode == ChipMode::monolithic) {
    capacity = double(chiplet_capacity);  // one die holding every tile
  } else if (cc.structure == ChipletStructure::homogeneous) {
    capacity = double(cc.chiplet_count) * chiplet_capacity;
  } else {
    capacity = double(out.chiplets_used) * chiplet_capacity;
  }
  out.global_utilization = double(out.total_crossbars) / capacity;
  return out;
}

namespace {

bool co_located(const LayerMapping& a, const LayerMapping& b) {
  return a.slices.size() == 1 && b.slices.size() == 1 &&
         a.slices[0].chiplet_id == b.slices[0].chiplet_id;
}

}  // namespace

TrafficSummary traffic_summary(const Network& net, const MappingResult& map,
                               const HardwareConfig& hw) {
  TrafficSummary ts;
  const double q = hw.general.weight_precision;

  auto add_edge = [&](int src, int dst, std::int64_t activations) {
    TrafficEdge e;
    e.src_layer = src;
    e.dst_layer = dst;
    const double dense_bits = double(activations) * q;
    const double fanout = double(map.layers[dst].slices.size());
    const double kept = 1.0 - net[src].sparsity;
    e.intra_chiplet = co_located(map.layers[src], map.layers[dst]);
    const double scale = e.intra_chiplet ? 1.0 : fanout;
    e.volume_bits = std::int64_t(std::llround(dense_bits * kept * scale));
    if (e.intra_chiplet) {
      ts.total_intra_chiplet_bits += e.volume_bits;
    } else {
      ts.total_inter_chiplet_bits += e.volume_bits;
    }
    ts.edges.push_back(e);
  };

  for (size_t i = 0; i + 1 < net.size(); ++i) {
    add_edge(int(i), int(i + 1), net[i].activations);
  }
  // Skip connections: the branch input arrives at the consumer in addition
  // to the sequential edge. The transported tensor is the consumer's input
  // activation set; sparsity follows the producing layer.
  for (size_t i = 0; i < net.size(); ++i) {
    if (net[i].input_from.empty()) continue;
    int src = -1;
    for (size_t j = 0; j < i; ++j) {
      if (net[j].name == net[i].input_from) {
        src = int(j);
        break;
      }
    }
    if (src < 0) {
      throw SimError(ErrorCode::invalid_value,
                     "input_from '" + net[i].input_from +
                         "' does not name an earlier layer");
    }
    add_edge(src, int(i), net[i].activations);
  }

  ts.accumulator_adds.assign(net.size(), 0);
  ts.global_buffer_accesses.assign(net.size(), 0);
  for (size_t i = 0; i < net.size(); ++i) {
    const std::int64_t m = std::int64_t(map.layers[i].slices.size());
    if (m > 1) {
      const std::int64_t a_out = output_activations(net, i);
      ts.accumulator_adds[i] = a_out * (m - 1);
      // m partial-sum writes plus one read of the merged result
      ts.global_buffer_accesses[i] = a_out * (m + 1);
    }
  }
  return ts;
}

}  // namespace chipletsim
