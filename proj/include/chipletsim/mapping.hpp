#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chipletsim/types.hpp"

namespace chipletsim {

/// Crossbar demand of a single layer at a given crossbar geometry.
struct CrossbarDemand {
  std::int64_t rows_needed = 0;      // vertical replicas (input dimension)
  std::int64_t cols_needed = 0;      // horizontal replicas (output dimension)
  std::int64_t total = 0;            // rows_needed * cols_needed
  std::int64_t tiles = 0;            // ceil(total / crossbars_per_tile)
};

/// Placement of one layer across one chiplet.
struct ChipletSlice {
  int chiplet_id = 0;                // global chiplet index (0-based)
  std::int64_t tile_offset = 0;      // first tile index inside the chiplet
  std::int64_t tiles = 0;            // tiles of this layer on this chiplet
  std::int64_t crossbars = 0;        // crossbars of this layer on this chiplet
};

/// Full placement record for one layer.
struct LayerMapping {
  std::string name;
  CrossbarDemand demand;
  std::vector<ChipletSlice> slices;  // one per chiplet the layer touches
  double utilization = 0.0;          // crossbars used / crossbars allocated

  int chiplet_count() const { return int(slices.size()); }
};

/// Result of partitioning a whole network onto chiplets.
struct MappingResult {
  std::vector<LayerMapping> layers;
  int chiplets_used = 0;             // number of distinct chiplets touched
  std::int64_t total_tiles = 0;      // sum of per-layer tile demand
  std::int64_t total_crossbars = 0;  // sum of per-layer crossbar demand
  double global_utilization = 0.0;
  ChipMode mode = ChipMode::chiplet;
  ChipletStructure structure = ChipletStructure::custom;
  std::int64_t tiles_per_chiplet = 0;
  std::int64_t crossbars_per_tile = 0;
};

/// One logical traffic edge between two layers (producer -> consumer).
struct TrafficEdge {
  int src_layer = 0;
  int dst_layer = 0;
  std::int64_t volume_bits = 0;   // post-sparsity activation traffic
  bool intra_chiplet = false;     // true when src and dst share one chiplet
};

/// Aggregate data-movement summary derived from a mapping.
struct TrafficSummary {
  std::vector<TrafficEdge> edges;
  std::vector<std::int64_t> accumulator_adds;       // per layer
  std::vector<std::int64_t> global_buffer_accesses; // per layer
  std::int64_t total_inter_chiplet_bits = 0;
  std::int64_t total_intra_chiplet_bits = 0;
};

/// Crossbar demand for one layer: how many crossbars its weight matrix
/// occupies when unrolled onto rows x cols cell arrays.
CrossbarDemand crossbars_for_layer(const LayerSpec& layer,
                                   const GeneralConfig& general,
                                   const ChipletConfig& chiplet);

/// Partition a network onto chiplets.
///
/// Layer order is preserved; each layer is split across the minimum number
/// of chiplets that can hold its tiles, tiles are divided as evenly as
/// possible between those chiplets, and (when sharing is enabled) a layer
/// may start on the partially filled tail chiplet of its predecessor when
/// it fits there entirely.
///
/// Throws ChipletBudgetExceeded when a homogeneous budget is exceeded.
MappingResult partition_network(const Network& net, const HardwareConfig& hw);

/// Per-layer activation traffic, accumulator adds and buffer accesses
/// implied by a mapping.
TrafficSummary traffic_summary(const Network& net, const MappingResult& map,
                               const HardwareConfig& hw);

/// Output activation count of layer `idx`: the activations field of the next
/// layer in program order, or `nof` for the last layer.
std::int64_t output_activations(const Network& net, std::size_t idx);

}  // namespace chipletsim
