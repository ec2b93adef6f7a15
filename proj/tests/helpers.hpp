#pragma once

#include <string>
#include <utility>

#include "chipletsim/types.hpp"

namespace testutil {

inline chipletsim::LayerSpec layer(
    std::string name, chipletsim::LayerKind kind, int kx, int ky, int nif,
    int nof, std::int64_t activations, double sparsity = 0.0,
    std::string input_from = "",
    chipletsim::PoolKind pool = chipletsim::PoolKind::none) {
  chipletsim::LayerSpec l;
  l.name = std::move(name);
  l.kind = kind;
  l.kx = kx;
  l.ky = ky;
  l.nif = nif;
  l.nof = nof;
  l.activations = activations;
  l.sparsity = sparsity;
  l.input_from = std::move(input_from);
  l.pool = pool;
  return l;
}

inline std::string fixture(const std::string& name) {
  return std::string(CHIPLETSIM_SOURCE_DIR) + "/fixtures/" + name;
}

inline std::string shipped_config() {
  return std::string(CHIPLETSIM_SOURCE_DIR) +
         "/configs/default_32nm_rram.cfg";
}

inline chipletsim::HardwareConfig default_hw() {
  chipletsim::HardwareConfig hw;
  hw.components = chipletsim::ComponentCostLibrary::defaults();
  return hw;
}

// Three layers with hand-computable crossbar demand at the default 128x128
// geometry and 8-bit weights:
//   conv1: ceil(3*3*16/128)=2 rows x ceil(64*8/128)=4 cols -> 8 xbars, 1 tile
//   conv2: ceil(3*3*64/128)=5 rows x ceil(128*8/128)=8 cols -> 40 xbars, 3 tiles
//   fc1:   ceil(2048/128)=16 rows x ceil(10*8/128)=1 col  -> 16 xbars, 1 tile
inline chipletsim::Network small_net() {
  using chipletsim::LayerKind;
  return {layer("conv1", LayerKind::conv, 3, 3, 16, 64, 1024),
          layer("conv2", LayerKind::conv, 3, 3, 64, 128, 256),
          layer("fc1", LayerKind::fc, 1, 1, 2048, 10, 2048)};
}

}  // namespace testutil
