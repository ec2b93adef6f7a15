#pragma once

#include "chipletsim/types.hpp"

namespace chipletsim {

/// Wafer parameters for fabrication-cost estimates.
struct WaferSpec {
  double diameter_mm = 300.0;
  double defect_density_per_mm2 = 0.012;

  /// 150 mm-class wafer used by the hand-checkable reference numbers.
  static WaferSpec small_reference() { return {152.4, 0.012}; }
};

/// Chiplet-vs-monolithic fabrication cost comparison. Costs are in units of
/// one wafer (cost of a wafer = 1.0).
struct ArchitectureCost {
  double chiplet_die_area_mm2 = 0.0;
  double monolithic_die_area_mm2 = 0.0;
  int chiplet_count = 0;
  double chiplet_cost = 0.0;     // dies * per-good-die + packaging adder
  double monolithic_cost = 0.0;  // one good die
  double improvement_percent = 0.0;  // (mono - chiplet) / mono * 100
};

/// Rectangular dies of `area_mm2` fitting a circular wafer, unfloored.
/// Throws AreaTooLarge when the geometric expression is not positive.
double chips_per_wafer_exact(double diameter_mm, double area_mm2);

/// Floored die count for reporting.
long long chips_per_wafer(double diameter_mm, double area_mm2);

/// Poisson yield: fraction of defect-free dies of `area_mm2`.
double die_yield(double defect_density_per_mm2, double area_mm2);

/// Cost of one *good* die in wafer units: 1 / (yield * dies_per_wafer).
double cost_per_good_die(const WaferSpec& wafer, double area_mm2);

/// Cost of a die of `target_area` relative to a die of `ref_area`:
/// (N_ref / N_target) * e^(-D0 * (ref_area - target_area)), with unfloored
/// die counts so the yield-ratio identity holds exactly.
double normalized_cost(double ref_area_mm2, double target_area_mm2,
                       const WaferSpec& wafer);

/// Compare fabricating `chiplet_count` chiplet dies (plus a packaging adder
/// proportional to summed die cost) against one monolithic die.
ArchitectureCost architecture_cost(double chiplet_die_area_mm2,
                                   int chiplet_count,
                                   double monolithic_die_area_mm2,
                                   double packaging_cost_fraction,
                                   const WaferSpec& wafer);

}  // namespace chipletsim
