#include "chipletsim/cost.hpp"

#include <cmath>
#include <string>

#include "chipletsim/errors.hpp"

namespace chipletsim {

double chips_per_wafer_exact(double diameter_mm, double area_mm2) {
  if (diameter_mm <= 0 || area_mm2 <= 0) {
    throw SimError(ErrorCode::invalid_value,
                   "wafer diameter and die area must be positive");
  }
  const double pi = 3.14159265358979323846;
  const double n = diameter_mm * pi *
                   (diameter_mm / (4.0 * area_mm2) -
                    1.0 / std::sqrt(2.0 * area_mm2));
  if (n <= 0) {
    throw SimError(ErrorCode::area_too_large,
                   "die area " + std::to_string(area_mm2) +
                       " mm^2 does not fit a " + std::to_string(diameter_mm) +
                       " mm wafer");
  }
  return n;
}

long long chips_per_wafer(double diameter_mm, double area_mm2) {
  return (long long)(std::floor(chips_per_wafer_exact(diameter_mm, area_mm2)));
}

double die_yield(double defect_density_per_mm2, double area_mm2) {
  return std::exp(-defect_density_per_mm2 * area_mm2);
}

double cost_per_good_die(const WaferSpec& wafer, double area_mm2) {
  const double n = chips_per_wafer_exact(wafer.diameter_mm, area_mm2);
  const double eta = die_yield(wafer.defect_density_per_mm2, area_mm2);
  return 1.0 / (eta * n);
}

double normalized_cost(double ref_area_mm2, double target_area_mm2,
                       const WaferSpec& wafer) {
  const double n_ref = chips_per_wafer_exact(wafer.diameter_mm, ref_area_mm2);
  const double n_target =
      chips_per_wafer_exact(wafer.diameter_mm, target_area_mm2);
  return (n_ref / n_target) *
         std::exp(-wafer.defect_density_per_mm2 *
                  (ref_area_mm2 - target_area_mm2));
}

ArchitectureCost architecture_cost(double chiplet_die_area_mm2,
                                   int chiplet_count,
                                   double monolithic_die_area_mm2,
                                   double packaging_cost_fraction,
                                   const WaferSpec& wafer) {
  ArchitectureCost c;
  c.chiplet_die_area_mm2 = chiplet_die_area_mm2;
  c.monolithic_die_area_mm2 = monolithic_die_area_mm2;
  c.chiplet_count = chiplet_count;
  const double per_die = cost_per_good_die(wafer, chiplet_die_area_mm2);
  c.chiplet_cost =
      chiplet_count * per_die * (1.0 + packaging_cost_fraction);
  c.monolithic_cost = cost_per_good_die(wafer, monolithic_die_area_mm2);
  c.improvement_percent =
      (c.monolithic_cost - c.chiplet_cost) / c.monolithic_cost * 100.0;
  return c;
}

}  // namespace chipletsim
