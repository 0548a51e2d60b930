#include "aifp/wafer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aifp/errors.hpp"

namespace aifp {

void WaferGeometry::validate() const {
  if (!(wafer_diameter > 0.0)) throw ValidationError("wafer_diameter", "must be positive");
  if (!(chip_area > 0.0)) throw ValidationError("chip_area", "must be positive");
  if (!(kerf >= 0.0)) throw ValidationError("kerf", "must be non-negative");
  if (!(defect_density >= 0.0)) throw ValidationError("defect_density", "must be non-negative");
  if (!(std::sqrt(chip_area) + kerf < wafer_diameter)) throw ValidationError("chip_area", "die does not fit on wafer");
}

double chip_area_with_kerf(const WaferGeometry& geom) {
  const double side = std::sqrt(geom.chip_area) + geom.kerf;
  return side * side;
}

double gross_die_estimate(const WaferGeometry& geom, EdgeLossFormula formula) {
  geom.validate();
  using std::numbers::pi;
  const double a = chip_area_with_kerf(geom);
  const double d = geom.wafer_diameter;
  const double area_term = pi * (d / 2.0) * (d / 2.0) / a;
  const double edge_term = formula == EdgeLossFormula::Standard ? pi * d / std::sqrt(2.0 * a)
                                                                : pi * d / (std::numbers::sqrt2 * a);
  return area_term - edge_term;
}

double dies_per_wafer(const WaferGeometry& geom, EdgeLossFormula formula) {
  const double n = gross_die_estimate(geom, formula);
  if (!(n > 0.0)) throw std::invalid_argument("dies_per_wafer: chip too large for wafer");
  return n;
}

double defect_yield(const WaferGeometry& geom) {
  if (!(geom.defect_density >= 0.0)) throw ValidationError("defect_density", "must be non-negative");
  return std::exp(-std::sqrt(geom.defect_density * geom.chip_area));
}

double edge_yield(const WaferGeometry& geom, EdgeLossFormula formula) {
  const double r = geom.wafer_diameter / 2.0;
  return dies_per_wafer(geom, formula) * geom.chip_area / (std::numbers::pi * r * r);
}

double silicon_area_needed(const WaferGeometry& geom, EdgeLossFormula formula) {
  const double mm2 = geom.chip_area / (edge_yield(geom, formula) * defect_yield(geom));
  return mm2 * 1e-6;
}

double calibrate_defect_density(WaferGeometry geom, double target_area_m2, EdgeLossFormula formula, double upper) {
  auto area_at = [&](double d) {
    geom.defect_density = d;
    return silicon_area_needed(geom, formula);
  };
  double lo = 0.0;
  double hi = upper;
  if (target_area_m2 < area_at(lo) || target_area_m2 > area_at(hi)) {
    throw UnreachableTarget("calibrate_defect_density: target silicon area outside the reachable range");
  }
  // area is strictly increasing in defect density
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (area_at(mid) < target_area_m2) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace aifp
