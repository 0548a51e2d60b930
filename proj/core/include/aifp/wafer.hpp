#pragma once

namespace aifp {

/// Die areas of the chips in the server inventory, mm^2.
inline constexpr double kGpuDieArea = 826.0;  // A100
inline constexpr double kCpuDieArea = 694.0;  // Xeon Platinum XCC

/// Square dies cut from a round wafer. Lengths in mm, areas in mm^2, defect density per mm^2.
struct WaferGeometry {
  double wafer_diameter{300.0};
  double chip_area{};
  double kerf{0.2};
  double defect_density{};

  /// Throws ValidationError when the die does not fit or a field is out of range.
  void validate() const;
};

/**
 * Edge-loss term of the gross-die estimate.
 *
 * Standard divides the circumference by sqrt(2 * A). LiteralSqrt2TimesArea
 * divides by sqrt(2) * A, reproducing a common typesetting of the formula;
 * it is kept only for comparison runs.
 */
enum class EdgeLossFormula { Standard, LiteralSqrt2TimesArea };

double chip_area_with_kerf(const WaferGeometry& geom);

/// Area term minus edge term, unclamped. Oversized dies give values below 1 or negative.
double gross_die_estimate(const WaferGeometry& geom, EdgeLossFormula formula = EdgeLossFormula::Standard);

/// Gross dies per wafer (real-valued). Throws std::invalid_argument if the estimate is not positive.
double dies_per_wafer(const WaferGeometry& geom, EdgeLossFormula formula = EdgeLossFormula::Standard);

/// Moore defect yield exp(-sqrt(D * A)).
double defect_yield(const WaferGeometry& geom);

/// Edge and kerf yield: usable die area over wafer area.
double edge_yield(const WaferGeometry& geom, EdgeLossFormula formula = EdgeLossFormula::Standard);

/// Silicon consumed per good die, in m^2.
double silicon_area_needed(const WaferGeometry& geom, EdgeLossFormula formula = EdgeLossFormula::Standard);

/**
 * Defect density (per mm^2) at which silicon_area_needed equals `target_area_m2`.
 * Bisection over [0, upper]; throws UnreachableTarget when the target is below the
 * defect-free area or above the area reached at `upper`.
 */
double calibrate_defect_density(WaferGeometry geom, double target_area_m2,
                                EdgeLossFormula formula = EdgeLossFormula::Standard, double upper = 10.0);

}  // namespace aifp
