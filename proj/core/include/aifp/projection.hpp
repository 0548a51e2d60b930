#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aifp/factors.hpp"
#include "aifp/impact.hpp"
#include "aifp/portfolio.hpp"
#include "aifp/usecase.hpp"

namespace aifp {

struct ScenarioParams {
  std::string name;
  std::string label;
  double horizon_years{6.0};
  double genai_cagr{};  // chat and RAG
  double agents_cagr{};
  double cv_cagr{};
  double nlp_cagr{};
  double tabular_cagr{};
  double model_size_factor{1.0};
  double output_token_factor{1.0};
  double quantization_factor{1.0};
  double hardware_efficiency_factor{1.0};
  double pue{1.15};
  double grid_reduction{0.0};
  double model_size_exponent{1.0};  // energy ~ size^exponent

  void validate() const;
  double cagr(UseCaseType t) const;
};

/// (1 + cagr)^years. Throws std::invalid_argument for cagr < 0 or years < 0.
double usage_scale(double cagr, double years);

/// steady, high, limited, tech, intermediate.
std::vector<ScenarioParams> preset_scenarios();
/// Zero growth, unit factors and the reference PUE: reproduces the baseline.
ScenarioParams identity_scenario(double reference_pue = 1.15);
/// Throws std::invalid_argument when no preset has that name.
ScenarioParams find_scenario(const std::vector<ScenarioParams>& presets, std::string_view name);

struct ScenarioResult {
  std::string scenario;
  ImpactVector index;     // baseline = 100 per criterion
  ImpactVector absolute;  // projected yearly footprint
  double use_cases{};
  double genai_share{};   // of use cases
};

/// Projects one baseline portfolio; keeps the baseline footprint for indexing.
class Projector {
 public:
  Projector(PortfolioSpec spec, Catalog catalog, EmissionFactorTable factors);

  const AnnualFootprint& baseline() const { return baseline_; }
  const PortfolioSpec& spec() const { return spec_; }

  AnnualFootprint footprint(const ScenarioParams& scenario) const;
  ScenarioResult project(const ScenarioParams& scenario) const;

 private:
  PortfolioSpec spec_;
  Catalog catalog_;
  EmissionFactorTable factors_;
  AnnualFootprint baseline_;
};

enum class SweepParameter { ModelSizeFactor, OutputTokenFactor, AgentsCagr, GenaiCagr, HardwareEfficiency };

std::string_view to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view key);
double get_parameter(const ScenarioParams& s, SweepParameter p);
void set_parameter(ScenarioParams& s, SweepParameter p, double value);

struct SweepResult {
  SweepParameter parameter{};
  std::vector<double> values;
  std::vector<ScenarioResult> points;
  /// Least-squares c0 + c1 x + c2 x^2 of the energy index, for CAGR sweeps with 3+ distinct values.
  std::optional<std::array<double, 3>> energy_fit;
};

/// Throws std::invalid_argument on an empty value list.
SweepResult sensitivity_sweep(const Projector& projector, const ScenarioParams& scenario, SweepParameter parameter,
                              const std::vector<double>& values);

/// lo, lo+step, ... up to hi (inclusive within half a step).
std::vector<double> parse_range(std::string_view text);

/// Least-squares polynomial of degree 2. Throws std::invalid_argument with fewer than 3 distinct x.
std::array<double, 3> fit_quadratic(const std::vector<double>& x, const std::vector<double>& y);

struct OffsetSetup {
  double target_fraction{0.9};  // GHG decrease vs baseline
  double pue{1.04};
  double grid_reduction{0.45};
  double lower{1.0};
  double upper{1e6};
};

struct OffsetResult {
  double factor{};
  ScenarioResult projection;
  int iterations{};
};

/**
 * Hardware efficiency factor at which the projected GHG index equals
 * 100 * (1 - target_fraction), with PUE and grid taken from `setup`.
 * Bisection on log(factor); throws UnreachableTarget when the target lies
 * outside the bracket.
 */
OffsetResult solve_hardware_efficiency(const Projector& projector, ScenarioParams scenario,
                                       const OffsetSetup& setup = {});

struct EcoScore {
  char grade{'A'};
  bool beyond_scale{false};
};

/// Upper bounds of grades A..G in kWh per task; each bound is exclusive.
inline constexpr std::array<double, 7> kEcoScoreThresholds{1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2};

/// Throws std::invalid_argument for negative or non-finite energy.
EcoScore eco_score(double energy_per_task_kwh);

}  // namespace aifp
