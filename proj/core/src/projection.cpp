#include "aifp/projection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "aifp/errors.hpp"

namespace aifp {

void ScenarioParams::validate() const {
  auto positive = [](double v, const char* field) {
    if (!std::isfinite(v) || !(v > 0.0)) throw ValidationError(field, "must be > 0");
  };
  auto rate = [](double v, const char* field) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError(field, "CAGR must be >= 0");
  };
  if (!std::isfinite(horizon_years) || horizon_years < 0.0) throw ValidationError("horizon_years", "must be >= 0");
  rate(genai_cagr, "genai_cagr");
  rate(agents_cagr, "agents_cagr");
  rate(cv_cagr, "cv_cagr");
  rate(nlp_cagr, "nlp_cagr");
  rate(tabular_cagr, "tabular_cagr");
  positive(model_size_factor, "model_size_factor");
  positive(output_token_factor, "output_token_factor");
  positive(model_size_exponent, "model_size_exponent");
  if (!std::isfinite(quantization_factor) || quantization_factor < 1.0) {
    throw ValidationError("quantization_factor", "must be >= 1");
  }
  if (!std::isfinite(hardware_efficiency_factor) || hardware_efficiency_factor < 1.0) {
    throw ValidationError("hardware_efficiency_factor", "must be >= 1");
  }
  if (!std::isfinite(pue) || pue < 1.0) throw ValidationError("pue", "must be >= 1");
  if (!std::isfinite(grid_reduction) || grid_reduction < 0.0 || grid_reduction >= 1.0) {
    throw ValidationError("grid_reduction", "must lie in [0, 1)");
  }
}

double ScenarioParams::cagr(UseCaseType t) const {
  switch (t) {
    case UseCaseType::Chat:
    case UseCaseType::Rag: return genai_cagr;
    case UseCaseType::Agents: return agents_cagr;
    case UseCaseType::Tabular: return tabular_cagr;
    case UseCaseType::ComputerVision: return cv_cagr;
    case UseCaseType::Nlp: return nlp_cagr;
  }
  return 0.0;
}

double usage_scale(double cagr, double years) {
  if (!std::isfinite(cagr) || cagr < 0.0) throw std::invalid_argument("usage_scale: CAGR must be >= 0");
  if (!std::isfinite(years) || years < 0.0) throw std::invalid_argument("usage_scale: years must be >= 0");
  return std::pow(1.0 + cagr, years);
}

std::vector<ScenarioParams> preset_scenarios() {
  constexpr double kGpuTrend = 4.4;
  constexpr double kSpecialisedChips = 4.8;

  ScenarioParams steady;
  steady.name = "steady";
  steady.label = "Steady ascent";
  steady.genai_cagr = 0.32;
  steady.agents_cagr = 0.35;
  steady.cv_cagr = 0.13;
  steady.nlp_cagr = 0.22;
  steady.tabular_cagr = 0.17;
  steady.model_size_factor = 3.0;
  steady.output_token_factor = 1.33;
  steady.hardware_efficiency_factor = kGpuTrend;
  steady.pue = 1.15;
  steady.grid_reduction = 0.24;

  ScenarioParams high = steady;
  high.name = "high";
  high.label = "High adoption without boundaries";
  high.genai_cagr = 0.47;
  high.agents_cagr = 0.55;
  high.cv_cagr = 0.20;
  high.nlp_cagr = 0.30;
  high.tabular_cagr = 0.24;
  high.output_token_factor = 3.0;

  ScenarioParams limited = steady;
  limited.name = "limited";
  limited.label = "Limited growth with efficiency breakthrough";
  limited.model_size_factor = 1.0;
  limited.output_token_factor = 1.13;
  limited.hardware_efficiency_factor = kGpuTrend * kSpecialisedChips;
  limited.quantization_factor = 1.2;
  limited.pue = 1.1;
  limited.grid_reduction = 0.45;

  ScenarioParams tech = high;
  tech.name = "tech";
  tech.label = "Technological breakthrough";
  tech.hardware_efficiency_factor = kGpuTrend * kSpecialisedChips;
  tech.quantization_factor = 1.2;
  tech.pue = 1.1;
  tech.grid_reduction = 0.45;

  ScenarioParams intermediate = steady;
  intermediate.name = "intermediate";
  intermediate.label = "Intermediate scenario";
  intermediate.genai_cagr = 0.40;
  intermediate.agents_cagr = 0.45;
  intermediate.cv_cagr = 0.165;
  intermediate.nlp_cagr = 0.26;
  intermediate.tabular_cagr = 0.205;
  intermediate.model_size_factor = 2.0;
  intermediate.output_token_factor = 2.0;

  return {steady, high, limited, tech, intermediate};
}

ScenarioParams identity_scenario(double reference_pue) {
  ScenarioParams s;
  s.name = "identity";
  s.label = "Baseline";
  s.pue = reference_pue;
  return s;
}

ScenarioParams find_scenario(const std::vector<ScenarioParams>& presets, std::string_view name) {
  for (const auto& s : presets) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

Projector::Projector(PortfolioSpec spec, Catalog catalog, EmissionFactorTable factors)
    : spec_(std::move(spec)), catalog_(std::move(catalog)), factors_(std::move(factors)) {
  baseline_ = aggregate_portfolio(spec_, catalog_, factors_);
}

AnnualFootprint Projector::footprint(const ScenarioParams& scenario) const {
  scenario.validate();
  PortfolioSpec spec = spec_;
  spec.datacenter.pue = scenario.pue;

  PortfolioAdjustments adjust;
  for (auto t : kUseCaseTypes) {
    adjust.usage[static_cast<std::size_t>(t)] = usage_scale(scenario.cagr(t), scenario.horizon_years);
  }
  const double hw = scenario.hardware_efficiency_factor;
  adjust.compute.model = std::pow(scenario.model_size_factor, scenario.model_size_exponent) *
                         scenario.output_token_factor / (hw * scenario.quantization_factor);
  adjust.compute.tool = 1.0 / hw;
  adjust.compute.traditional = 1.0 / hw;

  return aggregate_portfolio(spec, catalog_, factors_.with_grid_scaled(1.0 - scenario.grid_reduction), adjust);
}

ScenarioResult Projector::project(const ScenarioParams& scenario) const {
  const AnnualFootprint fp = footprint(scenario);
  ScenarioResult out;
  out.scenario = scenario.name;
  out.absolute = fp.total;
  for (auto c : kCriteria) {
    const double base = baseline_.total[c];
    out.index[c] = base > 0.0 ? 100.0 * (fp.total[c] / base) : 0.0;
  }
  out.use_cases = fp.use_cases;
  out.genai_share = fp.use_cases > 0.0 ? fp.genai_use_cases / fp.use_cases : 0.0;
  return out;
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::ModelSizeFactor: return "model_size_factor";
    case SweepParameter::OutputTokenFactor: return "output_token_factor";
    case SweepParameter::AgentsCagr: return "agents_cagr";
    case SweepParameter::GenaiCagr: return "genai_cagr";
    case SweepParameter::HardwareEfficiency: return "hardware_efficiency_factor";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(std::string_view key) {
  for (auto p : {SweepParameter::ModelSizeFactor, SweepParameter::OutputTokenFactor, SweepParameter::AgentsCagr,
                 SweepParameter::GenaiCagr, SweepParameter::HardwareEfficiency}) {
    if (to_string(p) == key) return p;
  }
  throw std::invalid_argument("unknown sweep parameter '" + std::string(key) + "'");
}

double get_parameter(const ScenarioParams& s, SweepParameter p) {
  switch (p) {
    case SweepParameter::ModelSizeFactor: return s.model_size_factor;
    case SweepParameter::OutputTokenFactor: return s.output_token_factor;
    case SweepParameter::AgentsCagr: return s.agents_cagr;
    case SweepParameter::GenaiCagr: return s.genai_cagr;
    case SweepParameter::HardwareEfficiency: return s.hardware_efficiency_factor;
  }
  return 0.0;
}

void set_parameter(ScenarioParams& s, SweepParameter p, double value) {
  switch (p) {
    case SweepParameter::ModelSizeFactor: s.model_size_factor = value; break;
    case SweepParameter::OutputTokenFactor: s.output_token_factor = value; break;
    case SweepParameter::AgentsCagr: s.agents_cagr = value; break;
    case SweepParameter::GenaiCagr: s.genai_cagr = value; break;
    case SweepParameter::HardwareEfficiency: s.hardware_efficiency_factor = value; break;
  }
}

std::array<double, 3> fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_quadratic: size mismatch");
  if (std::set<double>(x.begin(), x.end()).size() < 3) {
    throw std::invalid_argument("fit_quadratic: need at least 3 distinct x values");
  }
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());

  // Normal equations in t = x - mean.
  double s[5] = {};
  double r[3] = {};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] - mean;
    double p = 1.0;
    for (int k = 0; k < 5; ++k) {
      s[k] += p;
      if (k < 3) r[k] += p * y[i];
      p *= t;
    }
  }
  double m[3][4] = {{s[0], s[1], s[2], r[0]}, {s[1], s[2], s[3], r[1]}, {s[2], s[3], s[4], r[2]}};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  const double a = m[0][3] / m[0][0];
  const double b = m[1][3] / m[1][1];
  const double c = m[2][3] / m[2][2];
  return {a - b * mean + c * mean * mean, b - 2.0 * c * mean, c};
}

std::vector<double> parse_range(std::string_view text) {
  const std::string s(text);
  const auto first = s.find(':');
  const auto second = first == std::string::npos ? std::string::npos : s.find(':', first + 1);
  if (second == std::string::npos) throw std::invalid_argument("range must be lo:hi:step");
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  try {
    std::size_t used = 0;
    lo = std::stod(s.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("lo");
    const std::string hs = s.substr(first + 1, second - first - 1);
    hi = std::stod(hs, &used);
    if (used != hs.size()) throw std::invalid_argument("hi");
    const std::string ss = s.substr(second + 1);
    step = std::stod(ss, &used);
    if (used != ss.size()) throw std::invalid_argument("step");
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be lo:hi:step with numeric bounds");
  }
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("range needs step > 0 and hi >= lo");
  }
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
  if (n > 100000) throw std::invalid_argument("range has too many points");
  std::vector<double> out;
  for (long i = 0; i <= n; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi + 0.5 * step) break;
    out.push_back(v);
  }
  return out;
}

SweepResult sensitivity_sweep(const Projector& projector, const ScenarioParams& scenario, SweepParameter parameter,
                              const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("sensitivity_sweep: empty value list");
  SweepResult out;
  out.parameter = parameter;
  out.values = values;
  out.points.reserve(values.size());
  std::vector<double> energy;
  for (double v : values) {
    ScenarioParams s = scenario;
    set_parameter(s, parameter, v);
    out.points.push_back(projector.project(s));
    energy.push_back(out.points.back().index.final_energy);
  }
  const bool cagr = parameter == SweepParameter::AgentsCagr || parameter == SweepParameter::GenaiCagr;
  if (cagr && std::set<double>(values.begin(), values.end()).size() >= 3) {
    out.energy_fit = fit_quadratic(values, energy);
  }
  return out;
}

OffsetResult solve_hardware_efficiency(const Projector& projector, ScenarioParams scenario,
                                       const OffsetSetup& setup) {
  if (!(setup.target_fraction > 0.0 && setup.target_fraction < 1.0)) {
    throw std::invalid_argument("target fraction must lie in (0, 1)");
  }
  if (!(setup.lower >= 1.0 && setup.upper > setup.lower)) throw std::invalid_argument("invalid bracket");
  scenario.pue = setup.pue;
  scenario.grid_reduction = setup.grid_reduction;
  const double target = 100.0 * (1.0 - setup.target_fraction);

  auto run = [&](double factor) {
    scenario.hardware_efficiency_factor = factor;
    return projector.project(scenario);
  };

  ScenarioResult at_lo = run(setup.lower);
  if (at_lo.index.gwp <= target) {
    return {setup.lower, at_lo, 0};
  }
  ScenarioResult at_hi = run(setup.upper);
  if (at_hi.index.gwp > target) {
    throw UnreachableTarget("GHG index " + std::to_string(at_hi.index.gwp) + " at hardware factor " +
                            std::to_string(setup.upper) + " stays above target " + std::to_string(target));
  }

  double lo = std::log(setup.lower);
  double hi = std::log(setup.upper);
  OffsetResult best{setup.upper, at_hi, 0};
  for (int i = 1; i <= 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ScenarioResult r = run(std::exp(mid));
    best = {std::exp(mid), r, i};
    if (std::abs(r.index.gwp - target) <= 1e-9 * target || hi - lo < 1e-14) break;
    if (r.index.gwp > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return best;
}

EcoScore eco_score(double energy_per_task_kwh) {
  if (!std::isfinite(energy_per_task_kwh) || energy_per_task_kwh < 0.0) {
    throw std::invalid_argument("eco_score: energy must be finite and >= 0");
  }
  for (std::size_t i = 0; i < kEcoScoreThresholds.size(); ++i) {
    if (energy_per_task_kwh < kEcoScoreThresholds[i]) return {static_cast<char>('A' + i), false};
  }
  return {'G', true};
}

}  // namespace aifp
