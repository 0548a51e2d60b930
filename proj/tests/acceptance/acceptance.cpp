// Acceptance report: one PASS/FAIL line per criterion.
//
//   aifp_acceptance [--known-red name,name,...]
//
// Exit status is 0 when every criterion outside the known-red list passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aifp/defaults.hpp"
#include "aifp/errors.hpp"
#include "aifp/hardware.hpp"
#include "aifp/io.hpp"
#include "aifp/lca.hpp"
#include "aifp/portfolio.hpp"
#include "aifp/projection.hpp"
#include "aifp/usecase.hpp"
#include "aifp/wafer.hpp"

using namespace aifp;

namespace {

// Tolerances.
constexpr double kEnergyMatrixTol = 0.05;
constexpr double kEnergyMatrixSeconds = 1.0;
constexpr double kImpactMatrixTol = 0.05;
constexpr double kPowerTol = 0.01;
constexpr double kSiliconTol = 0.15;
constexpr double kDiesTol = 0.10;
constexpr double kYieldUlps = 4.0;
constexpr double kPortfolioTol = 0.20;
constexpr double kShareTolPoints = 0.05;
constexpr double kUsageTol = 0.005;  // half a unit in the last printed digit
constexpr double kIndexTol = 0.20;
constexpr double kGhgRatioTol = 0.03;
constexpr double kModelSizePointsTol = 0.05;
constexpr double kAgentsTol = 0.03;
constexpr double kOffsetTol = 0.15;
constexpr double kOffsetRatioTol = 0.02;
constexpr double kOffsetTargetTol = 0.001;
constexpr double kLinearityTol = 1e-12;

double rel(double got, double want) { return std::abs(got / want - 1.0); }

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Outcome {
  bool pass{true};
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Check {
  const char* name;
  std::function<Outcome()> run;
};

struct Inputs {
  EmissionFactorTable factors = default_factors();
  Catalog catalog = default_catalog();
  PortfolioSpec portfolio = default_portfolio();
  std::vector<ScenarioParams> presets = preset_scenarios();
};

const Inputs& inputs() {
  static const Inputs in;
  return in;
}

UseCaseCluster cluster_of(UseCaseType uc, ModelSize size) {
  const AiType family = family_of(uc);
  return {family, uc, family == AiType::GenAI ? size : ModelSize::NA, UsersClass::Low, FreqClass::Low};
}

struct RefRow {
  UseCaseType uc;
  ModelSize size;
};

constexpr std::array<RefRow, 12> kRows{{
    {UseCaseType::Chat, ModelSize::Low},     {UseCaseType::Chat, ModelSize::Medium},
    {UseCaseType::Chat, ModelSize::High},    {UseCaseType::Rag, ModelSize::Low},
    {UseCaseType::Rag, ModelSize::Medium},   {UseCaseType::Rag, ModelSize::High},
    {UseCaseType::Agents, ModelSize::Low},   {UseCaseType::Agents, ModelSize::Medium},
    {UseCaseType::Agents, ModelSize::High},  {UseCaseType::Tabular, ModelSize::NA},
    {UseCaseType::ComputerVision, ModelSize::NA}, {UseCaseType::Nlp, ModelSize::NA},
}};

// Reference total energy per inference, kWh.
constexpr std::array<double, 12> kRefEnergy{9.31e-05, 1.55e-03, 1.73e-02, 1.56e-04, 2.64e-03, 2.99e-02,
                                            4.97e-04, 8.54e-03, 9.58e-02, 3.46e-08, 3.17e-04, 3.70e-06};

// Reference impacts per inference: operational/embodied gwp, water, primary energy, adp.
constexpr std::array<std::array<double, 8>, 12> kRefImpacts{{
    {5.55e-05, 3.11e-06, 2.72e-06, 1.06e-06, 1.20e-03, 4.61e-05, 1.99e-12, 1.59e-11},
    {9.26e-04, 5.19e-05, 4.54e-05, 1.77e-05, 2.01e-02, 7.68e-04, 3.32e-11, 2.65e-10},
    {1.03e-02, 5.79e-04, 5.06e-04, 1.98e-04, 2.24e-01, 8.57e-03, 3.70e-10, 2.96e-09},
    {9.28e-05, 5.17e-06, 4.55e-06, 1.77e-06, 2.01e-03, 7.65e-05, 3.32e-12, 2.80e-11},
    {1.58e-03, 8.82e-05, 7.72e-05, 3.02e-05, 3.41e-02, 1.31e-03, 5.64e-11, 4.52e-10},
    {1.79e-02, 1.00e-03, 8.75e-04, 3.42e-04, 3.87e-01, 1.48e-02, 6.40e-10, 5.11e-09},
    {2.96e-04, 1.66e-05, 1.45e-05, 5.67e-06, 6.42e-03, 2.46e-04, 1.06e-11, 8.96e-11},
    {5.09e-03, 2.85e-04, 2.49e-04, 9.75e-05, 1.10e-01, 4.23e-03, 1.82e-10, 1.46e-09},
    {5.72e-02, 3.20e-03, 2.80e-03, 1.09e-03, 1.24e+00, 4.74e-02, 2.05e-09, 1.64e-08},
    {2.06e-08, 1.37e-09, 1.01e-09, 4.40e-10, 4.47e-07, 2.05e-08, 7.39e-16, 3.17e-13},
    {1.89e-04, 8.75e-07, 9.26e-06, 2.98e-07, 4.09e-03, 1.30e-05, 6.77e-12, 1.54e-11},
    {2.20e-06, 1.22e-07, 1.08e-07, 4.17e-08, 4.78e-05, 1.81e-06, 7.90e-14, 2.24e-12},
}};

constexpr std::array<const char*, 8> kImpactColumns{"op gwp", "emb gwp", "op water", "emb water",
                                                    "op pe",  "emb pe",  "op adp",   "emb adp"};

std::string row_label(const RefRow& r) {
  std::string s(to_string(r.uc));
  if (r.size != ModelSize::NA) s = std::string(to_string(r.size)) + " " + s;
  return s;
}

Outcome energy_matrix() {
  const auto& in = inputs();
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  ModelInputs mi{in.factors, in.catalog, in.portfolio, in.presets};
  const auto rows = cluster_matrix(mi);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(rows.size() == 192, "expected 192 clusters");
  double worst = 0.0;
  std::string worst_at;
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    const auto c = cluster_of(kRows[i].uc, kRows[i].size);
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const ClusterRow& r) { return r.cluster == c; });
    const double err = rel(it->energy.total, kRefEnergy[i]);
    if (err > worst) {
      worst = err;
      worst_at = row_label(kRows[i]);
    }
    o.require(err <= kEnergyMatrixTol, row_label(kRows[i]) + fmt(" off by %.1f%%", 100 * err));
  }
  o.require(seconds < kEnergyMatrixSeconds, fmt("took %.3f s", seconds));
  o.note("worst " + worst_at + fmt(" %.2f%%", 100 * worst) + fmt(", %.1f ms", 1e3 * seconds));
  return o;
}

Outcome impact_matrix() {
  const auto& in = inputs();
  Outcome o;
  int failed = 0;
  double worst = 0.0;
  std::string worst_at;
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    const auto imp = inference_impact(cluster_of(kRows[i].uc, kRows[i].size), in.catalog, in.factors,
                                      in.portfolio.datacenter);
    const std::array<double, 8> got{imp.operational.gwp,          imp.embodied.gwp, imp.operational.water,
                                    imp.embodied.water,           imp.operational.primary_energy,
                                    imp.embodied.primary_energy,  imp.operational.adp, imp.embodied.adp};
    for (std::size_t k = 0; k < 8; ++k) {
      const double err = rel(got[k], kRefImpacts[i][k]);
      if (err > worst) {
        worst = err;
        worst_at = row_label(kRows[i]) + " " + kImpactColumns[k];
      }
      if (err > kImpactMatrixTol) {
        ++failed;
        o.require(false, row_label(kRows[i]) + " " + kImpactColumns[k] + fmt(" off by %.1f%%", 100 * err));
      }
    }
  }
  o.note(fmt("%.0f/96 within tolerance", 96 - failed) + ", worst " + worst_at + fmt(" %.2f%%", 100 * worst));
  return o;
}

Outcome power_models() {
  Outcome o;
  const double compute = server_power(compute_server_config());
  const double storage = server_power(storage_server_config());
  const double vcpu = inputs().factors.at(Capacity::VcpuHour).it_power;
  const double vgpu = vgpu_power_share(compute, 96, vcpu, 56);
  o.require(rel(compute, 3110.0) <= kPowerTol, fmt("compute %.1f W", compute));
  o.require(rel(storage, 1378.0) <= kPowerTol, fmt("storage %.1f W", storage));
  o.require(rel(vgpu, 50.1) <= kPowerTol, fmt("vGPU %.2f W", vgpu));
  o.note(fmt("compute %.1f W", compute) + fmt(", storage %.1f W", storage) + fmt(", vGPU %.2f W", vgpu));
  return o;
}

Outcome vgpu_counts() {
  Outcome o;
  const auto& models = inputs().catalog.models;
  const std::array<int, 3> want{3, 19, 106};
  std::string got;
  const std::array<ModelSize, 3> sizes{ModelSize::Low, ModelSize::Medium, ModelSize::High};
  for (std::size_t i = 0; i < 3; ++i) {
    const ModelProfile& m = models.at(sizes[i]);
    const int n = vgpu_count(m);
    o.require(n == want[i], m.name + " gives " + std::to_string(n));
    got += (i ? "/" : "") + std::to_string(n);
  }
  o.note(got);
  return o;
}

// Mean number of whole dies on a square grid, averaged over 12x12 grid offsets.
double packed_dies(const WaferGeometry& g) {
  const double pitch = std::sqrt(g.chip_area) + g.kerf;
  const double r = g.wafer_diameter / 2.0;
  const int n = static_cast<int>(g.wafer_diameter / pitch) + 3;
  constexpr int kOffsets = 12;
  long total = 0;
  for (int ox = 0; ox < kOffsets; ++ox) {
    for (int oy = 0; oy < kOffsets; ++oy) {
      for (int i = -n; i < n; ++i) {
        for (int j = -n; j < n; ++j) {
          const double x = (i + double(ox) / kOffsets) * pitch;
          const double y = (j + double(oy) / kOffsets) * pitch;
          bool inside = true;
          for (double dx : {0.0, pitch}) {
            for (double dy : {0.0, pitch}) inside = inside && (x + dx) * (x + dx) + (y + dy) * (y + dy) <= r * r;
          }
          total += inside;
        }
      }
    }
  }
  return double(total) / (kOffsets * kOffsets);
}

Outcome wafer_math() {
  Outcome o;
  const std::array<std::pair<double, double>, 2> chips{{{kCpuDieArea, 4.31e-3}, {kGpuDieArea, 4.83e-2}}};
  const char* names[] = {"CPU", "GPU"};
  for (std::size_t i = 0; i < chips.size(); ++i) {
    WaferGeometry g;
    g.chip_area = chips[i].first;
    g.defect_density = calibrate_defect_density(g, chips[i].second);
    const double area = silicon_area_needed(g);
    o.require(rel(area, chips[i].second) <= kSiliconTol, std::string(names[i]) + fmt(" area %.3e m2", area));

    const double analytic = std::exp(-std::sqrt(g.defect_density * g.chip_area));
    const double y = defect_yield(g);
    o.require(std::abs(y - analytic) <= kYieldUlps * std::numeric_limits<double>::epsilon() * analytic,
              std::string(names[i]) + " yield differs from closed form");

    const double formula = dies_per_wafer(g);
    const double packed = packed_dies(g);
    o.require(rel(formula, packed) <= kDiesTol,
              std::string(names[i]) + fmt(" dies %.1f", formula) + fmt(" vs packing %.1f", packed));
    o.note(std::string(names[i]) + fmt(" D=%.3e/mm2", g.defect_density) + fmt(" area %.3e m2", area) +
           fmt(" dies %.1f", formula) + fmt("/%.1f", packed));
  }
  return o;
}

Outcome portfolio_baseline() {
  const auto& in = inputs();
  Outcome o;
  const auto fp = aggregate_portfolio(in.portfolio, in.catalog, in.factors);
  const double genai = fp.of(AiType::GenAI).final_energy / fp.total.final_energy;
  const ImpactVector emb = fp.of(Stage::Embodied);
  const double s_gwp = emb.gwp / fp.total.gwp;
  const double s_adp = emb.adp / fp.total.adp;
  const double s_water = emb.water / fp.total.water;
  const double global = scale_to_global2000(fp.total).final_energy;
  o.require(rel(fp.total.final_energy, 3.9e6) <= kPortfolioTol, fmt("energy %.3e kWh", fp.total.final_energy));
  o.require(rel(fp.total.gwp, 2.48e6) <= kPortfolioTol, fmt("gwp %.3e kg", fp.total.gwp));
  o.require(genai >= 0.99, fmt("GenAI share %.4f", genai));
  o.require(std::abs(s_gwp - 0.05) <= kShareTolPoints, fmt("embodied gwp share %.3f", s_gwp));
  o.require(std::abs(s_adp - 0.89) <= kShareTolPoints, fmt("embodied adp share %.3f", s_adp));
  o.require(std::abs(s_water - 0.30) <= kShareTolPoints, fmt("embodied water share %.3f", s_water));
  o.require(rel(global, 7.8e9) <= kPortfolioTol, fmt("x2000 %.3e kWh", global));
  o.note(fmt("%.3e kWh", fp.total.final_energy) + fmt(", %.3e kgCO2eq", fp.total.gwp) +
         fmt(", GenAI %.2f%%", 100 * genai) + fmt(", embodied gwp/adp/water %.3f", s_gwp) + fmt("/%.3f", s_adp) +
         fmt("/%.3f", s_water) + fmt(", x2000 %.2f TWh", global * 1e-9));
  return o;
}

Outcome usage_scaling() {
  Outcome o;
  const double a = usage_scale(0.32, 6);
  const double b = usage_scale(0.55, 6);
  o.require(std::abs(a - 5.29) <= kUsageTol, fmt("1.32^6 = %.4f", a));
  o.require(std::abs(b - 13.87) <= kUsageTol, fmt("1.55^6 = %.4f", b));
  o.note(fmt("%.4f", a) + fmt(", %.4f", b));
  return o;
}

const std::array<std::pair<const char*, double>, 5> kRefIndex{
    {{"steady", 552}, {"high", 2440}, {"limited", 30}, {"tech", 402}, {"intermediate", 755}}};

Outcome scenario_projection() {
  const auto& in = inputs();
  Outcome o;
  const Projector pr(in.portfolio, in.catalog, in.factors);
  std::vector<ScenarioResult> res;
  std::string summary;
  for (const auto& [name, ref] : kRefIndex) {
    const auto s = find_scenario(in.presets, name);
    res.push_back(pr.project(s));
    const auto& r = res.back();
    const double err = rel(r.index.final_energy, ref);
    o.require(err <= kIndexTol, std::string(name) + fmt(" energy %.1f", r.index.final_energy) + fmt(" vs %.0f", ref));
    const double ratio = r.index.gwp / (r.index.final_energy * (1.0 - s.grid_reduction));
    o.require(std::abs(ratio - 1.0) <= kGhgRatioTol, std::string(name) + fmt(" ghg/(energy*grid) = %.4f", ratio));
    summary += std::string(summary.empty() ? "" : ", ") + name + fmt(" %.1f", r.index.final_energy) +
               fmt("/%.3f", ratio);
  }
  // reference rank order per criterion: high > intermediate > steady > tech > limited
  const std::array<int, 5> order{1, 4, 0, 3, 2};
  for (Criterion c : kCriteria) {
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      o.require(res[order[k]].index[c] > res[order[k + 1]].index[c],
                std::string("order broken on ") + std::string(to_string(c)));
    }
  }
  o.note(summary);
  return o;
}

Outcome sensitivity() {
  const auto& in = inputs();
  Outcome o;
  const Projector pr(in.portfolio, in.catalog, in.factors);
  const auto base = find_scenario(in.presets, "intermediate");
  const double e0 = pr.project(base).index.final_energy;

  for (double d : {-0.1, 0.1}) {
    ScenarioParams s = base;
    s.model_size_factor *= 1.0 + d;
    const double pts = 100.0 * (pr.project(s).index.final_energy / e0 - 1.0);
    o.require(std::abs(pts - 100.0 * d) <= kModelSizePointsTol, fmt("model size gives %+.3f%%", pts));
  }

  const std::vector<double> cagr{0.25, 0.35, 0.45, 0.55, 0.65};
  const std::array<double, 5> ref{512, 612, 755, 958, 1237};
  const auto sw = sensitivity_sweep(pr, base, SweepParameter::AgentsCagr, cagr);
  std::string pts;
  for (std::size_t i = 0; i < cagr.size(); ++i) {
    const double e = sw.points[i].index.final_energy;
    o.require(rel(e, ref[i]) <= kAgentsTol, fmt("agents %.2f", cagr[i]) + fmt(" gives %.1f", e) + fmt(" vs %.0f", ref[i]));
    pts += fmt(i ? "/%.1f" : "%.1f", e);
  }

  // affine in (1+c)^6: two end points predict the interior
  auto u = [&](double c) { return usage_scale(c, base.horizon_years); };
  const double e_lo = sw.points.front().index.final_energy;
  const double e_hi = sw.points.back().index.final_energy;
  const double slope = (e_hi - e_lo) / (u(cagr.back()) - u(cagr.front()));
  double affine_err = 0.0;
  for (std::size_t i = 1; i + 1 < cagr.size(); ++i) {
    const double pred = e_lo + slope * (u(cagr[i]) - u(cagr.front()));
    affine_err = std::max(affine_err, rel(sw.points[i].index.final_energy, pred));
  }
  o.require(affine_err <= 1e-9, fmt("affine residual %.2e", affine_err));

  o.require(sw.energy_fit.has_value() && (*sw.energy_fit)[2] > 0.0, "fit curvature not positive");
  o.note("agents sweep " + pts + fmt(", affine residual %.1e", affine_err) +
         (sw.energy_fit ? fmt(", curvature %.0f", (*sw.energy_fit)[2]) : std::string()));
  return o;
}

Outcome offset_solver() {
  const auto& in = inputs();
  Outcome o;
  const Projector pr(in.portfolio, in.catalog, in.factors);
  const auto inter = find_scenario(in.presets, "intermediate");
  const auto high = find_scenario(in.presets, "high");
  const OffsetSetup setup;
  const auto a = solve_hardware_efficiency(pr, inter, setup);
  const auto b = solve_hardware_efficiency(pr, high, setup);
  o.require(rel(a.factor, 175.0) <= kOffsetTol, fmt("intermediate factor %.1f", a.factor));
  o.require(rel(b.factor, 565.0) <= kOffsetTol, fmt("high factor %.1f", b.factor));
  const double ratio = b.factor / a.factor;
  const double energy_ratio = pr.project(high).index.final_energy / pr.project(inter).index.final_energy;
  o.require(rel(ratio, energy_ratio) <= kOffsetRatioTol, fmt("factor ratio %.4f", ratio));

  const double goal = 100.0 * (1.0 - setup.target_fraction);
  for (const auto* r : {&a, &b}) {
    ScenarioParams s = r == &a ? inter : high;
    s.pue = setup.pue;
    s.grid_reduction = setup.grid_reduction;
    s.hardware_efficiency_factor = r->factor;
    const double ghg = pr.project(s).index.gwp;
    o.require(rel(ghg, goal) <= kOffsetTargetTol, fmt("re-projected ghg %.4f", ghg));
  }
  o.note(fmt("%.1f", a.factor) + fmt(" / %.1f", b.factor) + fmt(", ratio %.4f", ratio) +
         fmt(" vs energy %.4f", energy_ratio));
  return o;
}

// Grade by decade: A below 1e-8, one letter per power of ten up to G.
char grade_by_decade(double kwh) {
  const int decade = static_cast<int>(std::floor(std::log10(kwh)));
  return static_cast<char>('A' + std::clamp(decade + 9, 0, 6));
}

Outcome eco_scoring() {
  Outcome o;
  const std::array<double, 7> bounds{1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2};
  o.require(kEcoScoreThresholds == bounds, "thresholds differ");
  std::string grades;
  for (double v : kRefEnergy) {
    const char want = grade_by_decade(v);
    const EcoScore got = eco_score(v);
    o.require(got.grade == want, fmt("%.2e", v) + " graded " + got.grade + ", expected " + want);
    grades += got.grade;
  }
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const char below = static_cast<char>('A' + i);
    const EcoScore at = eco_score(bounds[i]);
    const EcoScore under = eco_score(std::nextafter(bounds[i], 0.0));
    o.require(under.grade == below && !under.beyond_scale, fmt("just under %.0e", bounds[i]));
    const char above = i + 1 < bounds.size() ? static_cast<char>(below + 1) : 'G';
    o.require(at.grade == above && at.beyond_scale == (i + 1 == bounds.size()), fmt("at %.0e", bounds[i]));
  }
  o.note("reference totals graded " + grades);
  return o;
}

Outcome property_suite() {
  const auto& in = inputs();
  Outcome o;
  const auto& dc = in.portfolio.datacenter;

  // linearity
  double lin = 0.0;
  ResourceUsage u{0.3, 0.07, 12.0, 0.004};
  for (double a : {0.5, 3.0, 1e4}) {
    const ImpactVector op1 = operational_impact(0.02, dc, in.factors, 1e-4);
    const ImpactVector opa = operational_impact(0.02 * a, dc, in.factors, 1e-4 * a);
    const ImpactVector em1 = embodied_impact(u, in.factors);
    const ImpactVector ema = embodied_impact(u * a, in.factors);
    for (Criterion c : kCriteria) {
      if (op1[c] != 0.0) lin = std::max(lin, rel(opa[c], a * op1[c]));
      if (em1[c] != 0.0) lin = std::max(lin, rel(ema[c], a * em1[c]));
    }
  }
  o.require(lin <= kLinearityTol, fmt("linearity residual %.2e", lin));

  // partition re-summation
  const auto fp = aggregate_portfolio(in.portfolio, in.catalog, in.factors);
  auto same = [](const ImpactVector& x, const ImpactVector& y) {
    for (Criterion c : kCriteria) {
      if (x[c] != y[c]) return false;
    }
    return true;
  };
  const bool exact =
      same(fp.of(Stage::Embodied) + fp.of(Stage::Operational), fp.total) &&
      same(fp.of(Step::FineTuning) + fp.of(Step::Inference), fp.total) &&
      same(fp.of(AiType::GenAI) + fp.of(AiType::Traditional), fp.total) &&
      same(fp.of(Component::ComputeVcpu) + fp.of(Component::ComputeVgpu) + fp.of(Component::Storage) +
               fp.of(Component::Network),
           fp.total) &&
      same(fp.of(UseCaseType::Chat) + fp.of(UseCaseType::Rag) + fp.of(UseCaseType::Agents) +
               fp.of(UseCaseType::Tabular) + fp.of(UseCaseType::ComputerVision) + fp.of(UseCaseType::Nlp),
           fp.total);
  o.require(exact, "partitions do not re-sum exactly");

  // identity scenario
  const Projector pr(in.portfolio, in.catalog, in.factors);
  const auto id = pr.project(identity_scenario(in.portfolio.datacenter.pue));
  bool hundred = true;
  for (Criterion c : kCriteria) hundred = hundred && id.index[c] == 100.0;
  o.require(hundred, "identity index differs from 100");

  // monotonicity of server power
  bool mono = true;
  for (const ServerConfig& base : {compute_server_config(), storage_server_config()}) {
    const double p0 = server_power(base);
    std::vector<double ServerConfig::*> fields{
        &ServerConfig::n_cpu,       &ServerConfig::load_cpu,    &ServerConfig::max_p_cpu,
        &ServerConfig::min_p_cpu,   &ServerConfig::orchestrator_overhead,
        &ServerConfig::n_gpu,       &ServerConfig::load_gpu,    &ServerConfig::max_p_gpu,
        &ServerConfig::gpu_overhead, &ServerConfig::n_disk,     &ServerConfig::p_disk,
        &ServerConfig::load_disk,   &ServerConfig::replication, &ServerConfig::disk_overhead,
        &ServerConfig::n_ram,       &ServerConfig::load_ram,    &ServerConfig::p_ram,
        &ServerConfig::ram_overhead};
    for (auto f : fields) {
      ServerConfig c = base;
      c.*f = (f == &ServerConfig::load_cpu || f == &ServerConfig::load_gpu || f == &ServerConfig::load_disk ||
              f == &ServerConfig::load_ram)
                 ? std::min(1.0, c.*f + 0.1)
                 : c.*f + 1.0;
      if (c.min_p_cpu > c.max_p_cpu) c.max_p_cpu = c.min_p_cpu;
      mono = mono && server_power(c) >= p0;
    }
  }
  o.require(mono, "server power decreased");

  // monotonicity of defect yield
  WaferGeometry g;
  g.chip_area = kGpuDieArea;
  double prev = 2.0;
  bool strict = true;
  for (double d = 0.0; d <= 0.05; d += 0.001) {
    g.defect_density = d;
    const double y = defect_yield(g);
    strict = strict && y < prev && y > 0.0 && y <= 1.0;
    prev = y;
  }
  o.require(strict, "defect yield not strictly decreasing");
  o.note(fmt("linearity %.1e", lin) + ", partitions exact, identity 100, monotone");
  return o;
}

std::set<std::string> split(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> known_red;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--known-red") == 0 && i + 1 < argc) {
      known_red = split(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--known-red name,...]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Check> criteria{
      {"energy-matrix", energy_matrix},   {"impact-matrix", impact_matrix},
      {"power-models", power_models},     {"vgpu-counts", vgpu_counts},
      {"wafer-math", wafer_math},         {"portfolio", portfolio_baseline},
      {"usage-scaling", usage_scaling},   {"scenario-projection", scenario_projection},
      {"sensitivity", sensitivity},       {"offset-solver", offset_solver},
      {"eco-score", eco_scoring},         {"property-suite", property_suite},
  };

  int passed = 0;
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const bool red = known_red.count(c.name) > 0;
    std::printf("%s %-20s %s%s\n", r.pass ? "PASS" : "FAIL", c.name, r.detail.c_str(),
                !r.pass && red ? " [known]" : "");
    passed += r.pass;
    if (!r.pass && !red) ++unexpected;
  }
  std::printf("%d/%zu criteria passed\n", passed, criteria.size());
  return unexpected == 0 ? 0 : 1;
}
