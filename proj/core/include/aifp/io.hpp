#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aifp/factors.hpp"
#include "aifp/portfolio.hpp"
#include "aifp/projection.hpp"
#include "aifp/usecase.hpp"

namespace aifp {

/// Everything a run needs, validated.
struct ModelInputs {
  EmissionFactorTable factors;
  Catalog catalog;
  PortfolioSpec portfolio;
  std::vector<ScenarioParams> scenarios;
};

struct RunConfig {
  std::string factors_path;
  std::string catalog_path;
  std::string portfolio_path;
  std::string scenarios_path;
  std::optional<std::map<Region, double>> region_blend;
};

/// $AIFP_DATA_DIR, then the installed data directory, then ./data.
std::string default_data_dir();

/// Default file names inside a data directory.
RunConfig default_run_config(const std::string& data_dir);

/**
 * Read, parse and validate every input file. Throws ValidationError whose
 * file() names the document and field() the JSON path of the first problem.
 */
ModelInputs load_and_validate(const RunConfig& config);

/// Built-in defaults, identical to the shipped data bundle.
ModelInputs default_inputs();

// Documents. Parsers validate and throw ValidationError(field path, message, file).
EmissionFactorTable parse_factors(std::string_view text, const std::string& file = {});
Catalog parse_catalog(std::string_view text, const std::string& file = {});
PortfolioSpec parse_portfolio(std::string_view text, const std::string& file = {});
std::vector<ScenarioParams> parse_scenarios(std::string_view text, const std::string& file = {});
/// A single scenario object, or a preset name given as a JSON string.
ScenarioParams parse_scenario(std::string_view text, const std::vector<ScenarioParams>& presets,
                              const std::string& file = {});
/// "a:0.45,b:0.55" style region blend; throws ValidationError.
std::map<Region, double> parse_region_blend(std::string_view text);

std::string dump_factors(const EmissionFactorTable& t);
std::string dump_catalog(const Catalog& c);
std::string dump_portfolio(const PortfolioSpec& p);
std::string dump_scenarios(const std::vector<ScenarioParams>& s);

enum class Format { Table, Json, Csv };
/// Throws std::invalid_argument.
Format parse_format(std::string_view key);

/// One line of the per-inference matrix.
struct ClusterRow {
  UseCaseCluster cluster;
  EnergyBreakdown energy;
  StageImpacts impacts;
  EcoScore score;
};

std::vector<ClusterRow> cluster_matrix(const ModelInputs& inputs);

struct OffsetReport {
  std::string scenario;
  double target_fraction{};
  double pue{};
  double grid_reduction{};
  OffsetResult result;
};

// Renderers are deterministic; JSON documents end with a newline and keep full double precision,
// CSV uses '.' and %.2e for every real value.
std::string render_clusters(const std::vector<ClusterRow>& rows, Format format);
std::string render_footprint(const AnnualFootprint& fp, Format format);
std::string render_scenarios(const std::vector<ScenarioResult>& results, Format format);
std::string render_sweep(const SweepResult& sweep, Format format);
std::string render_offset(const OffsetReport& report, Format format);
std::string render_score(double kwh, const EcoScore& score, Format format);

// Inverses of the JSON renderers.
std::vector<ClusterRow> clusters_from_json(std::string_view text);
AnnualFootprint footprint_from_json(std::string_view text);
std::vector<ScenarioResult> scenarios_from_json(std::string_view text);
SweepResult sweep_from_json(std::string_view text);

/// Whole-file read and write. Throw std::runtime_error naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace aifp
