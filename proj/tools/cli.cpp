#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aifp/errors.hpp"
#include "aifp/io.hpp"
#include "aifp/service.hpp"

namespace aifp::cli {

namespace {

struct Options {
  std::string data_dir;
  std::string factors, catalog, portfolio, scenarios;
  std::string region_blend;
  std::string format{"table"};
  std::string out;

  std::string scenario;
  std::string param;
  std::string range;
  std::vector<double> values;
  double target{0.9};
  double pue{1.04};
  double grid_reduction{0.45};
  double kwh{-1.0};
  std::string export_dir;

  std::string host{"127.0.0.1"};
  int port{8080};
  std::string static_dir;
};

ModelInputs load(const Options& o) {
  RunConfig cfg = default_run_config(o.data_dir.empty() ? default_data_dir() : o.data_dir);
  if (!o.factors.empty()) cfg.factors_path = o.factors;
  if (!o.catalog.empty()) cfg.catalog_path = o.catalog;
  if (!o.portfolio.empty()) cfg.portfolio_path = o.portfolio;
  if (!o.scenarios.empty()) cfg.scenarios_path = o.scenarios;
  if (!o.region_blend.empty()) cfg.region_blend = parse_region_blend(o.region_blend);
  return load_and_validate(cfg);
}

/// Preset name, "all", or a path to a scenario document.
std::vector<ScenarioParams> pick_scenarios(const std::string& key, const ModelInputs& in) {
  if (key.empty() || key == "all") return in.scenarios;
  if (std::filesystem::is_regular_file(key)) return {parse_scenario(read_file(key), in.scenarios, key)};
  try {
    return {find_scenario(in.scenarios, key)};
  } catch (const std::invalid_argument& e) {
    throw ValidationError("scenario", e.what());
  }
}

ScenarioParams pick_one(const std::string& key, const ModelInputs& in) {
  auto s = pick_scenarios(key.empty() ? "intermediate" : key, in);
  if (s.size() != 1) throw ValidationError("scenario", "expected a single scenario");
  return s.front();
}

void emit(const Options& o, const std::string& doc, std::ostream& out) {
  if (o.out.empty()) {
    out << doc;
  } else {
    write_file(o.out, doc);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"AI portfolio environmental footprint simulator", "aifp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "aifp 0.3.0");

  app.add_option("--data-dir", o.data_dir, "Data bundle directory (default $AIFP_DATA_DIR)");
  app.add_option("--factors", o.factors, "Emission factor table");
  app.add_option("--catalog", o.catalog, "Model and workload catalog");
  app.add_option("--portfolio", o.portfolio, "Portfolio specification");
  app.add_option("--scenarios", o.scenarios, "Scenario preset file");
  app.add_option("--region-blend", o.region_blend, "Override grid blend, e.g. US=0.45,EU27=0.28,CN=0.27");
  app.add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", o.out, "Write the report to a file");

  auto* clusters = app.add_subcommand("clusters", "Per-inference energy and impacts for all 192 clusters");
  auto* portfolio = app.add_subcommand("portfolio", "Annual footprint of the portfolio");

  auto* project = app.add_subcommand("project", "Indexed projection for one or all scenarios");
  project->add_option("scenario,--scenario", o.scenario, "Preset name, scenario file, or all");

  auto* sweep = app.add_subcommand("sweep", "Sensitivity sweep over one scenario parameter");
  sweep->add_option("param,--param", o.param, "model_size_factor, output_token_factor, agents_cagr, genai_cagr, "
                                              "hardware_efficiency_factor")
      ->required();
  sweep->add_option("--scenario", o.scenario, "Base scenario (default intermediate)");
  auto* range = sweep->add_option("--range", o.range, "lo:hi:step");
  auto* values = sweep->add_option("--values", o.values, "Explicit values")->delimiter(',');
  range->excludes(values);

  auto* offset = app.add_subcommand("offset", "Hardware efficiency needed to cut the projection by a target");
  offset->add_option("--scenario", o.scenario, "Base scenario (default intermediate)");
  offset->add_option("--target", o.target, "Fraction of projected impact removed")->check(CLI::Range(0.0, 1.0));
  offset->add_option("--pue", o.pue, "PUE in the offset case")->check(CLI::Range(1.0, 10.0));
  offset->add_option("--grid-reduction", o.grid_reduction, "Grid decarbonization in the offset case")
      ->check(CLI::Range(0.0, 1.0));

  auto* score = app.add_subcommand("score", "Eco-score grade of an energy per task");
  score->add_option("kwh", o.kwh, "kWh per task")->required()->check(CLI::NonNegativeNumber);

  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP service");
  serve_cmd->add_option("--port", o.port, "Listen port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", o.host, "Listen address");
  serve_cmd->add_option("--static-dir", o.static_dir, "Directory served under /");

  auto* export_cmd = app.add_subcommand("export-defaults", "Write the built-in data bundle to a directory");
  export_cmd->add_option("dir", o.export_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(o.format);

    if (*export_cmd) {
      const ModelInputs d = default_inputs();
      std::filesystem::create_directories(o.export_dir);
      const RunConfig cfg = default_run_config(o.export_dir);
      write_file(cfg.factors_path, dump_factors(d.factors));
      write_file(cfg.catalog_path, dump_catalog(d.catalog));
      write_file(cfg.portfolio_path, dump_portfolio(d.portfolio));
      write_file(cfg.scenarios_path, dump_scenarios(d.scenarios));
      return 0;
    }
    if (*score) {
      emit(o, render_score(o.kwh, eco_score(o.kwh), format), out);
      return 0;
    }

    const ModelInputs in = load(o);

    if (*clusters) {
      emit(o, render_clusters(cluster_matrix(in), format), out);
    } else if (*portfolio) {
      emit(o, render_footprint(aggregate_portfolio(in.portfolio, in.catalog, in.factors), format), out);
    } else if (*project) {
      const Projector projector(in.portfolio, in.catalog, in.factors);
      std::vector<ScenarioResult> results;
      for (const auto& s : pick_scenarios(o.scenario, in)) results.push_back(projector.project(s));
      emit(o, render_scenarios(results, format), out);
    } else if (*sweep) {
      const ScenarioParams base = pick_one(o.scenario, in);
      SweepParameter param{};
      try {
        param = parse_sweep_parameter(o.param);
      } catch (const std::invalid_argument& e) {
        throw ValidationError("param", e.what());
      }
      std::vector<double> xs = o.values;
      if (xs.empty()) {
        if (o.range.empty()) throw ValidationError("range", "give --range or --values");
        try {
          xs = parse_range(o.range);
        } catch (const std::invalid_argument& e) {
          throw ValidationError("range", e.what());
        }
      }
      const Projector projector(in.portfolio, in.catalog, in.factors);
      emit(o, render_sweep(sensitivity_sweep(projector, base, param, xs), format), out);
    } else if (*offset) {
      const ScenarioParams base = pick_one(o.scenario, in);
      if (!(o.target > 0.0 && o.target < 1.0)) throw ValidationError("target", "must lie in (0, 1)");
      OffsetSetup setup;
      setup.target_fraction = o.target;
      setup.pue = o.pue;
      setup.grid_reduction = o.grid_reduction;
      const Projector projector(in.portfolio, in.catalog, in.factors);
      OffsetReport report{base.name, o.target, o.pue, o.grid_reduction,
                          solve_hardware_efficiency(projector, base, setup)};
      emit(o, render_offset(report, format), out);
    } else if (*serve_cmd) {
      const Service service(in);
      ServeOptions so;
      so.host = o.host;
      so.port = o.port;
      so.static_dir = o.static_dir;
      return serve(service, so);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace aifp::cli
