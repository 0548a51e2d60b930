#include "aifp/service.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "aifp/errors.hpp"
#include "json.hpp"

namespace aifp {

using nlohmann::json;

namespace {

HttpResponse error(int status, const std::string& field, const std::string& message) {
  json j = {{"error", {{"field", field}, {"message", message}}}};
  return {status, j.dump(2, ' ', false, json::error_handler_t::replace) + "\n"};
}

HttpResponse ok(std::string body) { return {200, std::move(body)}; }

json parse_body(std::string_view body) {
  if (body.empty()) return json::object();
  try {
    json j = json::parse(body.begin(), body.end());
    if (!j.is_object()) throw ValidationError("", "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what());
  }
}

/// Parse a sub-document with a document-level parser and prefix error paths with `key`.
template <typename Fn>
auto nested(const std::string& key, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError(e.field().empty() ? key : key + "." + e.field(), e.message());
  }
}

}  // namespace

Service::Service(ModelInputs inputs)
    : inputs_(std::move(inputs)), projector_(inputs_.portfolio, inputs_.catalog, inputs_.factors) {}

HttpResponse Service::handle(std::string_view method, std::string_view path,
                             const std::map<std::string, std::string>& query, std::string_view body) const {
  try {
    return route(method, path, query, body);
  } catch (const ValidationError& e) {
    return error(400, e.field(), e.message());
  } catch (const UnreachableTarget& e) {
    return error(422, "target", e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, "", e.what());
  } catch (const json::exception& e) {
    return error(400, "", e.what());
  } catch (const std::exception& e) {
    return error(500, "", e.what());
  }
}

HttpResponse Service::route(std::string_view method, std::string_view path,
                            const std::map<std::string, std::string>& query, std::string_view body) const {
  const bool get = method == "GET";
  const bool post = method == "POST";
  auto expect = [&](bool allowed) {
    if (!allowed) throw std::logic_error("method");
  };

  auto scenario_from = [&](const json& req) {
    if (!req.contains("scenario")) throw ValidationError("scenario", "missing field");
    return nested("scenario", [&] { return parse_scenario(req.at("scenario").dump(), inputs_.scenarios); });
  };
  auto portfolio_from = [&](const json& req) -> PortfolioSpec {
    if (!req.contains("portfolio")) return inputs_.portfolio;
    return nested("portfolio", [&] { return parse_portfolio(req.at("portfolio").dump()); });
  };

  try {
    if (path == "/v1/clusters") {
      expect(get);
      return ok(render_clusters(cluster_matrix(inputs_), Format::Json));
    }
    if (path == "/v1/scenarios") {
      expect(get);
      return ok(dump_scenarios(inputs_.scenarios));
    }
    if (path == "/v1/portfolio") {
      expect(post);
      const PortfolioSpec spec = body.empty() ? inputs_.portfolio : parse_portfolio(body);
      return ok(render_footprint(aggregate_portfolio(spec, inputs_.catalog, inputs_.factors), Format::Json));
    }
    if (path == "/v1/project") {
      expect(post);
      const json req = parse_body(body);
      for (auto it = req.begin(); it != req.end(); ++it) {
        if (it.key() != "scenario" && it.key() != "portfolio") throw ValidationError(it.key(), "unknown field");
      }
      const ScenarioParams scenario = scenario_from(req);
      if (req.contains("portfolio")) {
        const Projector custom(portfolio_from(req), inputs_.catalog, inputs_.factors);
        return ok(render_scenarios({custom.project(scenario)}, Format::Json));
      }
      return ok(render_scenarios({projector_.project(scenario)}, Format::Json));
    }
    if (path == "/v1/sweep") {
      expect(post);
      const json req = parse_body(body);
      for (auto it = req.begin(); it != req.end(); ++it) {
        if (it.key() != "scenario" && it.key() != "param" && it.key() != "values" && it.key() != "range") {
          throw ValidationError(it.key(), "unknown field");
        }
      }
      const ScenarioParams scenario = scenario_from(req);
      if (!req.contains("param") || !req.at("param").is_string()) throw ValidationError("param", "expected a name");
      SweepParameter param{};
      try {
        param = parse_sweep_parameter(req.at("param").get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ValidationError("param", e.what());
      }
      std::vector<double> values;
      if (req.contains("values") == req.contains("range")) {
        throw ValidationError("values", "give exactly one of values or range");
      }
      if (req.contains("values")) {
        const json& v = req.at("values");
        if (!v.is_array()) throw ValidationError("values", "expected an array of numbers");
        for (const auto& x : v) {
          if (!x.is_number()) throw ValidationError("values", "expected an array of numbers");
          values.push_back(x.get<double>());
        }
      } else {
        if (!req.at("range").is_string()) throw ValidationError("range", "expected lo:hi:step");
        try {
          values = parse_range(req.at("range").get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw ValidationError("range", e.what());
        }
      }
      if (values.empty()) throw ValidationError("values", "empty value list");
      for (double v : values) {
        ScenarioParams probe = scenario;
        set_parameter(probe, param, v);
        try {
          probe.validate();
        } catch (const ValidationError& e) {
          throw ValidationError("values", e.field() + " " + e.message());
        }
      }
      return ok(render_sweep(sensitivity_sweep(projector_, scenario, param, values), Format::Json));
    }
    if (path == "/v1/offset") {
      expect(post);
      const json req = parse_body(body);
      OffsetSetup setup;
      for (auto it = req.begin(); it != req.end(); ++it) {
        const std::string& k = it.key();
        if (k == "scenario") continue;
        if (!it->is_number()) throw ValidationError(k, "expected a number");
        if (k == "target") {
          setup.target_fraction = it->get<double>();
        } else if (k == "pue") {
          setup.pue = it->get<double>();
        } else if (k == "grid_reduction") {
          setup.grid_reduction = it->get<double>();
        } else {
          throw ValidationError(k, "unknown field");
        }
      }
      if (!(setup.target_fraction > 0.0 && setup.target_fraction < 1.0)) {
        throw ValidationError("target", "must lie in (0, 1)");
      }
      if (!std::isfinite(setup.pue) || setup.pue < 1.0) throw ValidationError("pue", "must be >= 1");
      if (!(setup.grid_reduction >= 0.0 && setup.grid_reduction < 1.0)) {
        throw ValidationError("grid_reduction", "must lie in [0, 1)");
      }
      const ScenarioParams scenario = scenario_from(req);
      OffsetReport report{scenario.name, setup.target_fraction, setup.pue, setup.grid_reduction,
                          solve_hardware_efficiency(projector_, scenario, setup)};
      return ok(render_offset(report, Format::Json));
    }
    if (path == "/v1/score") {
      expect(get);
      auto it = query.find("kwh");
      if (it == query.end()) throw ValidationError("kwh", "missing query parameter");
      double kwh = 0.0;
      try {
        std::size_t used = 0;
        kwh = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError("kwh", "not a number");
      }
      if (!std::isfinite(kwh) || kwh < 0.0) throw ValidationError("kwh", "must be finite and >= 0");
      return ok(render_score(kwh, eco_score(kwh), Format::Json));
    }
  } catch (const std::logic_error& e) {
    if (std::string_view(e.what()) != "method") throw;
    return error(405, "", "method not allowed");
  }
  return error(404, "", "no route for " + std::string(path));
}

}  // namespace aifp
