#include "aifp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "aifp/defaults.hpp"
#include "aifp/errors.hpp"
#include "json.hpp"

#ifndef AIFP_INSTALLED_DATA_DIR
#define AIFP_INSTALLED_DATA_DIR ""
#endif

namespace aifp {

using nlohmann::json;

namespace {

/// Accepted spellings of a unit and their factor to the canonical unit (listed first).
using Units = std::vector<std::pair<std::string, double>>;

const Units kWatt{{"W", 1.0}, {"kW", 1000.0}};
const Units kWattPerGb{{"W/GB", 1.0}};
const Units kKwhPerGb{{"kWh/GB", 1.0}, {"Wh/GB", 1e-3}};
const Units kKwh{{"kWh", 1.0}, {"Wh", 1e-3}};
const Units kGigabyte{{"GB", 1.0}, {"MB", 1e-3}, {"kB", 1e-6}, {"B", 1e-9}};
const Units kHour{{"h", 1.0}};
const Units kSecond{{"s", 1.0}, {"ms", 1e-3}};
const Units kTokensPerSecond{{"token/s", 1.0}};
const Units kToken{{"token", 1.0}};
const Units kBytesPerToken{{"B/token", 1.0}};
const Units kBytesPerParam{{"B/param", 1.0}};
const Units kGigaParam{{"Gparam", 1.0}};
const Units kYear{{"year", 1.0}};
const Units kLitrePerKwh{{"L/kWh", 1.0}};
const Units kPerDay{{"1/day", 1.0}};
const Units kDaysPerYear{{"day/year", 1.0}};

std::array<Units, 4> criteria_units(const std::string& denominator) {
  return {Units{{"kgCO2eq/" + denominator, 1.0}}, Units{{"m3eq/" + denominator, 1.0}},
          Units{{"MJ/" + denominator, 1.0}}, Units{{"kgSbeq/" + denominator, 1.0}}};
}

constexpr const char* kIntensityKeys[4] = {"gwp", "water", "primary_energy", "adp"};

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

/// Cursor into a JSON document that reports failures with a dotted path.
class Node {
 public:
  Node(const json& j, std::string path, const std::string& file) : j_(&j), path_(std::move(path)), file_(&file) {}

  [[noreturn]] void fail(const std::string& message) const { throw ValidationError(path_, message, *file_); }
  [[noreturn]] void fail(std::string_view key, const std::string& message) const {
    throw ValidationError(join(path_, key), message, *file_);
  }

  const json& raw() const { return *j_; }
  const std::string& path() const { return path_; }

  void require_object() const {
    if (!j_->is_object()) fail("expected an object");
  }

  bool has(std::string_view key) const { return j_->is_object() && j_->contains(std::string(key)); }

  Node at(std::string_view key) const {
    require_object();
    auto it = j_->find(std::string(key));
    if (it == j_->end()) fail(key, "missing field");
    return Node(*it, join(path_, key), *file_);
  }

  void only(std::initializer_list<std::string_view> allowed) const {
    require_object();
    for (auto it = j_->begin(); it != j_->end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) fail(it.key(), "unknown field");
    }
  }

  double number() const {
    if (j_->is_object() && j_->contains("unit")) fail("dimensionless field takes a plain number");
    if (!j_->is_number()) fail("expected a number");
    return j_->get<double>();
  }

  double quantity(const Units& units) const {
    if (j_->is_number()) fail("missing unit annotation, expected {\"value\", \"unit\": \"" + units.front().first + "\"}");
    require_object();
    only({"value", "unit"});
    const Node v = at("value");
    const Node u = at("unit");
    if (!v.j_->is_number()) v.fail("expected a number");
    if (!u.j_->is_string()) u.fail("expected a unit string");
    const auto unit = u.j_->get<std::string>();
    for (const auto& [name, scale] : units) {
      if (name == unit) return v.j_->get<double>() * scale;
    }
    std::string allowed;
    for (const auto& [name, scale] : units) allowed += (allowed.empty() ? "" : ", ") + name;
    u.fail("unit '" + unit + "' not accepted here (allowed: " + allowed + ")");
  }

  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

  std::vector<Node> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "[" + std::to_string(i) + "]", *file_);
    return out;
  }

  template <typename Fn>
  void each(Fn&& fn) const {
    require_object();
    for (auto it = j_->begin(); it != j_->end(); ++it) fn(it.key(), Node(it.value(), join(path_, it.key()), *file_));
  }

 private:
  const json* j_;
  std::string path_;
  const std::string* file_;
};

json parse_document(std::string_view text, const std::string& file) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("malformed JSON: ") + e.what(), file);
  }
}

/// Re-throw a model-level ValidationError with the document path prefix and file attached.
template <typename Fn>
void checked(const std::string& prefix, const std::string& file, Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    if (!e.file().empty()) throw;
    throw ValidationError(join(prefix, e.field()), e.message(), file);
  }
}

json quantity(double value, const Units& units) { return json{{"value", value}, {"unit", units.front().first}}; }

EnergyIntensity read_intensity(const Node& n, const std::array<Units, 4>& units) {
  n.only({"gwp", "water", "primary_energy", "adp"});
  return {n.at("gwp").quantity(units[0]), n.at("water").quantity(units[1]),
          n.at("primary_energy").quantity(units[2]), n.at("adp").quantity(units[3])};
}

json write_intensity(const EnergyIntensity& e, const std::array<Units, 4>& units) {
  const double v[4] = {e.gwp, e.water, e.primary_energy, e.adp};
  json out = json::object();
  for (int i = 0; i < 4; ++i) out[kIntensityKeys[i]] = quantity(v[i], units[static_cast<std::size_t>(i)]);
  return out;
}

struct CapacitySchema {
  const Units* power;
  std::string per;
};

CapacitySchema schema_of(Capacity c) {
  switch (c) {
    case Capacity::VcpuHour:
    case Capacity::VgpuHour: return {&kWatt, "h"};
    case Capacity::StorageGbHour: return {&kWattPerGb, "GB.h"};
    case Capacity::NetworkGb: return {&kKwhPerGb, "GB"};
  }
  return {&kWatt, "h"};
}

template <typename Enum, std::size_t N>
std::array<double, N> read_classes(const Node& n, const std::array<Enum, N>& keys, bool units = false) {
  std::array<double, N> out{};
  n.require_object();
  n.each([&](const std::string& key, const Node&) {
    bool known = false;
    for (auto k : keys) known = known || to_string(k) == key;
    if (!known) n.fail(key, "unknown class");
  });
  for (std::size_t i = 0; i < N; ++i) {
    const Node v = n.at(to_string(keys[i]));
    out[i] = units ? v.quantity(kPerDay) : v.number();
  }
  return out;
}

template <typename Enum, std::size_t N>
json write_classes(const std::array<double, N>& values, const std::array<Enum, N>& keys, bool units = false) {
  json out = json::object();
  for (std::size_t i = 0; i < N; ++i) {
    out[std::string(to_string(keys[i]))] = units ? quantity(values[i], kPerDay) : json(values[i]);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

// ---------------------------------------------------------------- factors

EmissionFactorTable parse_factors(std::string_view text, const std::string& file) {
  const json doc = parse_document(text, file);
  const Node root(doc, "", file);
  root.only({"version", "capacities", "grid", "water_supply"});

  EmissionFactorTable t;
  t.version = root.at("version").string();

  const Node caps = root.at("capacities");
  caps.each([&](const std::string& key, const Node& n) {
    try {
      (void)parse_capacity(key);
    } catch (const std::invalid_argument&) {
      n.fail("unknown capacity");
    }
  });
  for (auto c : kCapacities) {
    const Node row = caps.at(to_string(c));
    row.only({"it_power", "embodied"});
    const CapacitySchema schema = schema_of(c);
    auto& dst = t.at(c);
    dst.it_power = row.at("it_power").quantity(*schema.power);
    const EnergyIntensity e = read_intensity(row.at("embodied"), criteria_units(schema.per));
    dst.embodied = {0.0, e.gwp, e.water, e.primary_energy, e.adp};
  }

  const Node grid = root.at("grid");
  grid.each([&](const std::string& key, const Node& n) {
    try {
      (void)parse_region(key);
    } catch (const std::invalid_argument&) {
      n.fail("unknown region");
    }
  });
  for (auto r : kRegions) {
    const std::string key(to_string(r));
    if (!grid.has(key)) grid.fail(key, "missing grid region " + key);
    t.grid[r] = read_intensity(grid.at(key), criteria_units("kWh"));
  }

  const Node water = root.at("water_supply");
  water.only({"EU27"});
  t.water_supply = read_intensity(water.at("EU27"), criteria_units("L"));

  checked("", file, [&] { t.validate(); });
  return t;
}

std::string dump_factors(const EmissionFactorTable& t) {
  json caps = json::object();
  for (auto c : kCapacities) {
    const CapacitySchema schema = schema_of(c);
    const auto& row = t.at(c);
    caps[std::string(to_string(c))] = {
        {"it_power", quantity(row.it_power, *schema.power)},
        {"embodied", write_intensity({row.embodied.gwp, row.embodied.water, row.embodied.primary_energy,
                                      row.embodied.adp},
                                     criteria_units(schema.per))}};
  }
  json grid = json::object();
  for (const auto& [region, e] : t.grid) grid[std::string(to_string(region))] = write_intensity(e, criteria_units("kWh"));
  json doc = {{"version", t.version},
              {"capacities", caps},
              {"grid", grid},
              {"water_supply", {{"EU27", write_intensity(t.water_supply, criteria_units("L"))}}}};
  return dump(doc);
}

// ---------------------------------------------------------------- catalog

Catalog parse_catalog(std::string_view text, const std::string& file) {
  const json doc = parse_document(text, file);
  const Node root(doc, "", file);
  root.only({"version", "bytes_per_token", "storage_retention", "reference_pue", "lifetime", "models", "workloads",
             "traditional", "fine_tuning"});
  Catalog c;
  c.version = root.at("version").string();
  c.bytes_per_token = root.at("bytes_per_token").quantity(kBytesPerToken);
  c.storage_retention_hours = root.at("storage_retention").quantity(kHour);
  c.reference_pue = root.at("reference_pue").number();
  c.lifetime_years = root.at("lifetime").quantity(kYear);

  root.at("models").each([&](const std::string& key, const Node& n) {
    ModelSize size{};
    try {
      size = parse_model_size(key);
    } catch (const std::invalid_argument&) {
      n.fail("unknown model size");
    }
    if (size == ModelSize::NA) n.fail("model size na has no profile");
    n.only({"name", "params", "ttft_100", "throughput_100", "ttft_1000", "throughput_1000", "bytes_per_param",
            "memory_overhead", "vgpu_memory"});
    ModelProfile m;
    m.name = n.at("name").string();
    m.params_billion = n.at("params").quantity(kGigaParam);
    m.ttft_100 = n.at("ttft_100").quantity(kSecond);
    m.throughput_100 = n.at("throughput_100").quantity(kTokensPerSecond);
    m.ttft_1000 = n.at("ttft_1000").quantity(kSecond);
    m.throughput_1000 = n.at("throughput_1000").quantity(kTokensPerSecond);
    m.bytes_per_param = n.at("bytes_per_param").quantity(kBytesPerParam);
    m.memory_overhead = n.at("memory_overhead").number();
    m.vgpu_memory_gb = n.at("vgpu_memory").quantity(kGigabyte);
    c.models[size] = m;
  });

  root.at("workloads").each([&](const std::string& key, const Node& n) {
    UseCaseType t{};
    try {
      t = parse_use_case_type(key);
    } catch (const std::invalid_argument&) {
      n.fail("unknown use case type");
    }
    if (family_of(t) != AiType::GenAI) n.fail("workloads describe generative use cases only");
    n.only({"input_tokens", "output_tokens", "llm_calls", "tool_calls", "payload_factor", "long_prompt"});
    WorkloadShape w;
    w.input_tokens = n.at("input_tokens").quantity(kToken);
    w.output_tokens = n.at("output_tokens").quantity(kToken);
    w.llm_calls = n.at("llm_calls").number();
    w.tool_calls = n.at("tool_calls").number();
    w.payload_factor = n.at("payload_factor").number();
    w.long_prompt = n.at("long_prompt").boolean();
    c.workloads[t] = w;
  });

  auto traditional_key = [](const Node& n, const std::string& key) {
    UseCaseType t{};
    try {
      t = parse_use_case_type(key);
    } catch (const std::invalid_argument&) {
      n.fail("unknown use case type");
    }
    if (family_of(t) != AiType::Traditional) n.fail("expected a traditional use case type");
    return t;
  };

  root.at("traditional").each([&](const std::string& key, const Node& n) {
    const UseCaseType t = traditional_key(n, key);
    n.only({"compute_energy", "data_size", "cpu_energy_fraction"});
    c.traditional[t] = {n.at("compute_energy").quantity(kKwh), n.at("data_size").quantity(kGigabyte),
                        n.at("cpu_energy_fraction").number()};
  });

  root.at("fine_tuning").each([&](const std::string& key, const Node& n) {
    const UseCaseType t = traditional_key(n, key);
    n.only({"runs", "epochs", "samples", "batch_size", "passes", "step_energy", "dataset_size", "storage_time",
            "downloads"});
    FineTuningPlan p;
    p.runs = n.at("runs").number();
    p.epochs = n.at("epochs").number();
    p.samples = n.at("samples").number();
    p.batch_size = n.at("batch_size").number();
    p.passes = n.at("passes").number();
    if (n.has("step_energy")) p.step_energy = n.at("step_energy").quantity(kKwh);
    p.dataset_gb = n.at("dataset_size").quantity(kGigabyte);
    p.storage_hours = n.at("storage_time").quantity(kHour);
    p.downloads = n.at("downloads").number();
    c.fine_tuning[t] = p;
  });

  checked("", file, [&] { c.validate(); });
  return c;
}

std::string dump_catalog(const Catalog& c) {
  json models = json::object();
  for (const auto& [size, m] : c.models) {
    models[std::string(to_string(size))] = {{"name", m.name},
                                            {"params", quantity(m.params_billion, kGigaParam)},
                                            {"ttft_100", quantity(m.ttft_100, kSecond)},
                                            {"throughput_100", quantity(m.throughput_100, kTokensPerSecond)},
                                            {"ttft_1000", quantity(m.ttft_1000, kSecond)},
                                            {"throughput_1000", quantity(m.throughput_1000, kTokensPerSecond)},
                                            {"bytes_per_param", quantity(m.bytes_per_param, kBytesPerParam)},
                                            {"memory_overhead", m.memory_overhead},
                                            {"vgpu_memory", quantity(m.vgpu_memory_gb, kGigabyte)}};
  }
  json workloads = json::object();
  for (const auto& [t, w] : c.workloads) {
    workloads[std::string(to_string(t))] = {{"input_tokens", quantity(w.input_tokens, kToken)},
                                            {"output_tokens", quantity(w.output_tokens, kToken)},
                                            {"llm_calls", w.llm_calls},
                                            {"tool_calls", w.tool_calls},
                                            {"payload_factor", w.payload_factor},
                                            {"long_prompt", w.long_prompt}};
  }
  json traditional = json::object();
  for (const auto& [t, task] : c.traditional) {
    traditional[std::string(to_string(t))] = {{"compute_energy", quantity(task.compute_energy, kKwh)},
                                              {"data_size", quantity(task.data_gb, kGigabyte)},
                                              {"cpu_energy_fraction", task.cpu_energy_fraction}};
  }
  json fine_tuning = json::object();
  for (const auto& [t, p] : c.fine_tuning) {
    json j = {{"runs", p.runs},
              {"epochs", p.epochs},
              {"samples", p.samples},
              {"batch_size", p.batch_size},
              {"passes", p.passes},
              {"dataset_size", quantity(p.dataset_gb, kGigabyte)},
              {"storage_time", quantity(p.storage_hours, kHour)},
              {"downloads", p.downloads}};
    if (p.step_energy) j["step_energy"] = quantity(*p.step_energy, kKwh);
    fine_tuning[std::string(to_string(t))] = j;
  }
  json doc = {{"version", c.version},
              {"bytes_per_token", quantity(c.bytes_per_token, kBytesPerToken)},
              {"storage_retention", quantity(c.storage_retention_hours, kHour)},
              {"reference_pue", c.reference_pue},
              {"lifetime", quantity(c.lifetime_years, kYear)},
              {"models", models},
              {"workloads", workloads},
              {"traditional", traditional},
              {"fine_tuning", fine_tuning}};
  return dump(doc);
}

// ---------------------------------------------------------------- portfolio

namespace {

std::map<Region, double> read_region_weights(const Node& n) {
  std::map<Region, double> out;
  n.each([&](const std::string& key, const Node& v) {
    Region r{};
    try {
      r = parse_region(key);
    } catch (const std::invalid_argument&) {
      v.fail("unknown region");
    }
    out[r] = v.number();
  });
  return out;
}

template <typename Enum, std::size_t N>
std::map<Enum, double> read_shares(const Node& n, const std::array<Enum, N>& keys, Enum (*parse)(std::string_view)) {
  std::map<Enum, double> out;
  n.each([&](const std::string& key, const Node& v) {
    Enum e{};
    try {
      e = parse(key);
    } catch (const std::invalid_argument&) {
      v.fail("unknown key");
    }
    if (std::find(keys.begin(), keys.end(), e) == keys.end()) v.fail("unknown key");
    out[e] = v.number();
  });
  return out;
}

PortfolioSpec read_portfolio(const Node& root) {
  root.only({"n_use_cases", "genai_share", "type_shares", "model_sizes", "users", "frequency", "requests_per_day",
             "business_days", "datacenter"});
  PortfolioSpec p;
  p.n_use_cases = root.at("n_use_cases").number();
  p.genai_share = root.at("genai_share").number();
  p.type_shares = read_shares(root.at("type_shares"), kUseCaseTypes, &parse_use_case_type);
  p.model_sizes = read_shares(root.at("model_sizes"), kModelSizes, &parse_model_size);
  const Node users = root.at("users");
  users.only({"genai", "traditional"});
  p.genai_users = read_classes(users.at("genai"), kUsersClasses);
  p.traditional_users = read_classes(users.at("traditional"), kUsersClasses);
  const Node freq = root.at("frequency");
  freq.only({"genai", "traditional"});
  p.genai_freq = read_classes(freq.at("genai"), kFreqClasses);
  p.traditional_freq = read_classes(freq.at("traditional"), kFreqClasses);
  p.requests_per_day = read_classes(root.at("requests_per_day"), kFreqClasses, true);
  p.business_days = root.at("business_days").quantity(kDaysPerYear);
  const Node dc = root.at("datacenter");
  dc.only({"pue", "wue", "region_weights"});
  p.datacenter.pue = dc.at("pue").number();
  p.datacenter.wue = dc.at("wue").quantity(kLitrePerKwh);
  p.datacenter.region_weights = read_region_weights(dc.at("region_weights"));
  return p;
}

json write_portfolio(const PortfolioSpec& p) {
  json types = json::object();
  for (const auto& [t, v] : p.type_shares) types[std::string(to_string(t))] = v;
  json sizes = json::object();
  for (const auto& [s, v] : p.model_sizes) sizes[std::string(to_string(s))] = v;
  json regions = json::object();
  for (const auto& [r, v] : p.datacenter.region_weights) regions[std::string(to_string(r))] = v;
  return {{"n_use_cases", p.n_use_cases},
          {"genai_share", p.genai_share},
          {"type_shares", types},
          {"model_sizes", sizes},
          {"users",
           {{"genai", write_classes(p.genai_users, kUsersClasses)},
            {"traditional", write_classes(p.traditional_users, kUsersClasses)}}},
          {"frequency",
           {{"genai", write_classes(p.genai_freq, kFreqClasses)},
            {"traditional", write_classes(p.traditional_freq, kFreqClasses)}}},
          {"requests_per_day", write_classes(p.requests_per_day, kFreqClasses, true)},
          {"business_days", quantity(p.business_days, kDaysPerYear)},
          {"datacenter",
           {{"pue", p.datacenter.pue}, {"wue", quantity(p.datacenter.wue, kLitrePerKwh)}, {"region_weights", regions}}}};
}

}  // namespace

PortfolioSpec parse_portfolio(std::string_view text, const std::string& file) {
  const json doc = parse_document(text, file);
  PortfolioSpec p = read_portfolio(Node(doc, "", file));
  checked("", file, [&] { p.validate(); });
  return p;
}

std::string dump_portfolio(const PortfolioSpec& p) { return dump(write_portfolio(p)); }

std::map<Region, double> parse_region_blend(std::string_view text) {
  std::map<Region, double> out;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("region_blend", "expected REGION=weight pairs");
    Region r{};
    try {
      r = parse_region(item.substr(0, eq));
    } catch (const std::invalid_argument& e) {
      throw ValidationError("region_blend", e.what());
    }
    try {
      std::size_t used = 0;
      const std::string num = item.substr(eq + 1);
      out[r] = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw ValidationError("region_blend." + std::string(to_string(r)), "weight is not a number");
    }
  }
  DatacenterProfile probe;
  probe.region_weights = out;
  checked("", "", [&] { probe.validate(); });
  return out;
}

// ---------------------------------------------------------------- scenarios

namespace {

constexpr std::string_view kScenarioFields[] = {"name",
                                                "label",
                                                "base",
                                                "horizon",
                                                "cagr",
                                                "model_size_factor",
                                                "output_token_factor",
                                                "quantization_factor",
                                                "hardware_efficiency_factor",
                                                "pue",
                                                "grid_reduction",
                                                "model_size_exponent"};

ScenarioParams read_scenario(const Node& n, const std::vector<ScenarioParams>* presets) {
  n.require_object();
  n.each([&](const std::string& key, const Node& v) {
    if (std::find(std::begin(kScenarioFields), std::end(kScenarioFields), key) == std::end(kScenarioFields)) {
      v.fail("unknown field");
    }
  });
  ScenarioParams s;
  const bool derived = n.has("base");
  if (derived) {
    if (presets == nullptr) n.fail("base", "presets cannot derive from another preset");
    try {
      s = find_scenario(*presets, n.at("base").string());
    } catch (const std::invalid_argument& e) {
      n.fail("base", e.what());
    }
  }
  auto field = [&](std::string_view key, double& dst) {
    if (n.has(key) || !derived) dst = n.at(key).number();
  };
  if (n.has("name") || !derived) s.name = n.at("name").string();
  if (n.has("label") || !derived) s.label = n.at("label").string();
  if (n.has("horizon") || !derived) s.horizon_years = n.at("horizon").quantity(kYear);
  if (n.has("cagr") || !derived) {
    const Node c = n.at("cagr");
    c.only({"genai", "agents", "cv", "nlp", "tabular"});
    auto rate = [&](std::string_view key, double& dst) {
      if (c.has(key) || !derived) dst = c.at(key).number();
    };
    rate("genai", s.genai_cagr);
    rate("agents", s.agents_cagr);
    rate("cv", s.cv_cagr);
    rate("nlp", s.nlp_cagr);
    rate("tabular", s.tabular_cagr);
  }
  field("model_size_factor", s.model_size_factor);
  field("output_token_factor", s.output_token_factor);
  field("quantization_factor", s.quantization_factor);
  field("hardware_efficiency_factor", s.hardware_efficiency_factor);
  field("pue", s.pue);
  field("grid_reduction", s.grid_reduction);
  if (n.has("model_size_exponent")) s.model_size_exponent = n.at("model_size_exponent").number();
  return s;
}

json write_scenario(const ScenarioParams& s) {
  return {{"name", s.name},
          {"label", s.label},
          {"horizon", quantity(s.horizon_years, kYear)},
          {"cagr",
           {{"genai", s.genai_cagr},
            {"agents", s.agents_cagr},
            {"cv", s.cv_cagr},
            {"nlp", s.nlp_cagr},
            {"tabular", s.tabular_cagr}}},
          {"model_size_factor", s.model_size_factor},
          {"output_token_factor", s.output_token_factor},
          {"quantization_factor", s.quantization_factor},
          {"hardware_efficiency_factor", s.hardware_efficiency_factor},
          {"pue", s.pue},
          {"grid_reduction", s.grid_reduction},
          {"model_size_exponent", s.model_size_exponent}};
}

}  // namespace

std::vector<ScenarioParams> parse_scenarios(std::string_view text, const std::string& file) {
  const json doc = parse_document(text, file);
  const Node root(doc, "", file);
  root.only({"scenarios"});
  std::vector<ScenarioParams> out;
  for (const Node& item : root.at("scenarios").items()) {
    ScenarioParams s = read_scenario(item, nullptr);
    checked(item.path(), file, [&] { s.validate(); });
    for (const auto& prev : out) {
      if (prev.name == s.name) item.fail("name", "duplicate scenario name '" + s.name + "'");
    }
    out.push_back(std::move(s));
  }
  return out;
}

ScenarioParams parse_scenario(std::string_view text, const std::vector<ScenarioParams>& presets,
                              const std::string& file) {
  const json doc = parse_document(text, file);
  const Node root(doc, "", file);
  ScenarioParams s;
  if (doc.is_string()) {
    try {
      s = find_scenario(presets, doc.get<std::string>());
    } catch (const std::invalid_argument& e) {
      root.fail(e.what());
    }
  } else {
    s = read_scenario(root, &presets);
  }
  checked("", file, [&] { s.validate(); });
  return s;
}

std::string dump_scenarios(const std::vector<ScenarioParams>& s) {
  json items = json::array();
  for (const auto& x : s) items.push_back(write_scenario(x));
  return dump(json{{"scenarios", items}});
}

// ---------------------------------------------------------------- loading

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string default_data_dir() {
  if (const char* env = std::getenv("AIFP_DATA_DIR"); env != nullptr && *env != '\0') return env;
  const std::string installed = AIFP_INSTALLED_DATA_DIR;
  std::error_code ec;
  if (!installed.empty() && std::filesystem::is_directory(installed, ec)) return installed;
  return "data";
}

RunConfig default_run_config(const std::string& data_dir) {
  const std::filesystem::path dir(data_dir);
  return {(dir / "factors.json").string(), (dir / "catalog.json").string(), (dir / "portfolio.json").string(),
          (dir / "scenarios.json").string(), std::nullopt};
}

ModelInputs load_and_validate(const RunConfig& config) {
  auto load = [](const std::string& path) {
    if (!std::filesystem::exists(path)) throw ValidationError("", "file not found", path);
    return read_file(path);
  };
  ModelInputs in;
  in.factors = parse_factors(load(config.factors_path), config.factors_path);
  in.catalog = parse_catalog(load(config.catalog_path), config.catalog_path);
  in.portfolio = parse_portfolio(load(config.portfolio_path), config.portfolio_path);
  in.scenarios = parse_scenarios(load(config.scenarios_path), config.scenarios_path);
  if (config.region_blend) {
    in.portfolio.datacenter.region_weights = *config.region_blend;
    checked("datacenter", "region_blend", [&] { in.portfolio.datacenter.validate(); });
  }
  // the blend must only name regions the factor table covers
  checked("datacenter", config.portfolio_path,
          [&] { (void)blended_grid(in.portfolio.datacenter, in.factors); });
  return in;
}

ModelInputs default_inputs() {
  return {default_factors(), default_catalog(), default_portfolio(), preset_scenarios()};
}

Format parse_format(std::string_view key) {
  if (key == "table") return Format::Table;
  if (key == "json") return Format::Json;
  if (key == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(key) + "' (table, json, csv)");
}

// ---------------------------------------------------------------- reports

std::vector<ClusterRow> cluster_matrix(const ModelInputs& inputs) {
  const DatacenterProfile& dc = inputs.portfolio.datacenter;
  std::vector<ClusterRow> rows;
  rows.reserve(192);
  for (const auto& c : enumerate_clusters()) {
    ClusterRow row;
    row.cluster = c;
    row.energy = inference_demand(c, inputs.catalog, inputs.factors, dc).energy(dc.pue);
    row.impacts = inference_impact(c, inputs.catalog, inputs.factors, dc);
    row.score = eco_score(row.energy.total);
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

json impact_json(const ImpactVector& v) {
  json out = json::object();
  for (auto c : kCriteria) out[std::string(to_string(c))] = v[c];
  return out;
}

ImpactVector impact_from(const json& j) {
  ImpactVector v;
  for (auto c : kCriteria) v[c] = j.at(std::string(to_string(c))).get<double>();
  return v;
}

json units_json() {
  json out = json::object();
  for (auto c : kCriteria) out[std::string(to_string(c))] = std::string(unit_of(c));
  return out;
}

std::string criteria_header(const std::string& prefix = {}) {
  std::string out;
  for (auto c : kCriteria) {
    out += ",";
    out += prefix;
    out += to_string(c);
    out += "_";
    out += unit_of(c);
  }
  return out;
}

std::string criteria_csv(const ImpactVector& v) {
  std::string out;
  for (auto c : kCriteria) out += "," + sci(v[c]);
  return out;
}

/// Left-aligned text table with two-space gutters.
std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  std::size_t total = 0;
  for (auto w : width) total += w + 2;
  out += std::string(total > 2 ? total - 2 : 0, '-') + "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

json scenario_result_json(const ScenarioResult& r) {
  return {{"scenario", r.scenario},
          {"index", impact_json(r.index)},
          {"absolute", impact_json(r.absolute)},
          {"use_cases", r.use_cases},
          {"genai_share", r.genai_share}};
}

ScenarioResult scenario_result_from(const json& j) {
  ScenarioResult r;
  r.scenario = j.at("scenario").get<std::string>();
  r.index = impact_from(j.at("index"));
  r.absolute = impact_from(j.at("absolute"));
  r.use_cases = j.at("use_cases").get<double>();
  r.genai_share = j.at("genai_share").get<double>();
  return r;
}

json parse_result(std::string_view text) { return json::parse(text.begin(), text.end()); }

}  // namespace

std::string render_clusters(const std::vector<ClusterRow>& rows, Format format) {
  if (format == Format::Json) {
    json items = json::array();
    for (const auto& r : rows) {
      items.push_back({{"id", r.cluster.id()},
                       {"ai_type", to_string(r.cluster.ai_type)},
                       {"uc_type", to_string(r.cluster.uc_type)},
                       {"model_size", to_string(r.cluster.model_size)},
                       {"users", to_string(r.cluster.users)},
                       {"freq", to_string(r.cluster.freq)},
                       {"energy",
                        {{"compute", r.energy.compute},
                         {"storage", r.energy.storage},
                         {"network", r.energy.network},
                         {"total", r.energy.total}}},
                       {"operational", impact_json(r.impacts.operational)},
                       {"embodied", impact_json(r.impacts.embodied)},
                       {"eco_score", std::string(1, r.score.grade)},
                       {"beyond_scale", r.score.beyond_scale}});
    }
    return dump(json{{"units", units_json()}, {"clusters", items}});
  }
  if (format == Format::Csv) {
    std::string out = "id,ai_type,uc_type,model_size,users,freq,compute_kWh,storage_kWh,network_kWh,total_kWh" +
                      criteria_header("operational_") + criteria_header("embodied_") + ",eco_score\n";
    for (const auto& r : rows) {
      out += std::to_string(r.cluster.id()) + "," + std::string(to_string(r.cluster.ai_type)) + "," +
             std::string(to_string(r.cluster.uc_type)) + "," + std::string(to_string(r.cluster.model_size)) + "," +
             std::string(to_string(r.cluster.users)) + "," + std::string(to_string(r.cluster.freq)) + "," +
             sci(r.energy.compute) + "," + sci(r.energy.storage) + "," + sci(r.energy.network) + "," +
             sci(r.energy.total) + criteria_csv(r.impacts.operational) + criteria_csv(r.impacts.embodied) + "," +
             std::string(1, r.score.grade) + (r.score.beyond_scale ? "+" : "") + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) {
    body.push_back({std::to_string(r.cluster.id()), std::string(to_string(r.cluster.uc_type)),
                    std::string(to_string(r.cluster.model_size)), std::string(to_string(r.cluster.users)),
                    std::string(to_string(r.cluster.freq)), sci(r.energy.compute), sci(r.energy.storage),
                    sci(r.energy.network), sci(r.energy.total), sci(r.impacts.operational.gwp),
                    sci(r.impacts.embodied.gwp), std::string(1, r.score.grade) + (r.score.beyond_scale ? "+" : "")});
  }
  return text_table({"id", "type", "size", "users", "freq", "compute kWh", "storage kWh", "network kWh", "total kWh",
                     "op kgCO2eq", "emb kgCO2eq", "score"},
                    body);
}

std::vector<ClusterRow> clusters_from_json(std::string_view text) {
  const json doc = parse_result(text);
  std::vector<ClusterRow> rows;
  for (const auto& j : doc.at("clusters")) {
    ClusterRow r;
    r.cluster = {parse_ai_type(j.at("ai_type").get<std::string>()),
                 parse_use_case_type(j.at("uc_type").get<std::string>()),
                 parse_model_size(j.at("model_size").get<std::string>()),
                 parse_users_class(j.at("users").get<std::string>()),
                 parse_freq_class(j.at("freq").get<std::string>())};
    const auto& e = j.at("energy");
    r.energy = {e.at("compute").get<double>(), e.at("storage").get<double>(), e.at("network").get<double>(),
                e.at("total").get<double>()};
    r.impacts = {impact_from(j.at("operational")), impact_from(j.at("embodied"))};
    r.score = {j.at("eco_score").get<std::string>().at(0), j.at("beyond_scale").get<bool>()};
    rows.push_back(r);
  }
  return rows;
}

std::string render_footprint(const AnnualFootprint& fp, Format format) {
  if (format == Format::Json) {
    json cells = json::array();
    for (auto t : kUseCaseTypes) {
      for (auto step : kSteps) {
        for (auto comp : kComponents) {
          for (auto stage : kStages) {
            json c = {{"uc_type", to_string(t)},
                      {"ai_type", to_string(family_of(t))},
                      {"step", to_string(step)},
                      {"component", to_string(comp)},
                      {"stage", to_string(stage)}};
            c.update(impact_json(fp.cells(t).at(step, comp, stage)));
            cells.push_back(c);
          }
        }
      }
    }
    json breakdowns = json::object();
    for (auto s : kStages) breakdowns["stage"][std::string(to_string(s))] = impact_json(fp.of(s));
    for (auto s : kSteps) breakdowns["step"][std::string(to_string(s))] = impact_json(fp.of(s));
    for (auto c : kComponents) breakdowns["component"][std::string(to_string(c))] = impact_json(fp.of(c));
    for (auto a : kAiTypes) breakdowns["ai_type"][std::string(to_string(a))] = impact_json(fp.of(a));
    for (auto t : kUseCaseTypes) breakdowns["uc_type"][std::string(to_string(t))] = impact_json(fp.of(t));
    return dump(json{{"units", units_json()},
                     {"total", impact_json(fp.total)},
                     {"use_cases", fp.use_cases},
                     {"genai_use_cases", fp.genai_use_cases},
                     {"breakdowns", breakdowns},
                     {"cells", cells}});
  }

  // stage x step x component x ai_type pivot
  std::vector<std::array<std::string, 4>> keys;
  std::vector<ImpactVector> values;
  for (auto stage : kStages) {
    for (auto step : kSteps) {
      for (auto comp : kComponents) {
        for (auto ai : kAiTypes) {
          keys.push_back({std::string(to_string(stage)), std::string(to_string(step)), std::string(to_string(comp)),
                          std::string(to_string(ai))});
          values.push_back(fp.grid(ai).at(step, comp, stage));
        }
      }
    }
  }
  if (format == Format::Csv) {
    std::string out = "stage,step,component,ai_type" + criteria_header() + "\n";
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out += keys[i][0] + "," + keys[i][1] + "," + keys[i][2] + "," + keys[i][3] + criteria_csv(values[i]) + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::vector<std::string> row(keys[i].begin(), keys[i].end());
    for (auto c : kCriteria) row.push_back(sci(values[i][c]));
    body.push_back(row);
  }
  std::vector<std::string> total{"total", "", "", ""};
  for (auto c : kCriteria) total.push_back(sci(fp.total[c]));
  body.push_back(total);
  std::vector<std::string> header{"stage", "step", "component", "ai_type"};
  for (auto c : kCriteria) header.push_back(std::string(to_string(c)) + " " + std::string(unit_of(c)));
  return text_table(header, body);
}

AnnualFootprint footprint_from_json(std::string_view text) {
  const json doc = parse_result(text);
  AnnualFootprint fp;
  fp.total = impact_from(doc.at("total"));
  fp.use_cases = doc.at("use_cases").get<double>();
  fp.genai_use_cases = doc.at("genai_use_cases").get<double>();
  for (const auto& c : doc.at("cells")) {
    const auto t = parse_use_case_type(c.at("uc_type").get<std::string>());
    const auto step = c.at("step").get<std::string>() == "fine_tuning" ? Step::FineTuning : Step::Inference;
    Component comp{};
    for (auto k : kComponents) {
      if (to_string(k) == c.at("component").get<std::string>()) comp = k;
    }
    const auto stage = c.at("stage").get<std::string>() == "embodied" ? Stage::Embodied : Stage::Operational;
    fp.by_use_case[static_cast<std::size_t>(t)].at(step, comp, stage) = impact_from(c);
  }
  return fp;
}

std::string render_scenarios(const std::vector<ScenarioResult>& results, Format format) {
  if (format == Format::Json) {
    json items = json::array();
    for (const auto& r : results) items.push_back(scenario_result_json(r));
    return dump(json{{"baseline_index", 100}, {"results", items}});
  }
  if (format == Format::Csv) {
    std::string out = "scenario";
    for (auto c : kCriteria) out += "," + std::string(to_string(c)) + "_index";
    out += ",use_cases,genai_share\n";
    for (const auto& r : results) {
      out += r.scenario;
      for (auto c : kCriteria) out += "," + sci(r.index[c]);
      out += "," + sci(r.use_cases) + "," + sci(r.genai_share) + "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : results) {
    std::vector<std::string> row{r.scenario};
    for (auto c : kCriteria) row.push_back(fixed(r.index[c], 1));
    row.push_back(fixed(r.use_cases, 0));
    row.push_back(fixed(100.0 * r.genai_share, 0) + "%");
    body.push_back(row);
  }
  return text_table({"scenario", "energy", "ghg", "water", "primary energy", "resources", "use cases", "genai"},
                    body);
}

std::vector<ScenarioResult> scenarios_from_json(std::string_view text) {
  const json doc = parse_result(text);
  std::vector<ScenarioResult> out;
  for (const auto& j : doc.at("results")) out.push_back(scenario_result_from(j));
  return out;
}

std::string render_sweep(const SweepResult& sweep, Format format) {
  const std::string param(to_string(sweep.parameter));
  if (format == Format::Json) {
    json points = json::array();
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
      json p = scenario_result_json(sweep.points[i]);
      p["value"] = sweep.values[i];
      points.push_back(p);
    }
    json fit = nullptr;
    if (sweep.energy_fit) fit = {(*sweep.energy_fit)[0], (*sweep.energy_fit)[1], (*sweep.energy_fit)[2]};
    return dump(json{{"parameter", param}, {"points", points}, {"energy_fit", fit}});
  }
  if (format == Format::Csv) {
    std::string out = param;
    for (auto c : kCriteria) out += "," + std::string(to_string(c)) + "_index";
    out += "\n";
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
      out += sci(sweep.values[i]);
      for (auto c : kCriteria) out += "," + sci(sweep.points[i].index[c]);
      out += "\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < sweep.points.size(); ++i) {
    std::vector<std::string> row{fixed(sweep.values[i], 4)};
    for (auto c : kCriteria) row.push_back(fixed(sweep.points[i].index[c], 1));
    body.push_back(row);
  }
  std::string out = text_table({param, "energy", "ghg", "water", "primary energy", "resources"}, body);
  if (sweep.energy_fit) {
    const auto& f = *sweep.energy_fit;
    out += "energy index fit: " + sci(f[0]) + " + " + sci(f[1]) + " x + " + sci(f[2]) + " x^2\n";
  }
  return out;
}

SweepResult sweep_from_json(std::string_view text) {
  const json doc = parse_result(text);
  SweepResult s;
  s.parameter = parse_sweep_parameter(doc.at("parameter").get<std::string>());
  for (const auto& p : doc.at("points")) {
    s.values.push_back(p.at("value").get<double>());
    s.points.push_back(scenario_result_from(p));
  }
  if (!doc.at("energy_fit").is_null()) {
    const auto& f = doc.at("energy_fit");
    s.energy_fit = std::array<double, 3>{f.at(0).get<double>(), f.at(1).get<double>(), f.at(2).get<double>()};
  }
  return s;
}

std::string render_offset(const OffsetReport& report, Format format) {
  const auto& r = report.result;
  if (format == Format::Json) {
    return dump(json{{"scenario", report.scenario},
                     {"target_fraction", report.target_fraction},
                     {"pue", report.pue},
                     {"grid_reduction", report.grid_reduction},
                     {"hardware_efficiency_factor", r.factor},
                     {"iterations", r.iterations},
                     {"projection", scenario_result_json(r.projection)}});
  }
  if (format == Format::Csv) {
    return "scenario,target_fraction,pue,grid_reduction,hardware_efficiency_factor,energy_index,ghg_index\n" +
           report.scenario + "," + sci(report.target_fraction) + "," + sci(report.pue) + "," +
           sci(report.grid_reduction) + "," + sci(r.factor) + "," + sci(r.projection.index.final_energy) + "," +
           sci(r.projection.index.gwp) + "\n";
  }
  return text_table({"scenario", "target", "pue", "grid factor", "hardware factor", "energy", "ghg"},
                    {{report.scenario, fixed(100.0 * report.target_fraction, 0) + "%", fixed(report.pue, 2),
                      fixed(1.0 - report.grid_reduction, 2), fixed(r.factor, 1),
                      fixed(r.projection.index.final_energy, 1), fixed(r.projection.index.gwp, 1)}});
}

std::string render_score(double kwh, const EcoScore& score, Format format) {
  const std::string grade(1, score.grade);
  if (format == Format::Json) {
    return dump(json{{"kwh", kwh}, {"grade", grade}, {"beyond_scale", score.beyond_scale}});
  }
  if (format == Format::Csv) {
    return "kwh,grade,beyond_scale\n" + sci(kwh) + "," + grade + "," + (score.beyond_scale ? "true" : "false") + "\n";
  }
  return grade + (score.beyond_scale ? " (beyond scale)" : "") + "\n";
}

}  // namespace aifp
