#include "aifp/usecase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aifp/errors.hpp"

namespace aifp {

std::string_view to_string(AiType t) { return t == AiType::GenAI ? "genai" : "traditional"; }

std::string_view to_string(UseCaseType t) {
  switch (t) {
    case UseCaseType::Chat: return "chat";
    case UseCaseType::Rag: return "rag";
    case UseCaseType::Agents: return "agents";
    case UseCaseType::Tabular: return "tabular";
    case UseCaseType::ComputerVision: return "cv";
    case UseCaseType::Nlp: return "nlp";
  }
  return "?";
}

std::string_view to_string(ModelSize s) {
  switch (s) {
    case ModelSize::Low: return "low";
    case ModelSize::Medium: return "medium";
    case ModelSize::High: return "high";
    case ModelSize::NA: return "na";
  }
  return "?";
}

std::string_view to_string(UsersClass u) {
  switch (u) {
    case UsersClass::Low: return "low";
    case UsersClass::Medium: return "medium";
    case UsersClass::High: return "high";
    case UsersClass::VeryHigh: return "very_high";
  }
  return "?";
}

std::string_view to_string(FreqClass f) {
  switch (f) {
    case FreqClass::Low: return "low";
    case FreqClass::Medium: return "medium";
    case FreqClass::High: return "high";
    case FreqClass::VeryHigh: return "very_high";
  }
  return "?";
}

namespace {

template <typename Enum, std::size_t N>
Enum parse_key(const std::array<Enum, N>& values, std::string_view key, const char* what) {
  for (auto v : values) {
    if (to_string(v) == key) return v;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(key) + "'");
}

}  // namespace

AiType parse_ai_type(std::string_view key) { return parse_key(kAiTypes, key, "ai type"); }
UseCaseType parse_use_case_type(std::string_view key) { return parse_key(kUseCaseTypes, key, "use case type"); }
ModelSize parse_model_size(std::string_view key) {
  if (key == "na") return ModelSize::NA;
  return parse_key(kModelSizes, key, "model size");
}
UsersClass parse_users_class(std::string_view key) { return parse_key(kUsersClasses, key, "users class"); }
FreqClass parse_freq_class(std::string_view key) { return parse_key(kFreqClasses, key, "frequency class"); }

AiType family_of(UseCaseType t) {
  switch (t) {
    case UseCaseType::Chat:
    case UseCaseType::Rag:
    case UseCaseType::Agents: return AiType::GenAI;
    default: return AiType::Traditional;
  }
}

double users_count(UsersClass u) {
  switch (u) {
    case UsersClass::Low: return 10.0;
    case UsersClass::Medium: return 100.0;
    case UsersClass::High: return 1000.0;
    case UsersClass::VeryHigh: return 10000.0;
  }
  return 0.0;
}

void UseCaseCluster::validate() const {
  if (family_of(uc_type) != ai_type) throw ValidationError("uc_type", "use case type does not belong to ai type");
  const bool sized = model_size != ModelSize::NA;
  if (sized != (ai_type == AiType::GenAI)) {
    throw ValidationError("model_size", "model size is required for genai and must be na for traditional");
  }
}

int UseCaseCluster::id() const {
  validate();
  const int u = static_cast<int>(users);
  const int f = static_cast<int>(freq);
  if (ai_type == AiType::GenAI) {
    const int t = static_cast<int>(uc_type);
    const int s = static_cast<int>(model_size);
    return ((t * 3 + s) * 4 + u) * 4 + f + 1;
  }
  const int t = static_cast<int>(uc_type) - static_cast<int>(UseCaseType::Tabular);
  return 144 + (t * 4 + u) * 4 + f + 1;
}

std::string UseCaseCluster::label() const {
  std::string out(to_string(ai_type));
  out += '/';
  out += to_string(uc_type);
  out += '/';
  out += to_string(model_size);
  out += "/users=";
  out += to_string(users);
  out += "/freq=";
  out += to_string(freq);
  return out;
}

std::vector<UseCaseCluster> enumerate_clusters() {
  std::vector<UseCaseCluster> out;
  out.reserve(192);
  for (auto t : kGenAiTypes) {
    for (auto s : kModelSizes) {
      for (auto u : kUsersClasses) {
        for (auto f : kFreqClasses) out.push_back({AiType::GenAI, t, s, u, f});
      }
    }
  }
  for (auto t : kTraditionalTypes) {
    for (auto u : kUsersClasses) {
      for (auto f : kFreqClasses) out.push_back({AiType::Traditional, t, ModelSize::NA, u, f});
    }
  }
  return out;
}

namespace {

void require(bool ok, const std::string& field, const char* message) {
  if (!ok) throw ValidationError(field, message);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void ModelProfile::validate() const {
  require(finite_pos(params_billion), "params_billion", "must be > 0");
  require(finite_nonneg(ttft_100), "ttft_100", "must be >= 0");
  require(finite_nonneg(ttft_1000), "ttft_1000", "must be >= 0");
  require(finite_pos(throughput_100), "throughput_100", "must be > 0");
  require(finite_pos(throughput_1000), "throughput_1000", "must be > 0");
  require(finite_pos(bytes_per_param), "bytes_per_param", "must be > 0");
  require(finite_pos(memory_overhead), "memory_overhead", "must be > 0");
  require(finite_pos(vgpu_memory_gb), "vgpu_memory_gb", "must be > 0");
}

int vgpu_count(const ModelProfile& profile) {
  require(finite_pos(profile.params_billion), "params_billion", "must be > 0");
  require(finite_pos(profile.vgpu_memory_gb), "vgpu_memory_gb", "must be > 0");
  const double gb = profile.params_billion * profile.bytes_per_param * profile.memory_overhead;
  return static_cast<int>(std::ceil(gb / profile.vgpu_memory_gb));
}

void WorkloadShape::validate() const {
  require(finite_nonneg(input_tokens), "input_tokens", "must be >= 0");
  require(finite_nonneg(output_tokens), "output_tokens", "must be >= 0");
  require(finite_pos(llm_calls), "llm_calls", "must be > 0");
  require(finite_nonneg(tool_calls), "tool_calls", "must be >= 0");
  require(finite_nonneg(payload_factor), "payload_factor", "must be >= 0");
}

void TraditionalTask::validate() const {
  require(finite_nonneg(compute_energy), "compute_energy", "must be >= 0");
  require(finite_nonneg(data_gb), "data_gb", "must be >= 0");
  require(std::isfinite(cpu_energy_fraction) && cpu_energy_fraction >= 0.0 && cpu_energy_fraction <= 1.0,
          "cpu_energy_fraction", "must lie in [0, 1]");
}

void FineTuningPlan::validate() const {
  require(finite_nonneg(runs), "runs", "must be >= 0");
  require(finite_nonneg(epochs), "epochs", "must be >= 0");
  require(finite_nonneg(samples), "samples", "must be >= 0");
  require(finite_pos(batch_size), "batch_size", "must be > 0");
  require(finite_nonneg(passes), "passes", "must be >= 0");
  if (step_energy) require(finite_nonneg(*step_energy), "step_energy", "must be >= 0");
  require(finite_nonneg(dataset_gb), "dataset_gb", "must be >= 0");
  require(finite_nonneg(storage_hours), "storage_hours", "must be >= 0");
  require(finite_nonneg(downloads), "downloads", "must be >= 0");
}

void Catalog::validate() const {
  auto nested = [](const std::string& prefix, auto&& fn) {
    try {
      fn();
    } catch (const ValidationError& e) {
      throw ValidationError(prefix + "." + e.field(), e.message());
    }
  };
  for (auto s : kModelSizes) {
    const std::string key = "models." + std::string(to_string(s));
    auto it = models.find(s);
    if (it == models.end()) throw ValidationError(key, "missing model profile");
    nested(key, [&] { it->second.validate(); });
  }
  for (auto t : kGenAiTypes) {
    const std::string key = "workloads." + std::string(to_string(t));
    auto it = workloads.find(t);
    if (it == workloads.end()) throw ValidationError(key, "missing workload shape");
    nested(key, [&] { it->second.validate(); });
  }
  for (auto t : kTraditionalTypes) {
    const std::string key = "traditional." + std::string(to_string(t));
    auto it = traditional.find(t);
    if (it == traditional.end()) throw ValidationError(key, "missing traditional task");
    nested(key, [&] { it->second.validate(); });
    const std::string ft = "fine_tuning." + std::string(to_string(t));
    auto jt = fine_tuning.find(t);
    if (jt == fine_tuning.end()) throw ValidationError(ft, "missing fine-tuning plan");
    nested(ft, [&] { jt->second.validate(); });
  }
  if (traditional.find(UseCaseType::Nlp) == traditional.end()) {
    throw ValidationError("traditional.nlp", "tool calls need the nlp task");
  }
  require(finite_pos(bytes_per_token), "bytes_per_token", "must be > 0");
  require(finite_nonneg(storage_retention_hours), "storage_retention_hours", "must be >= 0");
  require(std::isfinite(reference_pue) && reference_pue >= 1.0, "reference_pue", "must be >= 1");
  require(finite_pos(lifetime_years), "lifetime_years", "must be > 0");
}

EnergyBreakdown Demand::energy(double pue) const {
  return EnergyBreakdown::of((it_vcpu + it_vgpu) * pue, it_storage * pue, network);
}

Demand& Demand::operator+=(const Demand& o) {
  it_vcpu += o.it_vcpu;
  it_vgpu += o.it_vgpu;
  it_storage += o.it_storage;
  network += o.network;
  usage += o.usage;
  return *this;
}

Demand& Demand::operator*=(double s) {
  it_vcpu *= s;
  it_vgpu *= s;
  it_storage *= s;
  network *= s;
  usage *= s;
  return *this;
}

double storage_energy_per_inference(double data_gb, const Catalog& catalog, const EmissionFactorTable& factors,
                                    const DatacenterProfile& dc) {
  if (!finite_nonneg(data_gb)) throw std::invalid_argument("data size must be >= 0");
  const double gb_hours = data_gb * catalog.storage_retention_hours;
  return gb_hours * factors.at(Capacity::StorageGbHour).it_power / 1000.0 * dc.pue;
}

double network_energy_per_inference(double data_gb, const EmissionFactorTable& factors) {
  if (!finite_nonneg(data_gb)) throw std::invalid_argument("data size must be >= 0");
  return data_gb * factors.at(Capacity::NetworkGb).it_power;
}

double genai_payload_gb(const WorkloadShape& shape, const Catalog& catalog) {
  return (shape.input_tokens + shape.output_tokens) * catalog.bytes_per_token * shape.payload_factor * 1e-9;
}

namespace {

/// IT compute energy split into vCPU and vGPU shares with matching capacity hours.
void add_compute(Demand& d, double it_kwh, double cpu_fraction, const EmissionFactorTable& factors) {
  const double cpu = it_kwh * cpu_fraction;
  const double gpu = it_kwh - cpu;
  d.it_vcpu += cpu;
  d.it_vgpu += gpu;
  d.usage.vcpu_hours += cpu * 1000.0 / factors.at(Capacity::VcpuHour).it_power;
  d.usage.vgpu_hours += gpu * 1000.0 / factors.at(Capacity::VgpuHour).it_power;
}

void add_payload(Demand& d, double gb, double storage_hours, double downloads, const EmissionFactorTable& factors) {
  d.usage.storage_gb_hours += gb * storage_hours;
  d.usage.network_gb += gb * downloads;
  d.it_storage += it_energy(ResourceUsage{0.0, 0.0, gb * storage_hours, 0.0}, Capacity::StorageGbHour, factors);
  d.network += it_energy(ResourceUsage{0.0, 0.0, 0.0, gb * downloads}, Capacity::NetworkGb, factors);
}

const TraditionalTask& task_of(UseCaseType uc, const Catalog& catalog) {
  auto it = catalog.traditional.find(uc);
  if (it == catalog.traditional.end()) {
    throw ValidationError("traditional." + std::string(to_string(uc)), "missing traditional task");
  }
  return it->second;
}

/// Traditional inference compute, IT side.
void add_traditional_compute(Demand& d, const TraditionalTask& task, double scale, const Catalog& catalog,
                             const EmissionFactorTable& factors) {
  add_compute(d, task.compute_energy / catalog.reference_pue * scale, task.cpu_energy_fraction, factors);
}

}  // namespace

Demand inference_demand(const UseCaseCluster& cluster, const Catalog& catalog, const EmissionFactorTable& factors,
                        const DatacenterProfile& dc, const ComputeScaling& scaling) {
  cluster.validate();
  Demand d;
  if (cluster.ai_type == AiType::Traditional) {
    const auto& task = task_of(cluster.uc_type, catalog);
    add_traditional_compute(d, task, scaling.traditional, catalog, factors);
    add_payload(d, task.data_gb, catalog.storage_retention_hours, 1.0, factors);
    return d;
  }

  auto mit = catalog.models.find(cluster.model_size);
  if (mit == catalog.models.end()) {
    throw ValidationError("models." + std::string(to_string(cluster.model_size)), "missing model profile");
  }
  auto wit = catalog.workloads.find(cluster.uc_type);
  if (wit == catalog.workloads.end()) {
    throw ValidationError("workloads." + std::string(to_string(cluster.uc_type)), "missing workload shape");
  }
  const ModelProfile& model = mit->second;
  const WorkloadShape& shape = wit->second;

  const double ttft = shape.long_prompt ? model.ttft_1000 : model.ttft_100;
  const double throughput = shape.long_prompt ? model.throughput_1000 : model.throughput_100;
  const double seconds = (ttft + shape.output_tokens / throughput) * shape.llm_calls;
  const double vgpu_hours = seconds / 3600.0 * vgpu_count(model) * scaling.model;
  d.usage.vgpu_hours = vgpu_hours;
  d.it_vgpu = vgpu_hours * factors.at(Capacity::VgpuHour).it_power / 1000.0;

  if (shape.tool_calls > 0.0) {
    const auto& nlp = task_of(UseCaseType::Nlp, catalog);
    add_traditional_compute(d, nlp, shape.tool_calls * scaling.tool, catalog, factors);
  }
  add_payload(d, genai_payload_gb(shape, catalog), catalog.storage_retention_hours, 1.0, factors);
  (void)dc;
  return d;
}

Demand finetuning_demand(UseCaseType uc, const Catalog& catalog, const EmissionFactorTable& factors,
                         const DatacenterProfile& dc, const ComputeScaling& scaling) {
  (void)dc;
  Demand d;
  if (family_of(uc) == AiType::GenAI) return d;
  auto it = catalog.fine_tuning.find(uc);
  if (it == catalog.fine_tuning.end()) {
    throw ValidationError("fine_tuning." + std::string(to_string(uc)), "missing fine-tuning plan");
  }
  const FineTuningPlan& plan = it->second;
  const auto& task = task_of(uc, catalog);
  const double step = plan.step_energy ? *plan.step_energy : task.compute_energy / catalog.reference_pue;
  const double steps = plan.runs * plan.epochs * (plan.samples / plan.batch_size) * plan.passes;
  add_compute(d, steps * step / catalog.reference_pue * scaling.traditional, task.cpu_energy_fraction, factors);
  add_payload(d, plan.dataset_gb, plan.storage_hours, plan.downloads, factors);
  return d;
}

EnergyBreakdown genai_inference_energy(const UseCaseCluster& cluster, const Catalog& catalog,
                                       const EmissionFactorTable& factors, const DatacenterProfile& dc) {
  if (cluster.ai_type != AiType::GenAI) throw std::invalid_argument("genai_inference_energy: not a genai cluster");
  return inference_demand(cluster, catalog, factors, dc).energy(dc.pue);
}

EnergyBreakdown traditional_inference_energy(UseCaseType uc, const Catalog& catalog,
                                             const EmissionFactorTable& factors, const DatacenterProfile& dc) {
  if (family_of(uc) != AiType::Traditional) {
    throw std::invalid_argument("traditional_inference_energy: not a traditional type");
  }
  const UseCaseCluster cluster{AiType::Traditional, uc, ModelSize::NA, UsersClass::Low, FreqClass::Low};
  return inference_demand(cluster, catalog, factors, dc).energy(dc.pue);
}

EnergyBreakdown finetuning_energy(UseCaseType uc, const Catalog& catalog, const EmissionFactorTable& factors,
                                  const DatacenterProfile& dc) {
  return finetuning_demand(uc, catalog, factors, dc).energy(dc.pue);
}

ImpactGrid demand_impacts(Step step, const Demand& demand, const DatacenterProfile& dc,
                          const EmissionFactorTable& factors, EmbodiedScope scope) {
  ImpactGrid grid;
  grid.at(step, Component::ComputeVcpu, Stage::Operational) = operational_impact(demand.it_vcpu, dc, factors);
  grid.at(step, Component::ComputeVgpu, Stage::Operational) = operational_impact(demand.it_vgpu, dc, factors);
  grid.at(step, Component::Storage, Stage::Operational) = operational_impact(demand.it_storage, dc, factors);
  grid.at(step, Component::Network, Stage::Operational) = operational_impact(0.0, dc, factors, demand.network);

  const ResourceUsage& u = demand.usage;
  grid.at(step, Component::ComputeVcpu, Stage::Embodied) = embodied_impact({u.vcpu_hours, 0, 0, 0}, factors, scope);
  grid.at(step, Component::ComputeVgpu, Stage::Embodied) = embodied_impact({0, u.vgpu_hours, 0, 0}, factors, scope);
  grid.at(step, Component::Storage, Stage::Embodied) =
      embodied_impact({0, 0, u.storage_gb_hours, 0}, factors, scope);
  grid.at(step, Component::Network, Stage::Embodied) = embodied_impact({0, 0, 0, u.network_gb}, factors, scope);
  return grid;
}

StageImpacts inference_impact(const UseCaseCluster& cluster, const Catalog& catalog,
                              const EmissionFactorTable& factors, const DatacenterProfile& dc, EmbodiedScope scope) {
  const ImpactGrid grid = demand_impacts(Step::Inference, inference_demand(cluster, catalog, factors, dc), dc,
                                         factors, scope);
  return {grid.total(Stage::Operational), grid.total(Stage::Embodied)};
}

}  // namespace aifp
