#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aifp/factors.hpp"
#include "aifp/impact.hpp"
#include "aifp/lca.hpp"

namespace aifp {

enum class AiType : std::uint8_t { GenAI, Traditional };
enum class UseCaseType : std::uint8_t { Chat, Rag, Agents, Tabular, ComputerVision, Nlp };
enum class ModelSize : std::uint8_t { Low, Medium, High, NA };
enum class UsersClass : std::uint8_t { Low, Medium, High, VeryHigh };
enum class FreqClass : std::uint8_t { Low, Medium, High, VeryHigh };

inline constexpr std::array<AiType, 2> kAiTypes{AiType::GenAI, AiType::Traditional};
inline constexpr std::array<UseCaseType, 6> kUseCaseTypes{UseCaseType::Chat,    UseCaseType::Rag,
                                                          UseCaseType::Agents,  UseCaseType::Tabular,
                                                          UseCaseType::ComputerVision, UseCaseType::Nlp};
inline constexpr std::array<UseCaseType, 3> kGenAiTypes{UseCaseType::Chat, UseCaseType::Rag, UseCaseType::Agents};
inline constexpr std::array<UseCaseType, 3> kTraditionalTypes{UseCaseType::Tabular, UseCaseType::ComputerVision,
                                                              UseCaseType::Nlp};
inline constexpr std::array<ModelSize, 3> kModelSizes{ModelSize::Low, ModelSize::Medium, ModelSize::High};
inline constexpr std::array<UsersClass, 4> kUsersClasses{UsersClass::Low, UsersClass::Medium, UsersClass::High,
                                                         UsersClass::VeryHigh};
inline constexpr std::array<FreqClass, 4> kFreqClasses{FreqClass::Low, FreqClass::Medium, FreqClass::High,
                                                       FreqClass::VeryHigh};

std::string_view to_string(AiType t);
std::string_view to_string(UseCaseType t);
std::string_view to_string(ModelSize s);
std::string_view to_string(UsersClass u);
std::string_view to_string(FreqClass f);

/// Throw std::invalid_argument for unknown keys.
AiType parse_ai_type(std::string_view key);
UseCaseType parse_use_case_type(std::string_view key);
ModelSize parse_model_size(std::string_view key);
UsersClass parse_users_class(std::string_view key);
FreqClass parse_freq_class(std::string_view key);

AiType family_of(UseCaseType t);

/// Number of users behind a users class: 10, 100, 1000, 10000.
double users_count(UsersClass u);

struct UseCaseCluster {
  AiType ai_type{};
  UseCaseType uc_type{};
  ModelSize model_size{ModelSize::NA};
  UsersClass users{};
  FreqClass freq{};

  /// Throws ValidationError when the family, type and size disagree.
  void validate() const;
  /// Stable 1-based position in enumerate_clusters().
  int id() const;
  std::string label() const;

  bool operator==(const UseCaseCluster&) const = default;
};

/// All 192 clusters: GenAI (type, size, users, freq) first, then Traditional (type, users, freq).
std::vector<UseCaseCluster> enumerate_clusters();

/// LLM serving profile measured at two prompt lengths.
struct ModelProfile {
  std::string name;
  double params_billion{};
  double ttft_100{};        // s
  double throughput_100{};  // tokens/s
  double ttft_1000{};
  double throughput_1000{};
  double bytes_per_param{2.0};
  double memory_overhead{1.3};
  double vgpu_memory_gb{10.0};

  void validate() const;
};

/// ceil(params * bytes_per_param * overhead / vgpu_memory). Throws ValidationError if params <= 0.
int vgpu_count(const ModelProfile& profile);

/// Token profile of one generative request.
struct WorkloadShape {
  double input_tokens{};
  double output_tokens{};
  double llm_calls{1.0};      // full TTFT paid on each call
  double tool_calls{0.0};     // NLP inferences issued by the workflow
  double payload_factor{1.0};  // multiplier on the logged request/response payload
  bool long_prompt{false};    // use the 1000-token serving row

  void validate() const;
};

/// Measured per-inference figures of a traditional task.
struct TraditionalTask {
  double compute_energy{};       // kWh at the catalog reference PUE
  double data_gb{};              // payload per inference
  double cpu_energy_fraction{};  // share of IT compute energy drawn by vCPUs, rest by vGPUs

  void validate() const;
};

/// Lifetime fine-tuning plan of a traditional task.
struct FineTuningPlan {
  double runs{};              // training runs over the model lifetime
  double epochs{};
  double samples{};           // training items per epoch
  double batch_size{1.0};
  double passes{2.0};         // forward + backward per batch
  std::optional<double> step_energy;  // kWh per batch pass at reference PUE; default: one inference / PUE
  double dataset_gb{};
  double storage_hours{};
  double downloads{};

  void validate() const;
};

struct Catalog {
  std::string version;
  std::map<ModelSize, ModelProfile> models;
  std::map<UseCaseType, WorkloadShape> workloads;
  std::map<UseCaseType, TraditionalTask> traditional;
  std::map<UseCaseType, FineTuningPlan> fine_tuning;
  double bytes_per_token{4.0};
  double storage_retention_hours{8760.0};
  double reference_pue{1.15};
  double lifetime_years{5.0};

  /// Throws ValidationError naming the missing or invalid entry.
  void validate() const;
};

struct EnergyBreakdown {
  double compute{};
  double storage{};
  double network{};
  double total{};

  static EnergyBreakdown of(double compute, double storage, double network) {
    return {compute, storage, network, compute + storage + network};
  }
  bool operator==(const EnergyBreakdown&) const = default;
};

/// Multipliers on compute demand, all 1 for the reference year.
struct ComputeScaling {
  double model{1.0};        // LLM generation
  double tool{1.0};         // NLP tool calls inside generative workflows
  double traditional{1.0};  // traditional inference and fine-tuning

  bool operator==(const ComputeScaling&) const = default;
};

/// IT-side demand of an activity: energies drawn per component and capacity consumed.
struct Demand {
  double it_vcpu{};     // kWh
  double it_vgpu{};     // kWh
  double it_storage{};  // kWh
  double network{};     // kWh, delivered outside the datacenter
  ResourceUsage usage;

  EnergyBreakdown energy(double pue) const;
  Demand& operator+=(const Demand& o);
  Demand& operator*=(double s);
};

double storage_energy_per_inference(double data_gb, const Catalog& catalog, const EmissionFactorTable& factors,
                                    const DatacenterProfile& dc);
double network_energy_per_inference(double data_gb, const EmissionFactorTable& factors);

/// Payload logged per generative request, in GB.
double genai_payload_gb(const WorkloadShape& shape, const Catalog& catalog);

/// Per-inference demand of a cluster (users and frequency do not matter).
Demand inference_demand(const UseCaseCluster& cluster, const Catalog& catalog, const EmissionFactorTable& factors,
                        const DatacenterProfile& dc, const ComputeScaling& scaling = {});

/// Lifetime fine-tuning demand; zero for generative clusters.
Demand finetuning_demand(UseCaseType uc, const Catalog& catalog, const EmissionFactorTable& factors,
                         const DatacenterProfile& dc, const ComputeScaling& scaling = {});

EnergyBreakdown genai_inference_energy(const UseCaseCluster& cluster, const Catalog& catalog,
                                       const EmissionFactorTable& factors, const DatacenterProfile& dc);
EnergyBreakdown traditional_inference_energy(UseCaseType uc, const Catalog& catalog,
                                             const EmissionFactorTable& factors, const DatacenterProfile& dc);
/// Lifetime totals; divide by catalog.lifetime_years for a yearly share.
EnergyBreakdown finetuning_energy(UseCaseType uc, const Catalog& catalog, const EmissionFactorTable& factors,
                                  const DatacenterProfile& dc);

/// Operational and embodied cells of one step for a demand record.
ImpactGrid demand_impacts(Step step, const Demand& demand, const DatacenterProfile& dc,
                          const EmissionFactorTable& factors, EmbodiedScope scope = EmbodiedScope::ComputeOnly);

struct StageImpacts {
  ImpactVector operational;
  ImpactVector embodied;
};

StageImpacts inference_impact(const UseCaseCluster& cluster, const Catalog& catalog,
                              const EmissionFactorTable& factors, const DatacenterProfile& dc,
                              EmbodiedScope scope = EmbodiedScope::ComputeOnly);

}  // namespace aifp
