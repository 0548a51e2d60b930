#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "aifp/factors.hpp"
#include "aifp/impact.hpp"

namespace aifp {

enum class Step : std::uint8_t { FineTuning, Inference };
enum class Component : std::uint8_t { ComputeVcpu, ComputeVgpu, Storage, Network };
enum class Stage : std::uint8_t { Embodied, Operational };

inline constexpr std::array<Step, 2> kSteps{Step::FineTuning, Step::Inference};
inline constexpr std::array<Component, 4> kComponents{Component::ComputeVcpu, Component::ComputeVgpu,
                                                      Component::Storage, Component::Network};
inline constexpr std::array<Stage, 2> kStages{Stage::Embodied, Stage::Operational};

std::string_view to_string(Step s);
std::string_view to_string(Component c);
std::string_view to_string(Stage s);

/// Capacity consumed by an activity, in the units of the factor table rows.
struct ResourceUsage {
  double vcpu_hours{};
  double vgpu_hours{};
  double storage_gb_hours{};
  double network_gb{};

  double operator[](Capacity c) const;

  ResourceUsage& operator+=(const ResourceUsage& o);
  ResourceUsage& operator*=(double s);
  bool operator==(const ResourceUsage&) const = default;
};

inline ResourceUsage operator+(ResourceUsage a, const ResourceUsage& b) { return a += b; }
inline ResourceUsage operator*(ResourceUsage u, double s) { return u *= s; }

/// Which capacities carry embodied impacts for an activity.
enum class EmbodiedScope : std::uint8_t { ComputeOnly, AllCapacities };

/**
 * @brief Location-based operational impact of delivered energy.
 *
 * `it_energy` (kWh) is drawn inside the datacenter and scaled by PUE;
 * `network_energy` (kWh) is delivered by the backbone and is not. Grid
 * criteria use the region-blended intensity of the final energy. Cooling
 * water is WUE times the PUE-normalised final energy, characterised with the
 * water-supply row.
 *
 * Throws ValidationError if the region weights do not sum to 1.
 */
ImpactVector operational_impact(double it_energy, const DatacenterProfile& profile,
                                const EmissionFactorTable& factors, double network_energy = 0.0);

/// Componentwise sum of usage times per-unit embodied rows.
ImpactVector embodied_impact(const ResourceUsage& usage, const EmissionFactorTable& factors,
                             EmbodiedScope scope = EmbodiedScope::AllCapacities);

/// IT energy (kWh) drawn by each capacity of a usage record; network energy for NetworkGb.
double it_energy(const ResourceUsage& usage, Capacity capacity, const EmissionFactorTable& factors);

/// Impacts of one step split over component and stage.
class ImpactGrid {
 public:
  ImpactVector& at(Step step, Component component, Stage stage) { return cells_[index(step, component, stage)]; }
  const ImpactVector& at(Step step, Component component, Stage stage) const {
    return cells_[index(step, component, stage)];
  }

  /// Sum over every (step, component, stage) cell in enumeration order.
  ImpactVector total() const;
  ImpactVector total(Stage stage) const;
  ImpactVector total(Step step) const;

  ImpactGrid& operator+=(const ImpactGrid& o);
  ImpactGrid& operator*=(double s);
  bool operator==(const ImpactGrid&) const = default;

  static constexpr std::size_t index(Step step, Component component, Stage stage) {
    return (static_cast<std::size_t>(step) * 4 + static_cast<std::size_t>(component)) * 2 +
           static_cast<std::size_t>(stage);
  }
  static constexpr std::size_t kCells = 16;

 private:
  std::array<ImpactVector, kCells> cells_{};
};

/// Fill the cells of `step` from a usage record.
void add_step_impacts(ImpactGrid& grid, Step step, const ResourceUsage& usage, const DatacenterProfile& profile,
                      const EmissionFactorTable& factors, EmbodiedScope scope);

}  // namespace aifp
