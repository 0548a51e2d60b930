#include "aifp/lca.hpp"

namespace aifp {

std::string_view to_string(Step s) { return s == Step::FineTuning ? "fine_tuning" : "inference"; }

std::string_view to_string(Component c) {
  switch (c) {
    case Component::ComputeVcpu: return "compute_vcpu";
    case Component::ComputeVgpu: return "compute_vgpu";
    case Component::Storage: return "storage";
    case Component::Network: return "network";
  }
  return "?";
}

std::string_view to_string(Stage s) { return s == Stage::Embodied ? "embodied" : "operational"; }

double ResourceUsage::operator[](Capacity c) const {
  switch (c) {
    case Capacity::VcpuHour: return vcpu_hours;
    case Capacity::VgpuHour: return vgpu_hours;
    case Capacity::StorageGbHour: return storage_gb_hours;
    case Capacity::NetworkGb: return network_gb;
  }
  return 0.0;
}

ResourceUsage& ResourceUsage::operator+=(const ResourceUsage& o) {
  vcpu_hours += o.vcpu_hours;
  vgpu_hours += o.vgpu_hours;
  storage_gb_hours += o.storage_gb_hours;
  network_gb += o.network_gb;
  return *this;
}

ResourceUsage& ResourceUsage::operator*=(double s) {
  vcpu_hours *= s;
  vgpu_hours *= s;
  storage_gb_hours *= s;
  network_gb *= s;
  return *this;
}

ImpactVector operational_impact(double it_energy, const DatacenterProfile& profile,
                                const EmissionFactorTable& factors, double network_energy) {
  const EnergyIntensity grid = blended_grid(profile, factors);
  const double final_energy = it_energy * profile.pue + network_energy;
  const double cooling_litres = final_energy / profile.pue * profile.wue;

  ImpactVector out;
  out.final_energy = final_energy;
  out.gwp = final_energy * grid.gwp;
  out.water = final_energy * grid.water + cooling_litres * factors.water_supply.water;
  out.primary_energy = final_energy * grid.primary_energy;
  out.adp = final_energy * grid.adp;
  return out;
}

ImpactVector embodied_impact(const ResourceUsage& usage, const EmissionFactorTable& factors, EmbodiedScope scope) {
  ImpactVector out;
  for (auto c : kCapacities) {
    const bool compute = c == Capacity::VcpuHour || c == Capacity::VgpuHour;
    if (!compute && scope == EmbodiedScope::ComputeOnly) continue;
    out += factors.at(c).embodied * usage[c];
  }
  return out;
}

double it_energy(const ResourceUsage& usage, Capacity capacity, const EmissionFactorTable& factors) {
  const double power = factors.at(capacity).it_power;
  if (capacity == Capacity::NetworkGb) return usage[capacity] * power;  // already kWh/GB
  return usage[capacity] * power / 1000.0;                              // W x h -> kWh
}

ImpactVector ImpactGrid::total() const {
  ImpactVector sum;
  for (const auto& c : cells_) sum += c;
  return sum;
}

ImpactVector ImpactGrid::total(Stage stage) const {
  ImpactVector sum;
  for (auto step : kSteps) {
    for (auto comp : kComponents) sum += at(step, comp, stage);
  }
  return sum;
}

ImpactVector ImpactGrid::total(Step step) const {
  ImpactVector sum;
  for (auto comp : kComponents) {
    for (auto stage : kStages) sum += at(step, comp, stage);
  }
  return sum;
}

ImpactGrid& ImpactGrid::operator+=(const ImpactGrid& o) {
  for (std::size_t i = 0; i < kCells; ++i) cells_[i] += o.cells_[i];
  return *this;
}

ImpactGrid& ImpactGrid::operator*=(double s) {
  for (auto& c : cells_) c *= s;
  return *this;
}

namespace {

Capacity capacity_of(Component c) {
  switch (c) {
    case Component::ComputeVcpu: return Capacity::VcpuHour;
    case Component::ComputeVgpu: return Capacity::VgpuHour;
    case Component::Storage: return Capacity::StorageGbHour;
    case Component::Network: return Capacity::NetworkGb;
  }
  return Capacity::VcpuHour;
}

}  // namespace

void add_step_impacts(ImpactGrid& grid, Step step, const ResourceUsage& usage, const DatacenterProfile& profile,
                      const EmissionFactorTable& factors, EmbodiedScope scope) {
  for (auto comp : kComponents) {
    const Capacity cap = capacity_of(comp);
    const double energy = it_energy(usage, cap, factors);
    grid.at(step, comp, Stage::Operational) +=
        cap == Capacity::NetworkGb ? operational_impact(0.0, profile, factors, energy)
                                   : operational_impact(energy, profile, factors);

    ResourceUsage single;
    switch (cap) {
      case Capacity::VcpuHour: single.vcpu_hours = usage.vcpu_hours; break;
      case Capacity::VgpuHour: single.vgpu_hours = usage.vgpu_hours; break;
      case Capacity::StorageGbHour: single.storage_gb_hours = usage.storage_gb_hours; break;
      case Capacity::NetworkGb: single.network_gb = usage.network_gb; break;
    }
    grid.at(step, comp, Stage::Embodied) += embodied_impact(single, factors, scope);
  }
}

}  // namespace aifp
