#include "aifp/factors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aifp/errors.hpp"

namespace aifp {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::FinalEnergy: return "final_energy";
    case Criterion::Gwp: return "gwp";
    case Criterion::Water: return "water";
    case Criterion::PrimaryEnergy: return "primary_energy";
    case Criterion::Adp: return "adp";
  }
  return "?";
}

std::string_view unit_of(Criterion c) {
  switch (c) {
    case Criterion::FinalEnergy: return "kWh";
    case Criterion::Gwp: return "kgCO2eq";
    case Criterion::Water: return "m3eq";
    case Criterion::PrimaryEnergy: return "MJ";
    case Criterion::Adp: return "kgSbeq";
  }
  return "?";
}

std::string_view to_string(Capacity c) {
  switch (c) {
    case Capacity::VcpuHour: return "vcpu_hour";
    case Capacity::VgpuHour: return "vgpu_hour";
    case Capacity::StorageGbHour: return "storage_gb_hour";
    case Capacity::NetworkGb: return "network_gb";
  }
  return "?";
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::US: return "US";
    case Region::CN: return "CN";
    case Region::EU27: return "EU27";
  }
  return "?";
}

Capacity parse_capacity(std::string_view key) {
  for (auto c : kCapacities) {
    if (to_string(c) == key) return c;
  }
  throw std::invalid_argument("unknown capacity '" + std::string(key) + "'");
}

Region parse_region(std::string_view key) {
  for (auto r : kRegions) {
    if (to_string(r) == key) return r;
  }
  throw std::invalid_argument("unknown region '" + std::string(key) + "'");
}

namespace {

void require_positive(double v, const std::string& field) {
  if (!std::isfinite(v) || !(v > 0.0)) throw ValidationError(field, "factor must be finite and > 0");
}

void require_positive(const EnergyIntensity& e, const std::string& field) {
  require_positive(e.gwp, field + ".gwp");
  require_positive(e.water, field + ".water");
  require_positive(e.primary_energy, field + ".primary_energy");
  require_positive(e.adp, field + ".adp");
}

}  // namespace

void EmissionFactorTable::validate() const {
  for (auto c : kCapacities) {
    const auto& row = at(c);
    const std::string base = "capacities." + std::string(to_string(c));
    require_positive(row.it_power, base + ".it_power");
    require_positive(row.embodied.gwp, base + ".embodied.gwp");
    require_positive(row.embodied.water, base + ".embodied.water");
    require_positive(row.embodied.primary_energy, base + ".embodied.primary_energy");
    require_positive(row.embodied.adp, base + ".embodied.adp");
  }
  if (!(at(Capacity::VgpuHour).it_power > at(Capacity::VcpuHour).it_power)) {
    throw ValidationError("capacities.vgpu_hour.it_power", "vGPU power must exceed vCPU power");
  }
  for (auto r : kRegions) {
    auto it = grid.find(r);
    if (it == grid.end()) throw ValidationError("grid." + std::string(to_string(r)), "missing grid region");
    require_positive(it->second, "grid." + std::string(to_string(r)));
  }
  if (grid.size() != kRegions.size()) throw ValidationError("grid", "unexpected extra region");
  require_positive(water_supply, "water_supply.EU27");
}

EmissionFactorTable EmissionFactorTable::with_grid_scaled(double factor) const {
  EmissionFactorTable out = *this;
  for (auto& [region, row] : out.grid) row *= factor;
  return out;
}

void DatacenterProfile::validate() const {
  if (!std::isfinite(pue) || pue < 1.0) throw ValidationError("pue", "PUE must be >= 1");
  if (!std::isfinite(wue) || wue < 0.0) throw ValidationError("wue", "WUE must be >= 0");
  double sum = 0.0;
  for (const auto& [region, w] : region_weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ValidationError("region_weights." + std::string(to_string(region)), "weight must be >= 0");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("region_weights", "weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

EnergyIntensity blended_grid(const DatacenterProfile& profile, const EmissionFactorTable& factors) {
  profile.validate();
  EnergyIntensity out;
  for (const auto& [region, w] : profile.region_weights) {
    auto it = factors.grid.find(region);
    if (it == factors.grid.end()) {
      throw ValidationError("grid." + std::string(to_string(region)), "no grid factors for weighted region");
    }
    out.gwp += w * it->second.gwp;
    out.water += w * it->second.water;
    out.primary_energy += w * it->second.primary_energy;
    out.adp += w * it->second.adp;
  }
  return out;
}

}  // namespace aifp
