#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "aifp/impact.hpp"

namespace aifp {

/// IT capacities that carry power and embodied factors.
enum class Capacity : std::uint8_t { VcpuHour, VgpuHour, StorageGbHour, NetworkGb };

inline constexpr std::array<Capacity, 4> kCapacities{Capacity::VcpuHour, Capacity::VgpuHour, Capacity::StorageGbHour,
                                                     Capacity::NetworkGb};

enum class Region : std::uint8_t { US, CN, EU27 };

inline constexpr std::array<Region, 3> kRegions{Region::US, Region::CN, Region::EU27};

std::string_view to_string(Capacity c);
std::string_view to_string(Region r);
/// Throws std::invalid_argument for unknown keys.
Capacity parse_capacity(std::string_view key);
Region parse_region(std::string_view key);

/// Per-kWh (grid) or per-litre (water supply) characterisation factors.
struct EnergyIntensity {
  double gwp{};
  double water{};
  double primary_energy{};
  double adp{};

  constexpr EnergyIntensity& operator*=(double s) {
    gwp *= s;
    water *= s;
    primary_energy *= s;
    adp *= s;
    return *this;
  }
  constexpr bool operator==(const EnergyIntensity&) const = default;
};

/**
 * @brief One capacity row.
 *
 * `it_power` is W for vCPU/vGPU hours, W/GB for stored gigabyte-hours and
 * kWh/GB for network transfer. `embodied` is amortised per unit of capacity
 * (hour, GB-hour or GB); its final_energy stays zero.
 */
struct CapacityFactor {
  double it_power{};
  ImpactVector embodied{};
};

struct EmissionFactorTable {
  std::string version;
  std::array<CapacityFactor, 4> capacities{};
  std::map<Region, EnergyIntensity> grid;  // per kWh of final energy
  EnergyIntensity water_supply{};          // per litre of cooling water

  const CapacityFactor& at(Capacity c) const { return capacities[static_cast<std::size_t>(c)]; }
  CapacityFactor& at(Capacity c) { return capacities[static_cast<std::size_t>(c)]; }

  /// Throws ValidationError naming the offending row.
  void validate() const;

  /// Copy with every grid row multiplied by `factor` (water supply untouched).
  EmissionFactorTable with_grid_scaled(double factor) const;
};

/// Datacenter operating point and geographic blend of hosted capacity.
struct DatacenterProfile {
  double pue{1.15};
  double wue{0.18};  // L per IT kWh
  std::map<Region, double> region_weights;

  void validate() const;
};

/// Region-weighted grid intensity. Throws if weights do not sum to 1.
EnergyIntensity blended_grid(const DatacenterProfile& profile, const EmissionFactorTable& factors);

}  // namespace aifp
