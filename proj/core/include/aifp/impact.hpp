#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace aifp {

/// The five life-cycle indicators tracked for every footprint.
enum class Criterion : std::uint8_t { FinalEnergy, Gwp, Water, PrimaryEnergy, Adp };

inline constexpr std::array<Criterion, 5> kCriteria{Criterion::FinalEnergy, Criterion::Gwp, Criterion::Water,
                                                    Criterion::PrimaryEnergy, Criterion::Adp};

std::string_view to_string(Criterion c);
std::string_view unit_of(Criterion c);

/**
 * @brief Multi-criteria impact carried as one value.
 *
 * Units: final_energy kWh, gwp kgCO2eq, water m3eq (AWARE), primary_energy MJ,
 * adp kgSbeq. Embodied per-unit rows leave final_energy at zero.
 */
struct ImpactVector {
  double final_energy{};
  double gwp{};
  double water{};
  double primary_energy{};
  double adp{};

  constexpr double operator[](Criterion c) const {
    switch (c) {
      case Criterion::FinalEnergy: return final_energy;
      case Criterion::Gwp: return gwp;
      case Criterion::Water: return water;
      case Criterion::PrimaryEnergy: return primary_energy;
      case Criterion::Adp: return adp;
    }
    return 0.0;
  }

  constexpr double& operator[](Criterion c) {
    switch (c) {
      case Criterion::FinalEnergy: return final_energy;
      case Criterion::Gwp: return gwp;
      case Criterion::Water: return water;
      case Criterion::PrimaryEnergy: return primary_energy;
      case Criterion::Adp: break;
    }
    return adp;
  }

  constexpr ImpactVector& operator+=(const ImpactVector& o) {
    final_energy += o.final_energy;
    gwp += o.gwp;
    water += o.water;
    primary_energy += o.primary_energy;
    adp += o.adp;
    return *this;
  }

  constexpr ImpactVector& operator*=(double s) {
    final_energy *= s;
    gwp *= s;
    water *= s;
    primary_energy *= s;
    adp *= s;
    return *this;
  }

  /// All components finite and non-negative.
  bool valid() const {
    for (auto c : kCriteria) {
      const double v = (*this)[c];
      if (!std::isfinite(v) || v < 0.0) return false;
    }
    return true;
  }

  constexpr bool operator==(const ImpactVector&) const = default;
};

constexpr ImpactVector operator+(ImpactVector a, const ImpactVector& b) { return a += b; }
constexpr ImpactVector operator*(ImpactVector v, double s) { return v *= s; }
constexpr ImpactVector operator*(double s, ImpactVector v) { return v *= s; }

}  // namespace aifp
