#pragma once

#include <cmath>
#include <numbers>
#include <string_view>

#include "eqlab/errors.hpp"

namespace eqlab {

enum class UnitSystem { SI, CGS, Natural };

inline constexpr std::string_view to_string(UnitSystem u) {
  switch (u) {
    case UnitSystem::SI: return "si";
    case UnitSystem::CGS: return "cgs";
    case UnitSystem::Natural: return "natural";
  }
  return "unknown";
}

/// Physical constants in one declared unit system.
///
/// `e_sq` is always the Gaussian-convention squared charge, i.e. the
/// Coulomb potential energy of two elementary charges is e_sq / r. In SI this
/// means e^2 / (4 pi eps0) in J m.
struct ConstantsSet {
  double G;
  double hbar;
  double h;
  double c;
  double e_sq;
  double m_electron;
  double m_neutron;
  UnitSystem unit_system;
};

namespace codata2018 {
inline constexpr double planck = 6.62607015e-34;           // J s (exact)
inline constexpr double speed_of_light = 299792458.0;      // m/s (exact)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double gravitational = 6.67430e-11;       // m^3 kg^-1 s^-2
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double neutron_mass = 1.67492749804e-27;  // kg
}  // namespace codata2018

inline void validate(const ConstantsSet& k) {
  const double values[] = {k.G, k.hbar, k.h, k.c, k.e_sq, k.m_electron, k.m_neutron};
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("units-and-state", "physical constants must be finite and positive");
    }
  }
  if (std::abs(k.h - 2.0 * std::numbers::pi * k.hbar) > 1e-12 * k.h) {
    throw DomainError("units-and-state", "h and hbar are inconsistent");
  }
  if (k.unit_system == UnitSystem::Natural && (k.hbar != 1.0 || k.c != 1.0)) {
    throw DomainError("units-and-state", "natural units require hbar = c = 1");
  }
}

inline ConstantsSet si_constants() {
  using namespace codata2018;
  const double e = elementary_charge;
  return ConstantsSet{
      .G = gravitational,
      .hbar = planck / (2.0 * std::numbers::pi),
      .h = planck,
      .c = speed_of_light,
      .e_sq = e * e / (4.0 * std::numbers::pi * vacuum_permittivity),
      .m_electron = electron_mass,
      .m_neutron = neutron_mass,
      .unit_system = UnitSystem::SI,
  };
}

/// Gaussian CGS (cm, g, s, statC), converted from the SI set.
inline ConstantsSet cgs_constants() {
  const ConstantsSet si = si_constants();
  return ConstantsSet{
      .G = si.G * 1e3,
      .hbar = si.hbar * 1e7,
      .h = si.h * 1e7,
      .c = si.c * 1e2,
      .e_sq = si.e_sq * 1e9,  // J m -> erg cm
      .m_electron = si.m_electron * 1e3,
      .m_neutron = si.m_neutron * 1e3,
      .unit_system = UnitSystem::CGS,
  };
}

/// Scaled units in which every base constant and both reference masses are 1.
inline ConstantsSet natural_constants() {
  return ConstantsSet{
      .G = 1.0,
      .hbar = 1.0,
      .h = 2.0 * std::numbers::pi,
      .c = 1.0,
      .e_sq = 1.0,
      .m_electron = 1.0,
      .m_neutron = 1.0,
      .unit_system = UnitSystem::Natural,
  };
}

inline ConstantsSet constants_for(UnitSystem u) {
  switch (u) {
    case UnitSystem::SI: return si_constants();
    case UnitSystem::CGS: return cgs_constants();
    case UnitSystem::Natural: return natural_constants();
  }
  throw DomainError("units-and-state", "unknown unit system");
}

/// Wave-packet dynamics, frame transforms and the correspondence checks run in
/// scaled units with hbar = 1; masses are measured in units of a reference mass.
namespace scaled {
inline constexpr double hbar = 1.0;
}

}  // namespace eqlab
