#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/bound_states.hpp"
#include "eqlab/errors.hpp"
#include "eqlab/units.hpp"

namespace eqlab {

inline double planck_length(const ConstantsSet& k) { return std::sqrt(k.G * k.hbar / (k.c * k.c * k.c)); }

/// G m^2 / hbar: the speed scale built from gravity and quantum theory alone.
inline double fundamental_speed_estimate(const ConstantsSet& k, double mass) {
  return k.G * mass * mass / k.hbar;
}

inline double classical_electron_radius(const ConstantsSet& k) {
  return k.e_sq / (k.m_electron * k.c * k.c);
}

inline double compton_wavelength(const ConstantsSet& k, double mass) { return k.h / (mass * k.c); }

inline double reduced_compton_wavelength(const ConstantsSet& k, double mass) { return k.hbar / (mass * k.c); }

/// Ground-state gravitational Bohr radius of two neutrons. Without the reduced
/// mass one neutron orbits a fixed partner; with it the radius doubles.
inline double neutron_pair_bohr_radius(const ConstantsSet& k, bool reduced_mass) {
  const CentralPotentialSpec spec{Gravitational{k.G, k.m_neutron}, k.m_neutron, reduced_mass};
  return analytic_spectrum(spec, k.hbar, 1).levels.front().analytic_radius;
}

/// Mass implied by a minimum-uncertainty packet: hbar / (2 dx dv).
inline double mass_from_velocity_spread(double delta_x, double delta_v, double hbar) {
  if (!(delta_x > 0.0) || !(delta_v > 0.0)) {
    throw DomainError("estimates", "spreads must be positive");
  }
  return hbar / (2.0 * delta_x * delta_v);
}

/// n such that the velocity action equals n c lambda0. A what-if number for a
/// hypothesized fundamental length, never rounded.
inline double alternative_quantization_number(double v_action, double c, double lambda0) {
  if (!(lambda0 > 0.0)) throw DomainError("estimates", "lambda0 must be positive");
  return v_action / (c * lambda0);
}

struct EstimateInput {
  std::string name;
  double value;
};

struct EstimateReport {
  std::string name;
  std::string formula;
  std::vector<EstimateInput> inputs;
  double value;
  std::string units;
  std::optional<double> quoted;
  std::optional<double> log10_discrepancy;
  std::string note;
};

inline EstimateReport make_report(std::string name, std::string formula, std::vector<EstimateInput> inputs,
                                  double value, std::string units, std::optional<double> quoted = {},
                                  std::string note = {}) {
  if (!(value > 0.0)) throw DomainError("estimates", "estimate '" + name + "' is not positive");
  std::optional<double> gap;
  if (quoted) gap = std::abs(std::log10(value) - std::log10(*quoted));
  return {std::move(name), std::move(formula), std::move(inputs), value, std::move(units),
          quoted, gap, std::move(note)};
}

/// Every order-of-magnitude figure of the gravity/quantum discussion,
/// evaluated in CGS and set against the commonly quoted round numbers.
inline std::vector<EstimateReport> estimate_reports(const ConstantsSet& k = cgs_constants()) {
  validate(k);
  const bool cgs = k.unit_system == UnitSystem::CGS;
  const std::string len = cgs ? "cm" : (k.unit_system == UnitSystem::SI ? "m" : "1");
  const std::string spd = cgs ? "cm/s" : (k.unit_system == UnitSystem::SI ? "m/s" : "1");
  auto q = [&](double v) { return cgs ? std::optional<double>(v) : std::nullopt; };

  std::vector<EstimateReport> out;
  out.push_back(make_report("planck_length", "sqrt(G*hbar/c^3)",
                            {{"G", k.G}, {"hbar", k.hbar}, {"c", k.c}}, planck_length(k), len, q(1e-34)));
  const double cstar = fundamental_speed_estimate(k, k.m_neutron);
  out.push_back(make_report("fundamental_speed", "G*m_n^2/hbar",
                            {{"G", k.G}, {"m_n", k.m_neutron}, {"hbar", k.hbar}}, cstar, spd, q(1e-30)));
  out.push_back(make_report("light_to_fundamental_speed_ratio", "c/(G*m_n^2/hbar)",
                            {{"c", k.c}, {"c_star", cstar}}, k.c / cstar, "1",
                            k.unit_system == UnitSystem::Natural ? std::nullopt : std::optional<double>(1e40),
                            "dimensionless; the quoted scale is 1e40 in any dimensional unit system"));
  out.push_back(make_report("classical_electron_radius", "e^2/(m_e*c^2)",
                            {{"e^2", k.e_sq}, {"m_e", k.m_electron}, {"c", k.c}}, classical_electron_radius(k), len,
                            q(1e-13)));
  out.push_back(make_report("electron_compton_wavelength", "h/(m_e*c)",
                            {{"h", k.h}, {"m_e", k.m_electron}, {"c", k.c}}, compton_wavelength(k, k.m_electron), len,
                            q(1e-11), "the quoted 1e-11 cm matches hbar/(m_e c)"));
  out.push_back(make_report("electron_reduced_compton_wavelength", "hbar/(m_e*c)",
                            {{"hbar", k.hbar}, {"m_e", k.m_electron}, {"c", k.c}},
                            reduced_compton_wavelength(k, k.m_electron), len, q(1e-11)));
  out.push_back(make_report("neutron_pair_bohr_radius", "hbar^2/(G*m_n^3)",
                            {{"hbar", k.hbar}, {"G", k.G}, {"m_n", k.m_neutron}}, neutron_pair_bohr_radius(k, false),
                            len, q(1e27)));
  out.push_back(make_report("neutron_pair_bohr_radius_reduced_mass", "2*hbar^2/(G*m_n^3)",
                            {{"hbar", k.hbar}, {"G", k.G}, {"m_n", k.m_neutron}}, neutron_pair_bohr_radius(k, true),
                            len, q(1e27)));

  // Ground state of the neutron pair: velocity action h/m_n, measured in units
  // of c times the Planck length.
  const double v_action = k.h / k.m_neutron;
  out.push_back(make_report("neutron_ground_state_planck_quantum_number", "(h/m_n)/(c*l_P)",
                            {{"h", k.h}, {"m_n", k.m_neutron}, {"c", k.c}, {"l_P", planck_length(k)}},
                            alternative_quantization_number(v_action, k.c, planck_length(k)), "1", {},
                            "hypothetical: lambda0 set to the Planck length"));
  return out;
}

}  // namespace eqlab
