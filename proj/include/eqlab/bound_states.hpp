#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "eqlab/errors.hpp"
#include "eqlab/tridiagonal.hpp"
#include "eqlab/turning_point_quadrature.hpp"

namespace eqlab {

/// V(r) = -e_sq / r
struct Coulomb {
  double e_sq;
};

/// V(r) = -G M m / r for an orbiting mass m
struct Gravitational {
  double G;
  double M;
};

using CentralCoupling = std::variant<Coulomb, Gravitational>;

/// Attractive 1/r potential acting on a particle of mass `mass`.
///
/// By default the source is infinitely heavy. With `reduced_mass` set, a
/// gravitational source of finite M contributes the two-body reduced mass
/// mM/(m+M) to the kinetic term; the coupling GMm is unchanged.
struct CentralPotentialSpec {
  CentralCoupling coupling;
  double mass;
  bool reduced_mass = false;
};

/// k in V(r) = -k / r.
inline double coupling_strength(const CentralPotentialSpec& s) {
  return std::visit(
      [&](const auto& c) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Coulomb>) return c.e_sq;
        else return c.G * c.M * s.mass;
      },
      s.coupling);
}

inline double dynamical_mass(const CentralPotentialSpec& s) {
  if (s.reduced_mass) {
    if (const auto* g = std::get_if<Gravitational>(&s.coupling)) return s.mass * g->M / (s.mass + g->M);
  }
  return s.mass;
}

inline void validate(const CentralPotentialSpec& s) {
  if (!(s.mass > 0.0)) throw DomainError("bound-states", "orbiting mass must be positive");
  const bool ok = std::visit(
      [](const auto& c) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Coulomb>) return c.e_sq > 0.0;
        else return c.G > 0.0 && c.M > 0.0;
      },
      s.coupling);
  if (!ok) throw DomainError("bound-states", "coupling constants must be positive");
}

inline double central_potential(const CentralPotentialSpec& s, double r) {
  return -coupling_strength(s) / r;
}

/// Bohr radius of level n, hbar^2 n^2 / (mu k).
inline double bohr_radius(const CentralPotentialSpec& s, double hbar, int n) {
  return hbar * hbar * n * n / (dynamical_mass(s) * coupling_strength(s));
}

/// -mu k^2 / (2 hbar^2 n^2); negative for every bound level.
inline double bohr_energy(const CentralPotentialSpec& s, double hbar, double n) {
  const double k = coupling_strength(s);
  return -dynamical_mass(s) * k * k / (2.0 * hbar * hbar * n * n);
}

struct SpectrumLevel {
  int n;
  double analytic_radius;
  double analytic_energy;
  std::optional<double> numeric_energy;
  std::optional<double> relative_error;
};

struct SpectrumResult {
  std::vector<SpectrumLevel> levels;
};

inline SpectrumResult analytic_spectrum(const CentralPotentialSpec& spec, double hbar, int n_max) {
  validate(spec);
  if (n_max < 1) throw DomainError("bound-states", "n_max must be at least 1");
  SpectrumResult out;
  for (int n = 1; n <= n_max; ++n) {
    out.levels.push_back({n, bohr_radius(spec, hbar, n), bohr_energy(spec, hbar, n), {}, {}});
  }
  return out;
}

/// Interior points r_j = j h, j = 1..n_grid, h = r_max / (n_grid + 1), with
/// u(0) = u(r_max) = 0.
struct RadialGrid {
  double r_max;
  std::size_t n_grid;

  double spacing() const noexcept { return r_max / double(n_grid + 1); }
  double r(std::size_t j) const noexcept { return double(j + 1) * spacing(); }
};

/// l = 0 radial eigenstates u_n(r), normalized so sum u^2 h = 1, with the sign
/// fixed so that u_n > 0 next to the origin.
struct RadialEigenstates {
  RadialGrid grid;
  std::vector<double> energies;
  std::vector<std::vector<double>> states;
};

namespace detail {

inline void fix_sign_and_scale(std::vector<double>& v, double weight) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  double first = 0.0;
  for (double x : v) {
    if (std::abs(x) > 1e-3 * peak) {
      first = x;
      break;
    }
  }
  const double s = (first < 0.0 ? -1.0 : 1.0) / std::sqrt(weight);
  for (double& x : v) x *= s;
}

}  // namespace detail

/// Three-point finite-difference solution of -(hbar^2 / 2 mu) u'' - k/r u = E u.
inline RadialEigenstates solve_radial(const CentralPotentialSpec& spec, double hbar,
                                      const RadialGrid& grid, std::size_t n_levels) {
  validate(spec);
  if (grid.n_grid < 3 || !(grid.r_max > 0.0)) throw DomainError("bound-states", "invalid radial grid");
  const double h = grid.spacing();
  const double t = hbar * hbar / (2.0 * dynamical_mass(spec) * h * h);
  std::vector<double> diag(grid.n_grid), off(grid.n_grid - 1, -t);
  for (std::size_t j = 0; j < grid.n_grid; ++j) diag[j] = 2.0 * t + central_potential(spec, grid.r(j));
  Eigenpairs ep = lowest_eigenpairs(std::move(diag), std::move(off), n_levels);
  for (auto& v : ep.vectors) detail::fix_sign_and_scale(v, h);
  return RadialEigenstates{grid, std::move(ep.values), std::move(ep.vectors)};
}

/// Relative shift of the highest requested level tolerated when the box is
/// enlarged by 1.5 at fixed spacing.
inline constexpr double kBoxConvergenceTolerance = 1e-4;

/// Lowest n_levels s-state energies by finite differences, paired with the
/// Bohr formula. Fails with BoxTooSmallError when the top level still moves
/// under box enlargement.
inline SpectrumResult radial_eigensolver(const CentralPotentialSpec& spec, double hbar, double r_max,
                                         std::size_t n_grid, int n_levels) {
  validate(spec);
  if (n_levels < 1) throw DomainError("bound-states", "n_levels must be at least 1");
  if (n_grid < 2000) throw DomainError("bound-states", "radial grid needs at least 2000 points");
  if (r_max < 3.0 * bohr_radius(spec, hbar, n_levels)) {
    throw BoxTooSmallError("bound-states", "r_max is below 3 Bohr radii of the highest level");
  }
  const auto count = static_cast<std::size_t>(n_levels);
  const RadialGrid grid{r_max, n_grid};
  const auto base = solve_radial(spec, hbar, grid, count);

  const auto n_big = static_cast<std::size_t>(std::llround(1.5 * double(n_grid + 1))) - 1;
  const RadialGrid big{grid.spacing() * double(n_big + 1), n_big};
  const auto wide = solve_radial(spec, hbar, big, count);
  const double top = base.energies.back();
  if (std::abs(wide.energies.back() - top) > kBoxConvergenceTolerance * std::abs(top)) {
    throw BoxTooSmallError("bound-states", "level " + std::to_string(n_levels) +
                                               " moves when the box is enlarged; increase r_max");
  }

  SpectrumResult out = analytic_spectrum(spec, hbar, n_levels);
  for (std::size_t i = 0; i < count; ++i) {
    auto& lvl = out.levels[i];
    lvl.numeric_energy = base.energies[i];
    lvl.relative_error = std::abs(base.energies[i] - lvl.analytic_energy) / std::abs(lvl.analytic_energy);
  }
  return out;
}

struct ActionIntegrals {
  /// Closed-loop radial action 2 * integral p dr between the turning points.
  double p_action;
  /// p_action / mu (the orbiting mass unless the reduced-mass option is set)
  double v_action;
  /// p_action / (2 pi hbar)
  double quantum_number;
};

/// Old-quantum-theory radial action of s-wave motion at energy E < 0. The
/// radial orbit runs from r = 0 out to r+ = k / |E| and back.
inline ActionIntegrals action_integrals(const CentralPotentialSpec& spec, double hbar, double E) {
  validate(spec);
  if (!(E < 0.0)) throw NoTurningPointError("bound-states", "energy must be negative for a bound orbit");
  const double k = coupling_strength(spec);
  const double mu = dynamical_mass(spec);
  const double r_outer = k / -E;
  // E + k/r on r = r_outer sin^2(theta) is |E| cot^2(theta); use that form to
  // avoid cancellation near the outer turning point.
  auto momentum = [&](double, double s, double c) { return std::sqrt(2.0 * mu * -E) * c / s; };
  const double p_action = 2.0 * turning_point_integral(momentum, 0.0, r_outer);
  return {p_action, p_action / mu, p_action / (2.0 * std::numbers::pi * hbar)};
}

}  // namespace eqlab
