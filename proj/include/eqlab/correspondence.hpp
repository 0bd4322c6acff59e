#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "eqlab/bound_states.hpp"
#include "eqlab/errors.hpp"
#include "eqlab/grid.hpp"
#include "eqlab/tridiagonal.hpp"
#include "eqlab/turning_point_quadrature.hpp"
#include "eqlab/units.hpp"

namespace eqlab {

// Quantum numbers: the 1D harmonic well counts from n = 0 (ground state),
// radial 1/r problems count from n = 1. All checks here run with hbar = 1.

/// V(x) = 1/2 m omega0^2 x^2
struct HarmonicWell {
  double omega0;
};

using Well = std::variant<HarmonicWell, CentralCoupling>;

inline bool is_harmonic(const Well& w) { return std::holds_alternative<HarmonicWell>(w); }

inline CentralPotentialSpec central_spec(const Well& w, double mass) {
  return CentralPotentialSpec{std::get<CentralCoupling>(w), mass};
}

inline int ground_quantum_number(const Well& w) { return is_harmonic(w) ? 0 : 1; }

inline double well_potential(const Well& w, double mass, double x) {
  if (const auto* h = std::get_if<HarmonicWell>(&w)) return 0.5 * mass * h->omega0 * h->omega0 * x * x;
  return central_potential(central_spec(w, mass), x);
}

/// Exact spectrum: (n + 1/2) hbar omega0 for the well, the Bohr formula otherwise.
inline double level_energy(const Well& w, double mass, int n) {
  if (const auto* h = std::get_if<HarmonicWell>(&w)) return (n + 0.5) * scaled::hbar * h->omega0;
  return bohr_energy(central_spec(w, mass), scaled::hbar, n);
}

struct ClassicalOrbit {
  Well well;
  double mass;
  double energy;
  double period;
  double omega;
  double inner_turning_point;
  double outer_turning_point;
  /// Uniform mesh t_i = (i + 1/2) T / N; the orbit starts at the inner turning
  /// point at t = 0.
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> velocities;
};

namespace detail {

struct OrbitGeometry {
  double lo;
  double hi;
  /// E - V(r) on r = lo + (hi - lo) sin^2(theta), written in (sin, cos) so the
  /// zeros at turning points are exact.
  std::function<double(double, double)> kinetic;
};

inline OrbitGeometry orbit_geometry(const Well& w, double mass, double E) {
  if (!(mass > 0.0)) throw DomainError("correspondence", "mass must be positive");
  if (const auto* h = std::get_if<HarmonicWell>(&w)) {
    if (!(E > 0.0)) throw NoTurningPointError("correspondence", "harmonic orbit needs E > 0");
    const double A = std::sqrt(2.0 * E / (mass * h->omega0 * h->omega0));
    // x = -A cos(2 theta): E - V = E sin^2(2 theta)
    return {-A, A, [E](double s, double c) { return 4.0 * E * s * s * c * c; }};
  }
  if (!(E < 0.0)) throw NoTurningPointError("correspondence", "1/r orbit needs E < 0");
  const double k = coupling_strength(central_spec(w, mass));
  // r = r+ sin^2(theta): E + k/r = |E| cot^2(theta)
  return {0.0, k / -E, [E](double s, double c) { return -E * c * c / (s * s); }};
}

}  // namespace detail

/// Builds t(r) = integral dr / v between the turning points and inverts it on a
/// uniform time mesh covering one period.
inline ClassicalOrbit classical_orbit(const Well& w, double mass, double E,
                                      std::size_t n_samples = 8192) {
  if (n_samples < 16 || n_samples % 2 != 0) {
    throw UndersamplingError("correspondence", "orbit needs an even sample count of at least 16");
  }
  const auto geo = detail::orbit_geometry(w, mass, E);
  const double span = geo.hi - geo.lo;
  // dt/dtheta = (dr/dtheta) / v
  auto dt_dtheta = [&](double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    const double v = std::sqrt(2.0 * geo.kinetic(s, c) / mass);
    return 2.0 * span * s * c / v;
  };
  auto inverse_speed = [&](double, double s, double c) {
    return 1.0 / std::sqrt(2.0 * geo.kinetic(s, c) / mass);
  };
  const double half_period = turning_point_integral(inverse_speed, geo.lo, geo.hi);
  const double period = 2.0 * half_period;

  using Gauss = boost::math::quadrature::gauss<double, 20>;
  constexpr std::size_t kPanels = 256;
  const double dtheta = (std::numbers::pi / 2) / double(kPanels);
  std::vector<double> cumulative(kPanels + 1, 0.0);
  for (std::size_t i = 0; i < kPanels; ++i) {
    cumulative[i + 1] = cumulative[i] + Gauss::integrate(dt_dtheta, i * dtheta, (i + 1) * dtheta);
  }
  // Rescale the panel sums onto the adaptive half period so both agree exactly.
  const double scale = half_period / cumulative.back();
  for (double& c : cumulative) c *= scale;

  auto theta_at = [&](double t) {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), t);
    std::size_t i = std::min<std::size_t>(kPanels - 1, std::size_t(std::max<std::ptrdiff_t>(1, it - cumulative.begin()) - 1));
    const double a = i * dtheta, b = (i + 1) * dtheta;
    auto F = [&](double th) { return cumulative[i] + scale * Gauss::integrate(dt_dtheta, a, th) - t; };
    const double fa = cumulative[i] - t, fb = cumulative[i + 1] - t;
    if (fa >= 0.0) return a;
    if (fb <= 0.0) return b;
    std::uintmax_t iters = 100;
    auto r = boost::math::tools::toms748_solve(F, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (r.first + r.second);
  };

  ClassicalOrbit orbit{w, mass, E, period, 2.0 * std::numbers::pi / period, geo.lo, geo.hi, {}, {}, {}};
  orbit.times.resize(n_samples);
  orbit.positions.resize(n_samples);
  orbit.velocities.resize(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = (double(i) + 0.5) * period / double(n_samples);
    const bool outbound = t < half_period;
    const double theta = theta_at(outbound ? t : period - t);
    const double s = std::sin(theta), c = std::cos(theta);
    const double speed = std::sqrt(2.0 * geo.kinetic(s, c) / mass);
    orbit.times[i] = t;
    orbit.positions[i] = geo.lo + span * s * s;
    orbit.velocities[i] = outbound ? speed : -speed;
  }
  return orbit;
}

/// c_l for -l_max <= l <= l_max.
struct FourierSeries {
  int ell_max;
  std::vector<std::complex<double>> coefficients;

  std::complex<double> at(int ell) const {
    if (std::abs(ell) > ell_max) throw IndexError("correspondence", "harmonic index out of range");
    return coefficients[std::size_t(ell + ell_max)];
  }
};

/// c_l = (1/T) integral r(t) exp(-i l omega t) dt, by the periodic trapezoid
/// rule on the orbit's uniform samples.
inline FourierSeries fourier_coefficients(const ClassicalOrbit& orbit, int ell_max) {
  if (ell_max < 0) throw DomainError("correspondence", "ell_max must be non-negative");
  const std::size_t n = orbit.positions.size();
  if (n < 32 * std::size_t(std::max(ell_max, 1))) {
    throw UndersamplingError("correspondence", "orbit needs at least 32 samples per harmonic");
  }
  FourierSeries out{ell_max, std::vector<std::complex<double>>(std::size_t(2 * ell_max + 1))};
  for (int ell = -ell_max; ell <= ell_max; ++ell) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += orbit.positions[i] * std::polar(1.0, -ell * orbit.omega * orbit.times[i]);
    }
    out.coefficients[std::size_t(ell + ell_max)] = s / double(n);
  }
  return out;
}

/// Lowest eigenstates of a discretized well, normalized on the grid
/// (sum psi^2 * weight = 1) and signed positive at their first significant
/// sample.
struct BoundStateBasis {
  Well well;
  double mass;
  std::vector<double> positions;
  double weight;
  int first_quantum_number;
  std::vector<double> energies;
  std::vector<std::vector<double>> states;

  int n_max() const { return first_quantum_number + int(states.size()) - 1; }
  bool contains(int n) const { return n >= first_quantum_number && n <= n_max(); }
  std::size_t index(int n) const {
    if (!contains(n)) throw IndexError("correspondence", "quantum number " + std::to_string(n) + " not in basis");
    return std::size_t(n - first_quantum_number);
  }
  double energy(int n) const { return energies[index(n)]; }
  const std::vector<double>& state(int n) const { return states[index(n)]; }
};

/// Relative change of the top eigenvalue tolerated under 1.5x grid refinement.
inline constexpr double kBasisConvergenceTolerance = 1e-4;

namespace detail {

struct Dirichlet1D {
  double a;  // psi(a) = 0
  double b;  // psi(b) = 0
  std::size_t interior;
  double h() const { return (b - a) / double(interior + 1); }
  double x(std::size_t j) const { return a + double(j + 1) * h(); }
};

inline Eigenpairs solve_harmonic(const HarmonicWell& w, double mass, const Dirichlet1D& box,
                                 std::size_t count) {
  const double h = box.h();
  const double t = scaled::hbar * scaled::hbar / (2.0 * mass * h * h);
  std::vector<double> diag(box.interior), off(box.interior - 1, -t);
  for (std::size_t j = 0; j < box.interior; ++j) {
    diag[j] = 2.0 * t + well_potential(w, mass, box.x(j));
  }
  return lowest_eigenpairs(std::move(diag), std::move(off), count);
}

inline std::size_t refined(std::size_t interior) {
  return std::size_t(std::llround(1.5 * double(interior + 1))) - 1;
}

inline void require_converged(double coarse, double fine) {
  if (std::abs(fine - coarse) > kBasisConvergenceTolerance * std::abs(coarse)) {
    throw ConvergenceError("correspondence", "top eigenvalue not converged under grid refinement");
  }
}

}  // namespace detail

/// Harmonic well on the points of `grid`, with psi = 0 one spacing before the
/// first point and at x_max. Holds levels 0..n_max.
inline BoundStateBasis bound_basis(const HarmonicWell& w, double mass, const SpatialGrid& grid, int n_max) {
  if (!(mass > 0.0) || !(w.omega0 > 0.0)) throw DomainError("correspondence", "mass and omega0 must be positive");
  if (n_max < 0) throw DomainError("correspondence", "n_max must be non-negative");
  const auto count = std::size_t(n_max + 1);
  const detail::Dirichlet1D box{grid.x_min() - grid.dx(), grid.x_max(), grid.size()};
  auto ep = detail::solve_harmonic(w, mass, box, count);
  const detail::Dirichlet1D fine{box.a, box.b, detail::refined(box.interior)};
  detail::require_converged(ep.values.back(), detail::solve_harmonic(w, mass, fine, count).values.back());
  for (auto& v : ep.vectors) detail::fix_sign_and_scale(v, grid.dx());
  return BoundStateBasis{w, mass, grid.positions(), grid.dx(), 0, std::move(ep.values), std::move(ep.vectors)};
}

/// Radial l = 0 states u_n(r) of a 1/r well, levels 1..n_max.
inline BoundStateBasis bound_basis(const CentralCoupling& c, double mass, const RadialGrid& grid, int n_max) {
  if (n_max < 1) throw DomainError("correspondence", "n_max must be at least 1");
  const CentralPotentialSpec spec{c, mass};
  const auto count = std::size_t(n_max);
  auto base = solve_radial(spec, scaled::hbar, grid, count);
  const RadialGrid fine{grid.r_max, detail::refined(grid.n_grid)};
  detail::require_converged(base.energies.back(), solve_radial(spec, scaled::hbar, fine, count).energies.back());
  std::vector<double> r(grid.n_grid);
  for (std::size_t j = 0; j < grid.n_grid; ++j) r[j] = grid.r(j);
  return BoundStateBasis{c, mass, std::move(r), grid.spacing(), 1, std::move(base.energies), std::move(base.states)};
}

/// <psi_{n+ell}| r |psi_n> as a grid inner product.
inline double matrix_element(const BoundStateBasis& basis, int n, int ell) {
  const auto& a = basis.state(n + ell);
  const auto& b = basis.state(n);
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * basis.positions[j] * b[j];
  return s * basis.weight;
}

/// Grids sized for levels up to n_top of mass `mass`; `resolution` scales the
/// point density.
inline SpatialGrid default_harmonic_grid(const HarmonicWell& w, double mass, int n_top, double resolution = 1.0) {
  const double length_unit = std::sqrt(scaled::hbar / (mass * w.omega0));
  const double amplitude = std::sqrt(2.0 * n_top + 1.0) * length_unit;
  const double half = 1.3 * amplitude + 10.0 * length_unit;
  const double h = 2.5e-3 * length_unit / resolution;
  const auto n = std::bit_ceil(std::size_t(std::ceil(2.0 * half / h)));
  return SpatialGrid(-half, half, std::max<std::size_t>(n, 1024));
}

inline RadialGrid default_radial_grid(const CentralCoupling& c, double mass, int n_top, double resolution = 1.0) {
  const CentralPotentialSpec spec{c, mass};
  const double a0 = bohr_radius(spec, scaled::hbar, 1);
  const double r_max = 3.0 * bohr_radius(spec, scaled::hbar, n_top);  // 1.5x the outer turning point
  const double h = 0.2 * a0 / resolution;
  return RadialGrid{r_max, std::max<std::size_t>(2000, std::size_t(std::ceil(r_max / h)))};
}

inline BoundStateBasis default_basis(const Well& w, double mass, int n_top, double resolution = 1.0) {
  if (const auto* h = std::get_if<HarmonicWell>(&w)) {
    return bound_basis(*h, mass, default_harmonic_grid(*h, mass, n_top, resolution), n_top);
  }
  const auto& c = std::get<CentralCoupling>(w);
  return bound_basis(c, mass, default_radial_grid(c, mass, n_top, resolution), n_top);
}

/// Energy at which the classical orbit is compared with transitions n -> n + ell:
/// the mean of the two level energies (the orbit at E_n itself for ell = 0).
inline double transition_energy(const Well& w, double mass, int n, int ell) {
  return 0.5 * (level_energy(w, mass, n) + level_energy(w, mass, n + ell));
}

/// Index bookkeeping for the mass-scaled comparison.
enum class IndexScaling {
  /// <psi_{Kn+K ell}| r |psi_{Kn}> for mass K m against c_ell of the mass-m
  /// orbit through levels n and n + ell.
  Scaled,
  /// <psi_{Kn+ell}| r |psi_{Kn}> for mass K m against c_ell of the mass-K m
  /// orbit through levels Kn and Kn + ell.
  Unscaled,
};

struct CorrespondenceOptions {
  int K = 1;
  IndexScaling scaling = IndexScaling::Scaled;
  double resolution = 1.0;
  std::size_t orbit_samples = 8192;
};

struct CorrespondenceRow {
  int ell;
  int bra;  // quantum number of the bra state
  int ket;
  double matrix_element;
  double classical_coefficient;  // real part of c_ell
  double abs_difference;         // | |element| - |c_ell| |
  double reference_scale;        // |c_ell|, or the orbit half-width when c_ell vanishes
  double relative_difference;    // abs_difference / reference_scale
};

struct CorrespondenceTable {
  double mass;
  int K;
  int n;
  std::vector<CorrespondenceRow> rows;
};

/// Compares matrix elements of r with classical Fourier coefficients for
/// ell = 0..ell_max. Eigenvector signs are a convention, so magnitudes are
/// compared; both signed values are reported.
inline CorrespondenceTable correspondence_check(const Well& w, double mass, int n, int ell_max,
                                                const CorrespondenceOptions& opt = {}) {
  if (opt.K < 1) throw DomainError("correspondence", "K must be at least 1");
  if (ell_max < 0) throw DomainError("correspondence", "ell_max must be non-negative");
  if (n < ground_quantum_number(w)) throw IndexError("correspondence", "n below the ground state");
  const int K = opt.K;
  const double big_mass = K * mass;
  const int ket = K * n;
  const int step = opt.scaling == IndexScaling::Scaled ? K : 1;
  const int top = ket + step * ell_max;
  const auto basis = default_basis(w, big_mass, top, opt.resolution);

  CorrespondenceTable table{mass, K, n, {}};
  for (int ell = 0; ell <= ell_max; ++ell) {
    const double E = opt.scaling == IndexScaling::Scaled ? transition_energy(w, mass, n, ell)
                                                         : transition_energy(w, big_mass, ket, ell);
    const double orbit_mass = opt.scaling == IndexScaling::Scaled ? mass : big_mass;
    const auto orbit = classical_orbit(w, orbit_mass, E, opt.orbit_samples);
    const double c = fourier_coefficients(orbit, std::max(ell, 1)).at(ell).real();
    const int bra = ket + step * ell;
    const double me = matrix_element(basis, ket, bra - ket);
    const double diff = std::abs(std::abs(me) - std::abs(c));
    // Symmetric wells have c_ell = 0 for some ell; measure against the orbit size there.
    const double half_width = 0.5 * (orbit.outer_turning_point - orbit.inner_turning_point);
    const double scale = std::abs(c) > 1e-8 * half_width ? std::abs(c) : half_width;
    table.rows.push_back({ell, bra, ket, me, c, diff, scale, diff / scale});
  }
  return table;
}

struct LevelSpacing {
  double delta_E;
  double ell_hbar_omega;
  double relative_gap;
};

/// E_{n+ell} - E_n against ell hbar omega of the classical orbit through the
/// two levels (see transition_energy).
inline LevelSpacing level_spacing_check(const Well& w, double mass, int n, int ell) {
  if (ell < 1) throw DomainError("correspondence", "ell must be at least 1");
  if (n < ground_quantum_number(w)) throw IndexError("correspondence", "n below the ground state");
  const double dE = level_energy(w, mass, n + ell) - level_energy(w, mass, n);
  const auto orbit = classical_orbit(w, mass, transition_energy(w, mass, n, ell), 64);
  const double quantum = ell * scaled::hbar * orbit.omega;
  return {dE, quantum, std::abs(dE - quantum) / std::abs(dE)};
}

enum class EnergySource { Analytic, Numeric };

struct ScalingCheck {
  double v_action_1;
  double v_action_2;
  double p_action_ratio;
  double energy_1;
  double energy_2;
};

/// Velocity actions of (m, E_n(m)) and (K m, E_{Kn}(K m)).
inline ScalingCheck scaling_check(const CentralCoupling& c, double mass, int K, int n,
                                  EnergySource source = EnergySource::Analytic) {
  if (K < 2) throw DomainError("correspondence", "K must be an integer of at least 2");
  if (n < 1) throw DomainError("correspondence", "n must be at least 1");
  const CentralPotentialSpec s1{c, mass};
  const CentralPotentialSpec s2{c, K * mass};
  auto energy = [&](const CentralPotentialSpec& s, int level) {
    if (source == EnergySource::Analytic) return bohr_energy(s, scaled::hbar, level);
    const double a0 = bohr_radius(s, scaled::hbar, 1);
    const double r_max = 6.0 * bohr_radius(s, scaled::hbar, level);
    const auto n_grid = std::max<std::size_t>(2000, std::size_t(std::ceil(20.0 * r_max / a0)));
    const auto spec = radial_eigensolver(s, scaled::hbar, r_max, n_grid, level);
    return *spec.levels.back().numeric_energy;
  };
  const double E1 = energy(s1, n);
  const double E2 = energy(s2, K * n);
  const auto a1 = action_integrals(s1, scaled::hbar, E1);
  const auto a2 = action_integrals(s2, scaled::hbar, E2);
  return {a1.v_action, a2.v_action, a2.p_action / a1.p_action, E1, E2};
}

}  // namespace eqlab
