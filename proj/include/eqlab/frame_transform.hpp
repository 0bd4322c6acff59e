#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "eqlab/errors.hpp"
#include "eqlab/fourier.hpp"
#include "eqlab/propagator.hpp"
#include "eqlab/state.hpp"
#include "eqlab/trajectory.hpp"

namespace eqlab {

// Conventions: x' = x + xi(t), t' = t, and the lab and frame states are related by
//   psi'(x', t) = exp(i f(x', t)) phi(x', t),
//   f = (m / hbar) (-xi_dot x' + 1/2 * integral_0^t xi_dot^2 dt),
// which leaves phi obeying the Schroedinger equation with V = -m xi_ddot x'.

/// g(t) = 1/2 * integral_0^t xi_dot^2 dt, the purely time-dependent part of f.
inline double phase_time_term(const Trajectory& traj, double t) {
  return 0.5 * traj.xi_dot_sq_integral(t);
}

inline double phase_function(double x_prime, double t, double mass, const Trajectory& traj) {
  return (mass / scaled::hbar) * (-traj.xi_dot(t) * x_prime + phase_time_term(traj, t));
}

/// Closed-form df/dx' = -(m / hbar) xi_dot(t).
inline double phase_gradient(double t, double mass, const Trajectory& traj) {
  return -(mass / scaled::hbar) * traj.xi_dot(t);
}

/// f(x', t) sampled on a grid at one instant.
class PhaseField {
 public:
  PhaseField(const SpatialGrid& grid, double t, double mass, const Trajectory& traj)
      : grid_(grid), time_(t), mass_(mass), values_(grid.size()) {
    for (std::size_t j = 0; j < grid.size(); ++j) values_[j] = phase_function(grid.x(j), t, mass, traj);
  }

  const SpatialGrid& grid() const noexcept { return grid_; }
  double time() const noexcept { return time_; }
  double mass() const noexcept { return mass_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// df/dx' on the grid. The field is not periodic, so this uses second-order
  /// central differences inside and second-order one-sided stencils at the two
  /// ends, both exact for fields linear in x'.
  std::vector<double> gradient() const {
    const std::size_t n = values_.size();
    const double h = grid_.dx();
    std::vector<double> d(n);
    for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (values_[j + 1] - values_[j - 1]) / (2.0 * h);
    d[0] = (-3.0 * values_[0] + 4.0 * values_[1] - values_[2]) / (2.0 * h);
    d[n - 1] = (3.0 * values_[n - 1] - 4.0 * values_[n - 2] + values_[n - 3]) / (2.0 * h);
    return d;
  }

 private:
  SpatialGrid grid_;
  double time_;
  double mass_;
  std::vector<double> values_;
};

/// phi(x', t) = exp(-i f(x', t)) psi_lab(x' - xi(t), t). The translation is
/// done spectrally.
inline Wavefunction to_accelerated_frame(const Wavefunction& psi_lab, const Trajectory& traj) {
  const auto& grid = psi_lab.grid();
  const double t = psi_lab.time();
  std::vector<Complex> a(psi_lab.amplitudes().begin(), psi_lab.amplitudes().end());
  spectral_translate(a, grid, traj.xi(t));
  if (edge_amplitude(a) >= kEdgeTolerance) {
    throw BoundaryError("frame-transform", "translated state touches the domain edges");
  }
  for (std::size_t j = 0; j < grid.size(); ++j) {
    a[j] *= std::polar(1.0, -phase_function(grid.x(j), t, psi_lab.mass(), traj));
  }
  return Wavefunction(grid, std::move(a), psi_lab.mass(), t);
}

/// Inverse of to_accelerated_frame: psi_lab(x, t) = exp(i f(x + xi, t)) phi(x + xi, t).
inline Wavefunction from_accelerated_frame(const Wavefunction& phi, const Trajectory& traj) {
  const auto& grid = phi.grid();
  const double t = phi.time();
  std::vector<Complex> a(phi.amplitudes().begin(), phi.amplitudes().end());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    a[j] *= std::polar(1.0, phase_function(grid.x(j), t, phi.mass(), traj));
  }
  spectral_translate(a, grid, -traj.xi(t));
  if (edge_amplitude(a) >= kEdgeTolerance) {
    throw BoundaryError("frame-transform", "translated state touches the domain edges");
  }
  return Wavefunction(grid, std::move(a), phi.mass(), t);
}

struct EquivalenceResult {
  double fidelity;
  double max_pointwise_error;
  double peak_amplitude;
  /// Free lab evolution mapped into the frame at the final time.
  Wavefunction lab_then_transform;
  /// Mapped at t0, then evolved under the inertial potential -m xi_ddot x'.
  Wavefunction transform_then_frame;
};

/// Compares the two routes from psi0 (lab frame, at psi0.time()) to the
/// accelerated-frame state at psi0.time() + n_steps * dt.
inline EquivalenceResult equivalence_experiment(const Wavefunction& psi0, const Trajectory& traj,
                                                double dt, std::size_t n_steps) {
  auto lab = propagate(psi0, potential::Free{}, dt, n_steps);
  Wavefunction a = to_accelerated_frame(lab.final_state, traj);

  Wavefunction phi0 = to_accelerated_frame(psi0, traj);
  auto frame = propagate(phi0, potential::AcceleratedFrame{traj}, dt, n_steps);
  Wavefunction b = std::move(frame.final_state);

  const double fid = fidelity(a, b);
  const double err = max_pointwise_difference(a, b);
  const double peak = peak_amplitude(a);
  return EquivalenceResult{fid, err, peak, std::move(a), std::move(b)};
}

/// Speed above which the non-relativistic expansion behind proper_time_residue
/// is flagged (c = 1).
inline constexpr double kNonRelativisticSpeedLimit = 0.3;

struct ProperTimeResidue {
  double delta_tau;
  /// |xi_dot| > 0.3: the expansion to second order in xi_dot is questionable.
  bool beyond_nonrelativistic_range;
};

/// delta_tau = xi_dot dx' - 1/2 xi_dot^2 dt, natural units (c = 1).
inline ProperTimeResidue proper_time_residue(double xi_dot, double dx_prime, double dt) {
  return {xi_dot * dx_prime - 0.5 * xi_dot * xi_dot * dt,
          std::abs(xi_dot) > kNonRelativisticSpeedLimit};
}

struct FreeParticlePhase {
  double phase_pr_Et;
  double phase_minus_m_tau;
  double difference;
};

/// Along r = v t with hbar = c = 1: p r - E t with p = m gamma v, E = m gamma,
/// against -m tau with tau = t / gamma.
inline FreeParticlePhase free_particle_phase_check(double v, double t, double mass) {
  if (!(std::abs(v) < 1.0)) throw DomainError("frame-transform", "|v| must be below c = 1");
  const double gamma = 1.0 / std::sqrt(1.0 - v * v);
  const double p = mass * gamma * v;
  const double E = mass * gamma;
  const double r = v * t;
  const double lhs = p * r - E * t;
  const double rhs = -mass * t / gamma;
  return {lhs, rhs, lhs - rhs};
}

}  // namespace eqlab
