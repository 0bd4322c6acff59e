#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "eqlab/errors.hpp"
#include "eqlab/fourier.hpp"
#include "eqlab/potential.hpp"
#include "eqlab/state.hpp"

namespace eqlab {

/// Edge amplitude tolerated at traced samples during propagation.
inline constexpr double kPropagationEdgeTolerance = 1e-9;

struct TraceSample {
  double time;
  Observables observables;
  double edge_amplitude;
};

struct PropagationResult {
  Wavefunction final_state;
  std::vector<TraceSample> trace;
  std::size_t steps_taken;
  double norm_drift;
};

namespace detail {

/// Strang splitting: half potential kick, exact kinetic step in Fourier
/// space, half potential kick. Time-dependent potentials are sampled once
/// per step at its midpoint.
class SplitStepper {
 public:
  SplitStepper(const SpatialGrid& grid, double mass, const Potential& V, double dt)
      : grid_(grid), mass_(mass), V_(V), dt_(dt), fft_(grid.size()),
        kinetic_(grid.size()), kick_(grid.size()), free_(is_free(V)),
        static_(is_time_independent(V)) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("propagator", "dt must be positive");
    const double hbar = scaled::hbar;
    const double kmax = grid.k_max();
    const double worst_phase = hbar * kmax * kmax * dt / (2.0 * mass);
    if (!(worst_phase < std::numbers::pi)) {
      throw StabilityError("propagator", "kinetic phase per step " + std::to_string(worst_phase) +
                                             " exceeds pi; reduce dt or refine less");
    }
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double k = grid.wavenumber(j);
      kinetic_[j] = std::polar(1.0, -hbar * k * k * dt / (2.0 * mass));
    }
    if (static_ && !free_) fill_kick(0.0);
  }

  void step(std::vector<Complex>& psi, double t) {
    if (!free_ && !static_) fill_kick(t + 0.5 * dt_);
    if (!free_) apply_kick(psi);
    fft_.forward(psi);
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= kinetic_[j];
    fft_.inverse(psi);
    if (!free_) apply_kick(psi);
  }

 private:
  void fill_kick(double t) {
    const double half = 0.5 * dt_ / scaled::hbar;
    for (std::size_t j = 0; j < grid_.size(); ++j) {
      kick_[j] = std::polar(1.0, -potential_value(V_, grid_.x(j), t, mass_) * half);
    }
  }
  void apply_kick(std::vector<Complex>& psi) const {
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] *= kick_[j];
  }

  SpatialGrid grid_;
  double mass_;
  const Potential& V_;
  double dt_;
  FourierTransform fft_;
  std::vector<Complex> kinetic_;
  std::vector<Complex> kick_;
  bool free_;
  bool static_;
};

inline void require_contained(const Wavefunction& psi) {
  if (psi.edge_amplitude() >= kEdgeTolerance) {
    throw BoundaryError("propagator", "initial state has amplitude at the domain edges");
  }
}

}  // namespace detail

/// Evolve psi for n_steps of size dt under V. When trace_every > 0 the
/// observables (with energy) are recorded at t0 and every trace_every steps,
/// plus the final step; each traced sample must keep the edge amplitude below
/// 1e-9.
inline PropagationResult propagate(const Wavefunction& psi, const Potential& V, double dt,
                                   std::size_t n_steps, std::size_t trace_every = 0) {
  detail::require_contained(psi);
  detail::SplitStepper stepper(psi.grid(), psi.mass(), V, dt);
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  std::vector<TraceSample> trace;
  const double t0 = psi.time();

  auto record = [&](std::size_t step) {
    const double t = t0 + double(step) * dt;
    const double edge = edge_amplitude(amps);
    if (edge > kPropagationEdgeTolerance) {
      throw BoundaryError("propagator", "state reached the domain edge at t = " + std::to_string(t));
    }
    if (trace_every == 0) return;
    Wavefunction snapshot = Wavefunction::normalized(psi.grid(), amps, psi.mass(), t);
    trace.push_back({t, observables(snapshot, V), edge});
  };

  if (trace_every > 0) record(0);
  for (std::size_t s = 0; s < n_steps; ++s) {
    stepper.step(amps, t0 + double(s) * dt);
    if (trace_every > 0 && ((s + 1) % trace_every == 0 || s + 1 == n_steps)) record(s + 1);
  }
  if (n_steps > 0 && trace_every == 0) record(n_steps);

  const double drift = std::abs(discrete_norm(amps, psi.grid().dx()) - 1.0);
  if (drift > kNormTolerance) {
    throw DomainError("propagator", "norm drift exceeded tolerance");
  }
  Wavefunction final_state(psi.grid(), std::move(amps), psi.mass(), t0 + double(n_steps) * dt);
  return PropagationResult{std::move(final_state), std::move(trace), n_steps, drift};
}

struct StationaryCheck {
  /// 1 - |<psi(0)|psi(t)>|
  double residual;
  /// d/dt arg <psi(0)|psi(t)>, from the unwrapped overlap phase.
  double phase_rate;
  /// -E / hbar
  double expected_phase_rate;
};

/// Evolves psi under a time-independent V and measures how far it leaves its
/// own ray. An eigenstate of energy E gives residual ~ 0 and phase rate -E.
inline StationaryCheck stationary_check(const Wavefunction& psi, const Potential& V, double E,
                                        double dt, std::size_t n_steps) {
  if (!is_time_independent(V)) {
    throw DomainError("propagator", "stationary check needs a time-independent potential");
  }
  StationaryCheck out{0.0, 0.0, -E / scaled::hbar};
  if (n_steps == 0) return out;
  detail::require_contained(psi);

  detail::SplitStepper stepper(psi.grid(), psi.mass(), V, dt);
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  const double dx = psi.grid().dx();
  auto overlap = [&] {
    Complex s = 0.0;
    for (std::size_t j = 0; j < amps.size(); ++j) s += std::conj(psi[j]) * amps[j];
    return s * dx;
  };

  double phase = 0.0;
  double previous = 0.0;
  Complex ov = 1.0;
  for (std::size_t s = 0; s < n_steps; ++s) {
    stepper.step(amps, psi.time() + double(s) * dt);
    ov = overlap();
    const double a = std::arg(ov);
    double d = a - previous;
    d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
    phase += d;
    previous = a;
  }
  if (edge_amplitude(amps) > kPropagationEdgeTolerance) {
    throw BoundaryError("propagator", "state reached the domain edge during stationary check");
  }
  out.residual = 1.0 - std::abs(ov);
  out.phase_rate = phase / (double(n_steps) * dt);
  return out;
}

}  // namespace eqlab
