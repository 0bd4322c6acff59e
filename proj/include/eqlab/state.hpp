#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eqlab/errors.hpp"
#include "eqlab/fourier.hpp"
#include "eqlab/grid.hpp"
#include "eqlab/potential.hpp"
#include "eqlab/units.hpp"

namespace eqlab {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kEdgeTolerance = 1e-12;

inline double discrete_norm(std::span<const Complex> amps, double dx) {
  double s = 0.0;
  for (const auto& z : amps) s += std::norm(z);
  return s * dx;
}

/// Largest amplitude at the two outermost grid points, i.e. at the seam of the
/// periodic domain.
inline double edge_amplitude(std::span<const Complex> amps) {
  if (amps.empty()) return 0.0;
  return std::max(std::abs(amps.front()), std::abs(amps.back()));
}

/// Pure state on a periodic grid, in scaled units (hbar = 1). Immutable after
/// construction; the norm sum |psi_j|^2 dx is 1 within 1e-10.
class Wavefunction {
 public:
  Wavefunction(SpatialGrid grid, std::vector<Complex> amplitudes, double mass, double time)
      : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), mass_(mass), time_(time) {
    if (amplitudes_.size() != grid_.size()) {
      throw DomainError("units-and-state", "amplitude count does not match the grid");
    }
    if (!(mass_ > 0.0)) throw DomainError("units-and-state", "mass must be positive");
    if (std::abs(norm() - 1.0) > kNormTolerance) {
      throw DomainError("units-and-state", "wavefunction is not normalized");
    }
  }

  /// Rescales `amplitudes` to unit norm before constructing.
  static Wavefunction normalized(SpatialGrid grid, std::vector<Complex> amplitudes, double mass,
                                 double time) {
    const double n = discrete_norm(amplitudes, grid.dx());
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw DomainError("units-and-state", "cannot normalize a zero or non-finite state");
    }
    const double s = 1.0 / std::sqrt(n);
    for (auto& z : amplitudes) z *= s;
    return Wavefunction(std::move(grid), std::move(amplitudes), mass, time);
  }

  const SpatialGrid& grid() const noexcept { return grid_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t j) const noexcept { return amplitudes_[j]; }
  double mass() const noexcept { return mass_; }
  double time() const noexcept { return time_; }
  double norm() const { return discrete_norm(amplitudes_, grid_.dx()); }
  double edge_amplitude() const { return eqlab::edge_amplitude(amplitudes_); }

 private:
  SpatialGrid grid_;
  std::vector<Complex> amplitudes_;
  double mass_;
  double time_;
};

/// <a|b> = sum conj(a_j) b_j dx
inline Complex inner_product(const Wavefunction& a, const Wavefunction& b) {
  if (!(a.grid() == b.grid())) throw DomainError("units-and-state", "states live on different grids");
  Complex s = 0.0;
  for (std::size_t j = 0; j < a.grid().size(); ++j) s += std::conj(a[j]) * b[j];
  return s * a.grid().dx();
}

inline double fidelity(const Wavefunction& a, const Wavefunction& b) {
  return std::abs(inner_product(a, b));
}

inline double max_pointwise_difference(const Wavefunction& a, const Wavefunction& b) {
  if (!(a.grid() == b.grid())) throw DomainError("units-and-state", "states live on different grids");
  double m = 0.0;
  for (std::size_t j = 0; j < a.grid().size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

inline double peak_amplitude(const Wavefunction& psi) {
  double m = 0.0;
  for (const auto& z : psi.amplitudes()) m = std::max(m, std::abs(z));
  return m;
}

/// Minimum-uncertainty Gaussian: |psi|^2 has standard deviation delta_x, mean
/// x0, and the state carries mean momentum p0, so spread_p = hbar / (2 delta_x).
inline Wavefunction gaussian_packet(const SpatialGrid& grid, double x0, double p0, double delta_x,
                                    double mass, double time = 0.0) {
  if (!(mass > 0.0)) throw DomainError("units-and-state", "mass must be positive");
  if (delta_x < 4.0 * grid.dx()) {
    throw GridResolutionError("units-and-state", "packet width is below 4 grid spacings");
  }
  if (delta_x > grid.length() / 8.0) {
    throw GridResolutionError("units-and-state", "packet width exceeds 1/8 of the domain");
  }
  const double sigma2 = delta_x * delta_x;
  const double amp = std::pow(2.0 * std::numbers::pi * sigma2, -0.25);
  std::vector<Complex> psi(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double u = grid.x(j) - x0;
    psi[j] = amp * std::exp(-u * u / (4.0 * sigma2)) * std::polar(1.0, p0 * grid.x(j) / scaled::hbar);
  }
  if (edge_amplitude(psi) > kEdgeTolerance) {
    throw GridResolutionError("units-and-state", "packet tails reach the domain edges");
  }
  return Wavefunction::normalized(grid, std::move(psi), mass, time);
}

struct Observables {
  double norm;
  double mean_x;
  double mean_p;
  double spread_x;
  double spread_p;
  double spread_v;
  double kinetic;
  /// <T> + <V>; present only when a potential was supplied.
  std::optional<double> energy;
};

namespace detail {

inline Observables position_and_momentum_moments(const Wavefunction& psi) {
  const auto& grid = psi.grid();
  const double dx = grid.dx();
  Observables o{};
  o.norm = psi.norm();

  double mx = 0.0, mx2 = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double w = std::norm(psi[j]) * dx;
    mx += w * grid.x(j);
  }
  mx /= o.norm;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double u = grid.x(j) - mx;
    mx2 += std::norm(psi[j]) * dx * u * u;
  }
  o.mean_x = mx;
  o.spread_x = std::sqrt(mx2 / o.norm);

  std::vector<Complex> phi(psi.amplitudes().begin(), psi.amplitudes().end());
  FourierTransform(grid.size()).forward(phi);
  double total = 0.0, mk = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double w = std::norm(phi[j]);
    total += w;
    mk += w * grid.wavenumber(j);
  }
  mk /= total;
  double vk = 0.0, k2 = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double k = grid.wavenumber(j);
    const double w = std::norm(phi[j]) / total;
    vk += w * (k - mk) * (k - mk);
    k2 += w * k * k;
  }
  const double hbar = scaled::hbar;
  o.mean_p = hbar * mk;
  o.spread_p = hbar * std::sqrt(vk);
  o.spread_v = o.spread_p / psi.mass();
  o.kinetic = hbar * hbar * k2 / (2.0 * psi.mass());
  return o;
}

}  // namespace detail

inline Observables observables(const Wavefunction& psi) {
  return detail::position_and_momentum_moments(psi);
}

/// Same as observables(psi) plus the energy <T> + <V> at psi.time().
inline Observables observables(const Wavefunction& psi, const Potential& V) {
  Observables o = detail::position_and_momentum_moments(psi);
  const auto& grid = psi.grid();
  double pot = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    pot += std::norm(psi[j]) * potential_value(V, grid.x(j), psi.time(), psi.mass());
  }
  pot *= grid.dx() / o.norm;
  o.energy = o.kinetic + pot;
  return o;
}

}  // namespace eqlab
