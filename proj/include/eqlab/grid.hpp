#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "eqlab/errors.hpp"

namespace eqlab {

/// Uniform periodic grid on [x_min, x_max) with a power-of-two point count.
class SpatialGrid {
 public:
  SpatialGrid(double x_min, double x_max, std::size_t n_points)
      : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
    if (n_points < 16 || !std::has_single_bit(n_points)) {
      throw DomainError("units-and-state", "grid size must be a power of two and at least 16");
    }
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
      throw DomainError("units-and-state", "grid requires finite x_min < x_max");
    }
  }

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_points_; }
  double length() const noexcept { return x_max_ - x_min_; }
  double dx() const noexcept { return length() / static_cast<double>(n_points_); }
  double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx(); }

  /// Angular wavenumber of FFT bin j in standard (unshifted) order.
  double wavenumber(std::size_t j) const noexcept {
    const auto n = static_cast<long long>(n_points_);
    auto m = static_cast<long long>(j);
    if (m >= n / 2) m -= n;
    return 2.0 * std::numbers::pi * static_cast<double>(m) / length();
  }

  /// Largest |k| representable on the grid (the Nyquist wavenumber).
  double k_max() const noexcept { return std::numbers::pi / dx(); }

  std::vector<double> positions() const {
    std::vector<double> out(n_points_);
    for (std::size_t j = 0; j < n_points_; ++j) out[j] = x(j);
    return out;
  }

  std::vector<double> wavenumbers() const {
    std::vector<double> out(n_points_);
    for (std::size_t j = 0; j < n_points_; ++j) out[j] = wavenumber(j);
    return out;
  }

  friend bool operator==(const SpatialGrid&, const SpatialGrid&) = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
};

}  // namespace eqlab
