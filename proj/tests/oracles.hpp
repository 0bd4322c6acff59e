#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library under test.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// O(n^2) forward DFT, X_k = sum_j x_j exp(-2 pi i j k / n).
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<long double> s = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const long double angle = -2.0L * std::numbers::pi_v<long double> * (long double)(j * k % n) / (long double)n;
      s += std::complex<long double>(x[j]) * std::polar(1.0L, angle);
    }
    out[k] = std::complex<double>(s);
  }
  return out;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Values below were evaluated with 30-digit arithmetic from the CODATA 2018
// inputs (h, c, e exact; eps0, G, m_e, m_n recommended values).
namespace codata {
inline constexpr double hbar_si = 1.05457181765e-34;
inline constexpr double e_sq_si = 2.30707755234e-28;
inline constexpr double planck_length_si = 1.61625502442e-35;
inline constexpr double planck_length_cgs = 1.61625502442e-33;
inline constexpr double fundamental_speed_si = 1.77550372529e-30;
inline constexpr double fundamental_speed_cgs = 1.77550372529e-28;
inline constexpr double light_to_fundamental_ratio = 1.68849241897e+38;
inline constexpr double electron_radius_cgs = 2.8179403262e-13;
inline constexpr double electron_radius_si = 2.8179403262e-15;
inline constexpr double compton_cgs = 2.42631023868e-10;
inline constexpr double compton_si = 2.42631023868e-12;
inline constexpr double reduced_compton_cgs = 3.86159267961e-11;
inline constexpr double neutron_pair_radius_si = 3.5461619094e+22;
inline constexpr double neutron_pair_radius_reduced_si = 7.09232381879e+22;
inline constexpr double neutron_pair_radius_cgs = 3.5461619094e+24;
inline constexpr double neutron_planck_quantum_number = 8.16449685148e+19;
}  // namespace codata

}  // namespace oracle
