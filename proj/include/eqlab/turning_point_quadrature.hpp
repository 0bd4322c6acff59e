#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace eqlab {

/// Integrates a function with inverse-square-root endpoint behaviour between
/// classical turning points. The substitution r = lo + (hi - lo) sin^2(theta)
/// carries a factor 2 (hi - lo) sin(theta) cos(theta) that absorbs the
/// singularities, leaving a smooth integrand on [0, pi/2].
template <class F>
double turning_point_integral(F&& f, double lo, double hi) {
  const double span = hi - lo;
  auto g = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return f(lo + span * s * s, s, c) * 2.0 * span * s * c;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, std::numbers::pi / 2,
                                                                        15, 1e-14);
}

}  // namespace eqlab
