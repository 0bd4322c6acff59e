#pragma once

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

#include "eqlab/errors.hpp"

namespace eqlab {

namespace trajectory {

struct Rest {};

struct ConstantVelocity {
  double v;
};

struct ConstantAcceleration {
  double a;
};

/// xi(t) = amplitude * sin(omega * t)
struct Sinusoidal {
  double amplitude;
  double omega;
};

/// xi(t) sampled at t_i = i * dt starting from t = 0, interpolated by a
/// cubic B-spline. Derivatives are those of the spline.
class Sampled {
 public:
  Sampled(double dt, std::vector<double> samples) : dt_(dt), samples_(std::move(samples)) {
    if (!(dt > 0.0) || samples_.size() < 4) {
      throw DomainError("frame-transform", "sampled trajectory needs dt > 0 and at least 4 samples");
    }
    spline_ = boost::math::interpolators::cardinal_cubic_b_spline<double>(
        samples_.data(), samples_.size(), 0.0, dt_);
    cumulative_.assign(samples_.size(), 0.0);
    for (std::size_t i = 1; i < samples_.size(); ++i) {
      cumulative_[i] = cumulative_[i - 1] + squared_speed_integral(dt_ * double(i - 1), dt_ * double(i));
    }
  }

  double duration() const noexcept { return dt_ * double(samples_.size() - 1); }
  double dt() const noexcept { return dt_; }
  const std::vector<double>& samples() const noexcept { return samples_; }

  double xi(double t) const { return spline_(checked(t)); }
  double xi_dot(double t) const { return spline_.prime(checked(t)); }
  double xi_ddot(double t) const { return spline_.double_prime(checked(t)); }

  double xi_dot_sq_integral(double t) const {
    checked(t);
    auto i = static_cast<std::size_t>(t / dt_);
    if (i >= samples_.size() - 1) i = samples_.size() - 2;
    return cumulative_[i] + squared_speed_integral(dt_ * double(i), t);
  }

 private:
  double checked(double t) const {
    if (t < 0.0 || t > duration() * (1.0 + 1e-12)) {
      throw DomainError("frame-transform", "time outside the sampled trajectory");
    }
    return t;
  }
  // Integrand is a quartic polynomial on each knot interval; 5 points are exact.
  double squared_speed_integral(double t0, double t1) const {
    auto f = [this](double t) {
      const double v = spline_.prime(t);
      return v * v;
    };
    return boost::math::quadrature::gauss<double, 5>::integrate(f, t0, t1);
  }

  double dt_;
  std::vector<double> samples_;
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline_;
  std::vector<double> cumulative_;
};

}  // namespace trajectory

/// Displacement xi(t) of the accelerated frame, x' = x + xi(t), together with
/// its derivatives and the running integral of xi_dot^2 from 0 to t.
class Trajectory {
 public:
  using Family = std::variant<trajectory::Rest, trajectory::ConstantVelocity,
                              trajectory::ConstantAcceleration, trajectory::Sinusoidal,
                              trajectory::Sampled>;

  Trajectory() = default;
  template <class F>
    requires std::is_constructible_v<Family, F>
  Trajectory(F f) : family_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

  const Family& family() const noexcept { return family_; }

  std::string name() const {
    return std::visit(
        [](const auto& f) -> std::string {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, trajectory::Rest>) return "rest";
          else if constexpr (std::is_same_v<T, trajectory::ConstantVelocity>) return "constant_velocity";
          else if constexpr (std::is_same_v<T, trajectory::ConstantAcceleration>) return "constant_acceleration";
          else if constexpr (std::is_same_v<T, trajectory::Sinusoidal>) return "sinusoidal";
          else return "sampled";
        },
        family_);
  }

  double xi(double t) const {
    return visit_family(
        t, [](const trajectory::Rest&, double) { return 0.0; },
        [](const trajectory::ConstantVelocity& f, double s) { return f.v * s; },
        [](const trajectory::ConstantAcceleration& f, double s) { return 0.5 * f.a * s * s; },
        [](const trajectory::Sinusoidal& f, double s) { return f.amplitude * std::sin(f.omega * s); },
        [](const trajectory::Sampled& f, double s) { return f.xi(s); });
  }

  double xi_dot(double t) const {
    return visit_family(
        t, [](const trajectory::Rest&, double) { return 0.0; },
        [](const trajectory::ConstantVelocity& f, double) { return f.v; },
        [](const trajectory::ConstantAcceleration& f, double s) { return f.a * s; },
        [](const trajectory::Sinusoidal& f, double s) {
          return f.amplitude * f.omega * std::cos(f.omega * s);
        },
        [](const trajectory::Sampled& f, double s) { return f.xi_dot(s); });
  }

  double xi_ddot(double t) const {
    return visit_family(
        t, [](const trajectory::Rest&, double) { return 0.0; },
        [](const trajectory::ConstantVelocity&, double) { return 0.0; },
        [](const trajectory::ConstantAcceleration& f, double) { return f.a; },
        [](const trajectory::Sinusoidal& f, double s) {
          return -f.amplitude * f.omega * f.omega * std::sin(f.omega * s);
        },
        [](const trajectory::Sampled& f, double s) { return f.xi_ddot(s); });
  }

  /// Integral of xi_dot^2 over [0, t].
  double xi_dot_sq_integral(double t) const {
    return visit_family(
        t, [](const trajectory::Rest&, double) { return 0.0; },
        [](const trajectory::ConstantVelocity& f, double s) { return f.v * f.v * s; },
        [](const trajectory::ConstantAcceleration& f, double s) { return f.a * f.a * s * s * s / 3.0; },
        [](const trajectory::Sinusoidal& f, double s) {
          const double aw = f.amplitude * f.omega;
          return aw * aw * (0.5 * s + std::sin(2.0 * f.omega * s) / (4.0 * f.omega));
        },
        [](const trajectory::Sampled& f, double s) { return f.xi_dot_sq_integral(s); });
  }

 private:
  template <class... Fs>
  struct overloaded : Fs... {
    using Fs::operator()...;
  };

  template <class... Fs>
  double visit_family(double t, Fs... fs) const {
    return std::visit([&](const auto& f) { return overloaded<Fs...>{fs...}(f, t); }, family_);
  }

  Family family_ = trajectory::Rest{};
};

}  // namespace eqlab
