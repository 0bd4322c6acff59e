#pragma once

#include <functional>
#include <string>
#include <type_traits>
#include <variant>

#include "eqlab/trajectory.hpp"

namespace eqlab {

namespace potential {

struct Free {};

/// V(x) = m g x
struct UniformGravity {
  double g;
};

/// V(x', t) = -m xi_ddot(t) x', the inertial potential seen in the frame
/// x' = x + xi(t).
struct AcceleratedFrame {
  Trajectory trajectory;
};

/// Arbitrary sampler V(x, t). `time_independent` lets the propagator sample
/// once and lets stationary checks accept it.
struct Tabulated {
  std::function<double(double x, double t)> sample;
  bool time_independent = false;
};

}  // namespace potential

using Potential = std::variant<potential::Free, potential::UniformGravity,
                               potential::AcceleratedFrame, potential::Tabulated>;

inline double potential_value(const Potential& V, double x, double t, double mass) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, potential::Free>) return 0.0;
        else if constexpr (std::is_same_v<T, potential::UniformGravity>) return mass * p.g * x;
        else if constexpr (std::is_same_v<T, potential::AcceleratedFrame>)
          return -mass * p.trajectory.xi_ddot(t) * x;
        else return p.sample(x, t);
      },
      V);
}

inline bool is_time_independent(const Potential& V) {
  return std::visit(
      [](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, potential::Free> ||
                      std::is_same_v<T, potential::UniformGravity>)
          return true;
        else if constexpr (std::is_same_v<T, potential::AcceleratedFrame>)
          return std::holds_alternative<trajectory::Rest>(p.trajectory.family()) ||
                 std::holds_alternative<trajectory::ConstantVelocity>(p.trajectory.family()) ||
                 std::holds_alternative<trajectory::ConstantAcceleration>(p.trajectory.family());
        else return p.time_independent;
      },
      V);
}

inline bool is_free(const Potential& V) { return std::holds_alternative<potential::Free>(V); }

inline std::string potential_name(const Potential& V) {
  switch (V.index()) {
    case 0: return "free";
    case 1: return "uniform_gravity";
    case 2: return "accelerated_frame";
    default: return "tabulated";
  }
}

}  // namespace eqlab
