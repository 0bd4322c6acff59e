#include <gtest/gtest.h>

#include "eqlab/correspondence.hpp"
#include "eqlab/propagator.hpp"
#include "oracles.hpp"

using namespace eqlab;

namespace {

SpatialGrid grid40() { return SpatialGrid(-40.0, 40.0, 1024); }

potential::Tabulated harmonic(double omega) {
  return {[omega](double x, double) { return 0.5 * omega * omega * x * x; }, true};
}

/// Closed-form free Gaussian (centered at 0, p0 = 0) at time t.
Complex free_gaussian(double x, double t, double sigma, double mass) {
  const Complex s = 1.0 + Complex(0.0, t / (2.0 * mass * sigma * sigma));
  return std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25) / std::sqrt(s) *
         std::exp(-x * x / (4.0 * sigma * sigma * s));
}

}  // namespace

TEST(Propagate, ZeroStepsIsIdentity) {
  const auto psi = gaussian_packet(grid40(), 1.0, 0.5, 1.0, 1.0);
  const auto r = propagate(psi, potential::Free{}, 1e-3, 0);
  EXPECT_EQ(r.steps_taken, 0u);
  EXPECT_EQ(max_pointwise_difference(r.final_state, psi), 0.0);
  EXPECT_EQ(r.final_state.time(), psi.time());
}

TEST(Propagate, AdvancesTime) {
  const auto psi = gaussian_packet(grid40(), 0.0, 0.0, 1.0, 1.0, 0.25);
  const auto r = propagate(psi, potential::Free{}, 1e-3, 500);
  EXPECT_NEAR(r.final_state.time(), 0.75, 1e-13);
  EXPECT_EQ(r.steps_taken, 500u);
}

TEST(Propagate, StabilityBound) {
  const auto psi = gaussian_packet(grid40(), 0.0, 0.0, 1.0, 1.0);
  // hbar k_max^2 dt / 2m with k_max = pi / dx: dt limit = 2 dx^2 / pi.
  const double limit = 2.0 * psi.grid().dx() * psi.grid().dx() / std::numbers::pi;
  EXPECT_THROW(propagate(psi, potential::Free{}, 1.01 * limit, 1), StabilityError);
  EXPECT_NO_THROW(propagate(psi, potential::Free{}, 0.99 * limit, 1));
  EXPECT_THROW(propagate(psi, potential::Free{}, 0.0, 1), DomainError);
  EXPECT_THROW(propagate(psi, potential::Free{}, -1e-3, 1), DomainError);
}

TEST(Propagate, BoundaryContract) {
  const SpatialGrid g(-10.0, 10.0, 256);
  std::vector<Complex> wide(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) wide[j] = std::exp(-g.x(j) * g.x(j) / 16.0);
  const auto touching = Wavefunction::normalized(g, wide, 1.0, 0.0);
  EXPECT_THROW(propagate(touching, potential::Free{}, 1e-3, 1), BoundaryError);

  // A fast packet that reaches the edge between traced samples.
  const auto fast = gaussian_packet(g, 0.0, 8.0, 0.8, 1.0);
  EXPECT_THROW(propagate(fast, potential::Free{}, 1e-3, 2000, 100), BoundaryError);
  EXPECT_NO_THROW(propagate(fast, potential::Free{}, 1e-3, 100, 50));
}

TEST(Propagate, FreeSpreadingLaw) {
  const auto psi = gaussian_packet(grid40(), 0.0, 0.0, 1.0, 1.0);
  const auto r = propagate(psi, potential::Free{}, 1e-3, 2000);
  EXPECT_NEAR(observables(r.final_state).spread_x / std::sqrt(2.0), 1.0, 1e-6);
}

TEST(Propagate, FreeEvolutionMatchesClosedFormAndIsStepIndependent) {
  const auto psi = gaussian_packet(grid40(), 0.0, 0.0, 1.0, 1.0);
  const auto coarse = propagate(psi, potential::Free{}, 0.0025, 800).final_state;
  const auto fine = propagate(psi, potential::Free{}, 0.001, 2000).final_state;
  EXPECT_LT(max_pointwise_difference(coarse, fine), 1e-10);
  for (std::size_t j = 0; j < psi.grid().size(); ++j) {
    EXPECT_LT(std::abs(fine[j] - free_gaussian(psi.grid().x(j), 2.0, 1.0, 1.0)), 1e-10);
  }
}

TEST(Propagate, UniformGravityMeanMotionIsMassIndependent) {
  const double g = 1.0, v0 = 0.5, x0 = 1.0;
  std::vector<PropagationResult> runs;
  for (double m : {1.0, 2.0}) {
    runs.push_back(propagate(gaussian_packet(grid40(), x0, m * v0, 1.0, m), potential::UniformGravity{g}, 1e-3,
                             2000, 100));
  }
  ASSERT_EQ(runs[0].trace.size(), runs[1].trace.size());
  for (std::size_t i = 0; i < runs[0].trace.size(); ++i) {
    const double t = runs[0].trace[i].time;
    const double classical = x0 + v0 * t - 0.5 * g * t * t;
    EXPECT_NEAR(runs[0].trace[i].observables.mean_x, runs[1].trace[i].observables.mean_x, 1e-8);
    EXPECT_NEAR(runs[0].trace[i].observables.mean_x, classical, 1e-8);
    EXPECT_NEAR(runs[1].trace[i].observables.mean_p, 2.0 * (v0 - g * t), 1e-8);
  }
  const double s1 = runs[0].trace.back().observables.spread_x;
  const double s2 = runs[1].trace.back().observables.spread_x;
  EXPECT_GT(std::abs(s1 - s2) / s2, 0.01);
}

TEST(Propagate, TraceIncludesEndpoints) {
  const auto psi = gaussian_packet(grid40(), 0.0, 0.0, 1.0, 1.0);
  const auto r = propagate(psi, potential::Free{}, 1e-3, 250, 100);
  ASSERT_EQ(r.trace.size(), 4u);  // steps 0, 100, 200, 250
  EXPECT_NEAR(r.trace.front().time, 0.0, 1e-15);
  EXPECT_NEAR(r.trace.back().time, 0.25, 1e-14);
  for (const auto& s : r.trace) {
    EXPECT_LE(s.edge_amplitude, kPropagationEdgeTolerance);
    ASSERT_TRUE(s.observables.energy.has_value());
  }
}

TEST(PropagateInvariants, NormDriftPer1e4Steps) {
  const auto psi = gaussian_packet(grid40(), 0.0, 1.0, 1.0, 1.0);
  for (const Potential& V : {Potential(potential::Free{}), Potential(potential::UniformGravity{1.0}),
                             Potential(harmonic(1.0))}) {
    const auto r = propagate(psi, V, 1e-4, 10000);
    EXPECT_LE(r.norm_drift, 1e-12) << potential_name(V);
  }
}

TEST(PropagateInvariants, EnergyConservedForStaticPotentials) {
  const auto psi = gaussian_packet(grid40(), 2.0, 0.0, 0.9, 1.0);
  for (const Potential& V : {Potential(potential::UniformGravity{1.0}), Potential(harmonic(1.0))}) {
    const auto r = propagate(psi, V, 1e-4, 10000, 10000);
    const double e0 = *r.trace.front().observables.energy;
    const double e1 = *r.trace.back().observables.energy;
    EXPECT_LE(std::abs(e1 - e0) / std::abs(e0), 1e-8) << potential_name(V);
  }
}

TEST(PropagateInvariants, EhrenfestForLinearPotential) {
  // d<x>/dt = <p>/m and d<p>/dt = -m g, checked by central differences of the trace.
  const double m = 1.5, g = 0.8, dt = 1e-3;
  const auto r = propagate(gaussian_packet(grid40(), 0.0, 1.0, 1.0, m), potential::UniformGravity{g}, dt, 1000, 1);
  for (std::size_t i = 1; i + 1 < r.trace.size(); i += 97) {
    const auto& prev = r.trace[i - 1].observables;
    const auto& next = r.trace[i + 1].observables;
    const auto& mid = r.trace[i].observables;
    const double dxdt = (next.mean_x - prev.mean_x) / (2.0 * dt);
    const double dpdt = (next.mean_p - prev.mean_p) / (2.0 * dt);
    EXPECT_LE(std::abs(dxdt - mid.mean_p / m), 1e-8 * std::max(1.0, std::abs(mid.mean_p / m)));
    EXPECT_LE(std::abs(dpdt + m * g), 1e-8 * m * g);
  }
}

TEST(PropagateInvariants, SecondOrderConvergenceInHarmonicWell) {
  const auto psi = gaussian_packet(grid40(), 2.0, 0.0, 1.0, 1.0);
  const Potential V = harmonic(1.0);
  const auto ref = propagate(psi, V, 1e-4, 10000).final_state;
  const double e1 = max_pointwise_difference(propagate(psi, V, 2e-3, 500).final_state, ref);
  const double e2 = max_pointwise_difference(propagate(psi, V, 1e-3, 1000).final_state, ref);
  EXPECT_GE(e1 / e2, 3.5);
  EXPECT_LE(e1 / e2, 4.5);
}

TEST(PotentialFamilies, LinearFamiliesHaveZeroCurvature) {
  const Potential fams[] = {potential::UniformGravity{9.81},
                            potential::AcceleratedFrame{trajectory::Sinusoidal{0.3, 2.0}},
                            potential::AcceleratedFrame{trajectory::ConstantAcceleration{0.5}}};
  for (const auto& V : fams) {
    for (double t : {0.0, 0.7, 1.9}) {
      for (double x = -5.0; x <= 5.0; x += 0.5) {
        const double h = 0.1;
        const double c = potential_value(V, x + h, t, 2.0) - 2.0 * potential_value(V, x, t, 2.0) +
                         potential_value(V, x - h, t, 2.0);
        EXPECT_NEAR(c, 0.0, 1e-10);
      }
    }
  }
  EXPECT_EQ(potential_value(potential::UniformGravity{2.0}, 3.0, 0.0, 1.5), 9.0);
  EXPECT_TRUE(is_time_independent(potential::UniformGravity{1.0}));
  EXPECT_FALSE(is_time_independent(potential::AcceleratedFrame{trajectory::Sinusoidal{0.3, 2.0}}));
}

TEST(StationaryCheck, HarmonicGroundStateFromEigensolver) {
  const SpatialGrid g(-16.0, 16.0, 1024);
  const HarmonicWell well{1.0};
  const auto basis = bound_basis(well, 1.0, g, 2);
  std::vector<Complex> amps(basis.state(0).begin(), basis.state(0).end());
  const auto ground = Wavefunction::normalized(g, amps, 1.0, 0.0);
  const auto s = stationary_check(ground, harmonic(1.0), basis.energy(0), 5e-4, 4000);
  EXPECT_LT(s.residual, 1e-6);
  EXPECT_NEAR(s.phase_rate, s.expected_phase_rate, 1e-4);
  EXPECT_NEAR(s.expected_phase_rate, -0.5, 1e-4);
}

TEST(StationaryCheck, NonEigenstateDrifts) {
  const auto psi = gaussian_packet(SpatialGrid(-16.0, 16.0, 512), 0.0, 0.0, 1.0, 1.0);
  const auto s = stationary_check(psi, harmonic(1.0), 0.5, 1e-3, 1000);
  EXPECT_GT(s.residual, 1e-3);
}

TEST(StationaryCheck, ZeroStepsAndTimeDependentPotential) {
  const auto psi = gaussian_packet(grid40(), 0.0, 0.0, 1.0, 1.0);
  EXPECT_EQ(stationary_check(psi, harmonic(1.0), 0.5, 1e-3, 0).residual, 0.0);
  EXPECT_THROW(stationary_check(psi, potential::AcceleratedFrame{trajectory::Sinusoidal{0.3, 2.0}}, 0.5, 1e-3, 10),
               DomainError);
}
