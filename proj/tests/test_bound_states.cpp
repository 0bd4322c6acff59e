#include <gtest/gtest.h>

#include <random>

#include "eqlab/bound_states.hpp"
#include "eqlab/units.hpp"
#include "oracles.hpp"

using namespace eqlab;

namespace {

const CentralPotentialSpec kUnitGravity{Gravitational{1.0, 1.0}, 1.0};

}  // namespace

TEST(AnalyticSpectrum, NaturalUnitLevels) {
  const auto s = analytic_spectrum(kUnitGravity, 1.0, 5);
  ASSERT_EQ(s.levels.size(), 5u);
  for (const auto& l : s.levels) {
    EXPECT_DOUBLE_EQ(l.analytic_radius, double(l.n * l.n));
    EXPECT_DOUBLE_EQ(l.analytic_energy, -0.5 / double(l.n * l.n));
    EXPECT_FALSE(l.numeric_energy.has_value());
  }
  EXPECT_DOUBLE_EQ(s.levels[2].analytic_radius, 9.0);
  EXPECT_DOUBLE_EQ(s.levels[2].analytic_energy, -1.0 / 18.0);
}

TEST(AnalyticSpectrum, DoublingMassScalesEnergyAndRadius) {
  const auto light = analytic_spectrum(kUnitGravity, 1.0, 1).levels[0];
  const auto heavy = analytic_spectrum({Gravitational{1.0, 1.0}, 2.0}, 1.0, 1).levels[0];
  EXPECT_DOUBLE_EQ(heavy.analytic_energy, 8.0 * light.analytic_energy);
  EXPECT_DOUBLE_EQ(heavy.analytic_radius, light.analytic_radius / 4.0);
}

TEST(AnalyticSpectrum, MassScalingInvariantsRandomized) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> mass(0.1, 10.0), GM(0.5, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double gm = GM(rng), m1 = mass(rng), m2 = mass(rng);
    for (int n = 1; n <= 4; ++n) {
      const CentralPotentialSpec a{Gravitational{gm, 1.0}, m1}, b{Gravitational{gm, 1.0}, m2};
      EXPECT_NEAR(bohr_radius(a, 1.0, n) * m1 * m1, bohr_radius(b, 1.0, n) * m2 * m2, 1e-12 * n * n / gm);
      EXPECT_NEAR(bohr_energy(a, 1.0, n) / (m1 * m1 * m1), bohr_energy(b, 1.0, n) / (m2 * m2 * m2),
                  1e-12 * gm * gm);
    }
  }
}

TEST(AnalyticSpectrum, SignsAndMonotonicity) {
  for (const CentralPotentialSpec& s : {kUnitGravity, CentralPotentialSpec{Coulomb{2.0}, 0.5}}) {
    const auto levels = analytic_spectrum(s, 1.0, 20).levels;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      EXPECT_LT(levels[i].analytic_energy, 0.0);
      if (i > 0) {
        EXPECT_LT(std::abs(levels[i].analytic_energy), std::abs(levels[i - 1].analytic_energy));
        EXPECT_GT(levels[i].analytic_radius, levels[i - 1].analytic_radius);
      }
    }
    for (double r : {0.01, 1.0, 100.0}) EXPECT_LT(central_potential(s, r), 0.0);
  }
}

TEST(AnalyticSpectrum, CoulombFormulas) {
  const CentralPotentialSpec s{Coulomb{2.0}, 3.0};
  // r_n = hbar^2 n^2 / (m e^2), E_n = -m e^4 / (2 hbar^2 n^2)
  EXPECT_DOUBLE_EQ(bohr_radius(s, 1.0, 2), 4.0 / 6.0);
  EXPECT_DOUBLE_EQ(bohr_energy(s, 1.0, 2), -3.0 * 4.0 / 8.0);
}

TEST(AnalyticSpectrum, NeutronPairRadiusSi) {
  const auto k = si_constants();
  const CentralPotentialSpec plain{Gravitational{k.G, k.m_neutron}, k.m_neutron};
  CentralPotentialSpec reduced = plain;
  reduced.reduced_mass = true;
  const double r1 = analytic_spectrum(plain, k.hbar, 1).levels[0].analytic_radius;
  EXPECT_LT(oracle::rel(r1, oracle::codata::neutron_pair_radius_si), 1e-4);
  EXPECT_LT(oracle::rel(analytic_spectrum(reduced, k.hbar, 1).levels[0].analytic_radius,
                        oracle::codata::neutron_pair_radius_reduced_si), 1e-4);
  EXPECT_DOUBLE_EQ(dynamical_mass(reduced), 0.5 * k.m_neutron);
}

TEST(AnalyticSpectrum, InvalidSpecs) {
  EXPECT_THROW(analytic_spectrum({Coulomb{-1.0}, 1.0}, 1.0, 3), DomainError);
  EXPECT_THROW(analytic_spectrum({Gravitational{1.0, 0.0}, 1.0}, 1.0, 3), DomainError);
  EXPECT_THROW(analytic_spectrum({Gravitational{1.0, 1.0}, -1.0}, 1.0, 3), DomainError);
  EXPECT_THROW(analytic_spectrum(kUnitGravity, 1.0, 0), DomainError);
}

// ------------------------------------------------------------ radial solver

TEST(RadialEigensolver, ReferenceResolution) {
  const auto s = radial_eigensolver(kUnitGravity, 1.0, 400.0, 8000, 5);
  for (const auto& l : s.levels) {
    ASSERT_TRUE(l.numeric_energy.has_value());
    EXPECT_LE(*l.relative_error, 1e-3) << "n=" << l.n;
    EXPECT_NEAR(*l.relative_error, std::abs(*l.numeric_energy / l.analytic_energy - 1.0), 1e-15);
  }
  EXPECT_NEAR(*s.levels[0].numeric_energy / *s.levels[3].numeric_energy, 16.0, 16.0 * 5e-3);
}

TEST(RadialEigensolver, CoulombAndGravityShareTheHamiltonian) {
  const auto a = radial_eigensolver({Coulomb{1.0}, 1.0}, 1.0, 200.0, 4000, 3);
  const auto b = radial_eigensolver(kUnitGravity, 1.0, 200.0, 4000, 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(*a.levels[i].numeric_energy, *b.levels[i].numeric_energy);
}

TEST(RadialEigensolver, SecondOrderUnderRefinement) {
  const double e1 = *radial_eigensolver(kUnitGravity, 1.0, 400.0, 3999, 1).levels[0].relative_error;
  const double e2 = *radial_eigensolver(kUnitGravity, 1.0, 400.0, 7999, 1).levels[0].relative_error;
  EXPECT_GT(e1 / e2, 3.0);
  EXPECT_LT(e1 / e2, 5.0);
}

TEST(RadialEigensolver, ContractViolations) {
  EXPECT_THROW(radial_eigensolver(kUnitGravity, 1.0, 400.0, 1999, 5), DomainError);
  EXPECT_THROW(radial_eigensolver(kUnitGravity, 1.0, 74.0, 4000, 5), BoxTooSmallError);
  EXPECT_THROW(radial_eigensolver(kUnitGravity, 1.0, 400.0, 4000, 0), DomainError);
}

TEST(RadialEigensolver, BoxEnlargementCheckFires) {
  // r_max = 3 r_5 satisfies the static bound, but level 5 still feels the wall.
  EXPECT_THROW(radial_eigensolver(kUnitGravity, 1.0, 75.0, 4000, 5), BoxTooSmallError);
}

TEST(RadialEigensolver, VirialTheoremOnEigenstates) {
  const RadialGrid grid{200.0, 4000};
  const auto st = solve_radial(kUnitGravity, 1.0, grid, 4);
  for (std::size_t n = 0; n < 4; ++n) {
    double norm = 0.0, pot = 0.0;
    for (std::size_t j = 0; j < grid.n_grid; ++j) {
      const double u = st.states[n][j];
      norm += u * u * grid.spacing();
      pot += -u * u / grid.r(j) * grid.spacing();
    }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    const double kinetic = st.energies[n] - pot;
    EXPECT_NEAR(kinetic / -st.energies[n], 1.0, 0.01);
    EXPECT_GT(st.states[n][0], 0.0);
  }
}

// ---------------------------------------------------------------- actions

TEST(ActionIntegrals, MatchClosedFormAndQuantization) {
  for (int n : {1, 2, 5, 10, 40}) {
    const double E = bohr_energy(kUnitGravity, 1.0, n);
    const auto a = action_integrals(kUnitGravity, 1.0, E);
    const double closed = 2.0 * std::numbers::pi / std::sqrt(-2.0 * E);  // GM m^{3/2} = 1
    EXPECT_NEAR(a.p_action / closed, 1.0, 1e-12);
    EXPECT_NEAR(a.quantum_number, double(n), 0.005 * n);
    EXPECT_EQ(a.v_action * kUnitGravity.mass, a.p_action);
  }
  const auto e5 = action_integrals(kUnitGravity, 1.0, -1.0 / 50.0);
  EXPECT_NEAR(e5.p_action / (2.0 * std::numbers::pi), 5.0, 0.025);
}

TEST(ActionIntegrals, HeavierMassAtScaledLevelKeepsVelocityAction) {
  for (int K : {2, 3, 7}) {
    for (int n : {1, 4, 9}) {
      const CentralPotentialSpec heavy{Gravitational{1.0, 1.0}, double(K)};
      const auto a = action_integrals(kUnitGravity, 1.0, bohr_energy(kUnitGravity, 1.0, n));
      const auto b = action_integrals(heavy, 1.0, bohr_energy(heavy, 1.0, K * n));
      EXPECT_NEAR(b.v_action / a.v_action, 1.0, 1e-9);
      EXPECT_NEAR(b.p_action / a.p_action, double(K), 1e-9 * K);
    }
  }
}

TEST(ActionIntegrals, UnboundEnergiesRejected) {
  EXPECT_THROW(action_integrals(kUnitGravity, 1.0, 0.0), NoTurningPointError);
  EXPECT_THROW(action_integrals(kUnitGravity, 1.0, 0.3), NoTurningPointError);
}
