#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/bound_states.hpp"
#include "eqlab/correspondence.hpp"
#include "eqlab/estimates.hpp"
#include "eqlab/frame_transform.hpp"
#include "eqlab/harness/config.hpp"
#include "eqlab/harness/summary.hpp"
#include "eqlab/propagator.hpp"
#include "eqlab/state.hpp"

namespace eqlab::harness {

struct ExperimentOutput {
  RunSummary summary;
  CsvTable csv;
};

/// A validated configuration bound to its experiment, ready to execute.
struct PreparedRun {
  std::string name;
  json config;
  std::function<ExperimentOutput()> execute;
};

namespace detail {

inline void require_natural_units(ConfigReader& r) { r.text("unit_system", "natural", {"natural"}); }

inline Trajectory read_trajectory(ConfigReader& r) {
  const auto family =
      r.text("family", "constant_acceleration", {"rest", "constant_velocity", "constant_acceleration", "sinusoidal"});
  if (family == "rest") return trajectory::Rest{};
  if (family == "constant_velocity") return trajectory::ConstantVelocity{r.number("v", 0.5)};
  if (family == "constant_acceleration") return trajectory::ConstantAcceleration{r.number("a", 0.5)};
  return trajectory::Sinusoidal{r.number("amplitude", 0.3), r.positive("omega", 2.0)};
}

inline std::size_t step_count(double duration, double dt) {
  return static_cast<std::size_t>(std::llround(duration / dt));
}

/// Largest relative deviation of d/dt [1/2 integral xi_dot^2] from 1/2 xi_dot^2,
/// by central differences with step eps.
inline double phase_time_derivative_error(const Trajectory& traj, const std::vector<double>& times,
                                          double eps = 1e-5) {
  double worst = 0.0;
  for (double t : times) {
    const double numeric = (phase_time_term(traj, t + eps) - phase_time_term(traj, t - eps)) / (2.0 * eps);
    const double exact = 0.5 * traj.xi_dot(t) * traj.xi_dot(t);
    worst = std::max(worst, std::abs(numeric - exact) / std::max(exact, 1e-12));
  }
  return worst;
}

/// Largest deviation of the grid gradient of f from -(m / hbar) xi_dot.
inline double phase_gradient_error(const SpatialGrid& grid, double mass, const Trajectory& traj,
                                   const std::vector<double>& times) {
  double worst = 0.0;
  for (double t : times) {
    const PhaseField field(grid, t, mass, traj);
    const double expected = phase_gradient(t, mass, traj);
    for (double d : field.gradient()) worst = std::max(worst, std::abs(d - expected));
  }
  return worst;
}

}  // namespace detail

// ---------------------------------------------------------------- equivalence

inline PreparedRun prepare_equivalence(const json& cfg) {
  ConfigReader r(cfg, "equivalence");
  detail::require_natural_units(r);
  const auto points = r.integer("grid_points", 4096, 16);
  const double x_min = r.number("x_min", -64.0);
  const double x_max = r.number("x_max", 64.0);
  const double width = r.positive("packet_width", 1.0);
  const double mass = r.positive("mass", 1.0);
  const double duration = r.positive("duration", 2.0);
  const double dt = r.positive("dt", 5e-4);
  const Trajectory traj = r.object<Trajectory>("trajectory", detail::read_trajectory);
  struct Tol {
    double fidelity, pointwise, conv_min, conv_max, gradient, time_derivative;
  };
  const Tol tol = r.object<Tol>("tolerances", [](ConfigReader& t) {
    return Tol{t.positive("fidelity_deficit", 1e-6), t.positive("pointwise_relative", 1e-4),
               t.positive("convergence_factor_min", 3.5), t.positive("convergence_factor_max", 4.5),
               t.positive("phase_gradient", 1e-8), t.positive("phase_time_derivative", 1e-6)};
  });
  r.finish();
  if (!(x_max > x_min)) r.fail("x_max must exceed x_min");
  if (detail::step_count(duration, dt) == 0) r.fail("duration must cover at least one step");

  auto run = [=] {
    const SpatialGrid grid(x_min, x_max, std::size_t(points));
    const auto psi0 = gaussian_packet(grid, 0.0, 0.0, width, mass);
    const std::size_t n = detail::step_count(duration, dt);
    const auto coarse = equivalence_experiment(psi0, traj, dt, n);
    const auto fine = equivalence_experiment(psi0, traj, 0.5 * dt, 2 * n);
    const double factor = coarse.max_pointwise_error / fine.max_pointwise_error;
    const std::vector<double> times{0.25 * duration, 0.5 * duration, 0.75 * duration, duration};

    RunSummary s;
    s.experiment = "equivalence";
    s.criteria.push_back(check("fidelity_deficit", 1.0 - coarse.fidelity, "<=", tol.fidelity));
    s.criteria.push_back(check("pointwise_error_over_peak", coarse.max_pointwise_error / coarse.peak_amplitude,
                               "<=", tol.pointwise));
    s.criteria.push_back(check("dt_halving_error_factor_min", factor, ">=", tol.conv_min));
    s.criteria.push_back(check("dt_halving_error_factor_max", factor, "<=", tol.conv_max));
    s.criteria.push_back(check("phase_gradient_error", detail::phase_gradient_error(grid, mass, traj, times), "<=",
                               tol.gradient));
    s.criteria.push_back(check("phase_time_derivative_relative_error",
                               detail::phase_time_derivative_error(traj, times), "<=", tol.time_derivative));
    s.measurements = {{"fidelity", coarse.fidelity},
                      {"max_pointwise_error", coarse.max_pointwise_error},
                      {"max_pointwise_error_half_dt", fine.max_pointwise_error},
                      {"peak_amplitude", coarse.peak_amplitude},
                      {"steps", n},
                      {"trajectory", traj.name()}};

    CsvTable csv({"x", "re_lab_then_transform", "im_lab_then_transform", "re_transform_then_frame",
                  "im_transform_then_frame", "abs_difference"});
    const auto& a = coarse.lab_then_transform;
    const auto& b = coarse.transform_then_frame;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      csv.add({grid.x(j), a[j].real(), a[j].imag(), b[j].real(), b[j].imag(), std::abs(a[j] - b[j])});
    }
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"equivalence", r.echo(), run};
}

// ----------------------------------------------------------------------- bohr

inline PreparedRun prepare_bohr(const json& cfg) {
  ConfigReader r(cfg, "bohr");
  detail::require_natural_units(r);
  const double r_max = r.positive("r_max", 400.0);
  const auto n_grid = r.integer("n_grid", 8000, 2000);
  const auto n_levels = r.integer("n_levels", 5, 4);
  const double mass = r.positive("mass", 1.0);
  const double G = r.positive("G", 1.0);
  const double M = r.positive("M", 1.0);
  const double factor = r.positive("mass_factor", 2.0);
  struct Tol {
    double eigen, ratio, scaling;
  };
  const Tol tol = r.object<Tol>("tolerances", [](ConfigReader& t) {
    return Tol{t.positive("eigenvalue_relative", 1e-3), t.positive("ground_to_fourth_ratio", 5e-3),
               t.positive("mass_scaling", 1e-12)};
  });
  r.finish();

  auto run = [=] {
    const double hbar = scaled::hbar;
    const CentralPotentialSpec spec{Gravitational{G, M}, mass};
    const auto result = radial_eigensolver(spec, hbar, r_max, std::size_t(n_grid), int(n_levels));

    RunSummary s;
    s.experiment = "bohr";
    double worst = 0.0;
    CsvTable csv({"n", "analytic_radius", "analytic_energy", "numeric_energy", "relative_error"});
    for (const auto& lvl : result.levels) {
      worst = std::max(worst, *lvl.relative_error);
      csv.add({(long long)lvl.n, lvl.analytic_radius, lvl.analytic_energy, *lvl.numeric_energy, *lvl.relative_error});
    }
    const double ratio = *result.levels[0].numeric_energy / *result.levels[3].numeric_energy;
    const auto base = analytic_spectrum(spec, hbar, 1).levels.front();
    const auto heavy = analytic_spectrum({Gravitational{G, M}, factor * mass}, hbar, 1).levels.front();
    const double energy_scaling = heavy.analytic_energy / base.analytic_energy / std::pow(factor, 3);
    const double radius_scaling = heavy.analytic_radius / base.analytic_radius * std::pow(factor, 2);

    s.criteria.push_back(check("max_eigenvalue_relative_error", worst, "<=", tol.eigen));
    s.criteria.push_back(check("ground_to_fourth_ratio_deviation", std::abs(ratio / 16.0 - 1.0), "<=", tol.ratio));
    s.criteria.push_back(check("energy_mass_cubed_deviation", std::abs(energy_scaling - 1.0), "<=", tol.scaling));
    s.criteria.push_back(check("radius_inverse_mass_squared_deviation", std::abs(radius_scaling - 1.0), "<=",
                               tol.scaling));
    s.measurements = {{"ground_to_fourth_ratio", ratio}, {"mass_factor", factor}};
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"bohr", r.echo(), run};
}

// ------------------------------------------------------------- correspondence

inline PreparedRun prepare_correspondence(const json& cfg) {
  ConfigReader r(cfg, "correspondence");
  detail::require_natural_units(r);
  const double mass = r.positive("mass", 1.0);
  const double omega0 = r.positive("omega0", 1.0);
  const auto harmonic_n = r.integer("harmonic_n", 20, 0);
  const auto grav_n = r.integer("gravitational_n", 40, 1);
  const auto K = r.integer("K", 2, 2);
  const auto ell_max = r.integer("ell_max", 2, 1);
  const auto sequence = r.integers("convergence_sequence", {10, 20, 40}, 1);
  struct Tol {
    double harmonic, classical, pair, harmonic_sequence;
  };
  const Tol tol = r.object<Tol>("tolerances", [](ConfigReader& t) {
    return Tol{t.positive("harmonic_first_harmonic", 0.01), t.positive("gravitational_classical", 0.05),
               t.positive("gravitational_pair", 0.02), t.positive("harmonic_sequence", 1e-4)};
  });
  r.finish();

  auto run = [=] {
    const Well harmonic = HarmonicWell{omega0};
    const Well grav = CentralCoupling{Gravitational{1.0, 1.0}};
    RunSummary s;
    s.experiment = "correspondence";
    CsvTable csv({"case", "mass", "n", "ell", "bra", "ket", "matrix_element", "classical_coefficient",
                  "relative_difference"});
    auto emit = [&](const std::string& label, const CorrespondenceTable& t) {
      for (const auto& row : t.rows) {
        csv.add({label, t.K * t.mass, (long long)t.n, (long long)row.ell, (long long)row.bra, (long long)row.ket,
                 row.matrix_element, row.classical_coefficient, row.relative_difference});
      }
    };

    const auto ho = correspondence_check(harmonic, mass, int(harmonic_n), 1);
    emit("harmonic", ho);
    s.criteria.push_back(check("harmonic_first_harmonic_relative", ho.rows[1].relative_difference, "<=", tol.harmonic));

    const auto light = correspondence_check(grav, mass, int(grav_n), int(ell_max));
    const auto heavy = correspondence_check(grav, mass, int(grav_n), int(ell_max), {.K = int(K)});
    const auto heavy_unscaled =
        correspondence_check(grav, mass, int(grav_n), int(ell_max), {.K = int(K), .scaling = IndexScaling::Unscaled});
    emit("gravitational", light);
    emit("gravitational_K_scaled_indices", heavy);
    emit("gravitational_K_unscaled_indices", heavy_unscaled);
    for (int ell = 0; ell <= ell_max; ++ell) {
      const auto& a = light.rows[std::size_t(ell)];
      const auto& b = heavy.rows[std::size_t(ell)];
      const std::string tag = "_ell" + std::to_string(ell);
      s.criteria.push_back(check("gravitational_vs_classical" + tag, a.relative_difference, "<=", tol.classical));
      s.criteria.push_back(check("gravitational_K_scaled_vs_classical" + tag, b.relative_difference, "<=", tol.classical));
      const double pair = std::abs(std::abs(a.matrix_element) - std::abs(b.matrix_element)) / std::abs(a.matrix_element);
      s.criteria.push_back(check("gravitational_pair_agreement" + tag, pair, "<=", tol.pair));
      s.measurements["unscaled_index_relative" + tag] = heavy_unscaled.rows[std::size_t(ell)].relative_difference;
    }

    std::vector<double> grav_err, ho_err;
    for (auto n : sequence) {
      const auto g = correspondence_check(grav, mass, int(n), 1);
      const auto h = correspondence_check(harmonic, mass, int(n), 1);
      emit("gravitational_sequence", g);
      emit("harmonic_sequence", h);
      grav_err.push_back(g.rows[1].relative_difference);
      ho_err.push_back(h.rows[1].relative_difference);
    }
    double worst_ratio = 0.0;
    for (std::size_t i = 1; i < grav_err.size(); ++i) worst_ratio = std::max(worst_ratio, grav_err[i] / grav_err[i - 1]);
    s.criteria.push_back(check("gravitational_sequence_max_error_ratio", worst_ratio, "<", 1.0));
    s.criteria.push_back(check("harmonic_sequence_max_relative",
                               *std::max_element(ho_err.begin(), ho_err.end()), "<=", tol.harmonic_sequence));
    s.measurements["gravitational_sequence_errors"] = grav_err;
    s.measurements["harmonic_sequence_errors"] = ho_err;
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"correspondence", r.echo(), run};
}

// -------------------------------------------------------------------- scaling

inline PreparedRun prepare_scaling(const json& cfg) {
  ConfigReader r(cfg, "scaling");
  detail::require_natural_units(r);
  const double mass = r.positive("mass", 1.0);
  const auto action_levels = r.integers("action_levels", {5, 6, 8, 10, 20, 50}, 1);
  const auto factors = r.integers("K_values", {2, 3, 5}, 2);
  const auto levels = r.integers("n_values", {1, 5, 10}, 1);
  const auto numeric_K = r.integer("numeric_K", 3, 2);
  const auto numeric_n = r.integer("numeric_n", 5, 1);
  struct Tol {
    double p_action, v_analytic, ratio, v_numeric;
  };
  const Tol tol = r.object<Tol>("tolerances", [](ConfigReader& t) {
    return Tol{t.positive("p_action_relative", 5e-3), t.positive("v_action_analytic", 1e-9),
               t.positive("p_action_ratio", 1e-9), t.positive("v_action_numeric", 1e-2)};
  });
  r.finish();

  auto run = [=] {
    const CentralCoupling grav = Gravitational{1.0, 1.0};
    const CentralPotentialSpec spec{grav, mass};
    RunSummary s;
    s.experiment = "scaling";
    CsvTable csv({"case", "K", "n", "energy_1", "energy_2", "value_1", "value_2"});

    double worst_p = 0.0;
    for (auto n : action_levels) {
      const double E = bohr_energy(spec, scaled::hbar, double(n));
      const auto a = action_integrals(spec, scaled::hbar, E);
      worst_p = std::max(worst_p, std::abs(a.quantum_number - double(n)) / double(n));
      csv.add({std::string("p_action_over_h"), 1LL, (long long)n, E, E, a.quantum_number, a.v_action});
    }
    double worst_v = 0.0, worst_ratio = 0.0;
    for (auto K : factors) {
      for (auto n : levels) {
        const auto c = scaling_check(grav, mass, int(K), int(n));
        worst_v = std::max(worst_v, std::abs(c.v_action_2 - c.v_action_1) / c.v_action_1);
        worst_ratio = std::max(worst_ratio, std::abs(c.p_action_ratio - double(K)) / double(K));
        csv.add({std::string("v_action_analytic"), (long long)K, (long long)n, c.energy_1, c.energy_2, c.v_action_1,
                 c.v_action_2});
      }
    }
    const auto num = scaling_check(grav, mass, int(numeric_K), int(numeric_n), EnergySource::Numeric);
    const double num_dev = std::abs(num.v_action_2 - num.v_action_1) / num.v_action_1;
    csv.add({std::string("v_action_numeric"), (long long)numeric_K, (long long)numeric_n, num.energy_1, num.energy_2,
             num.v_action_1, num.v_action_2});

    s.criteria.push_back(check("p_action_max_relative_deviation", worst_p, "<=", tol.p_action));
    s.criteria.push_back(check("v_action_analytic_max_relative_deviation", worst_v, "<=", tol.v_analytic));
    s.criteria.push_back(check("p_action_ratio_max_relative_deviation", worst_ratio, "<=", tol.ratio));
    s.criteria.push_back(check("v_action_numeric_relative_deviation", num_dev, "<=", tol.v_numeric));
    s.measurements = {{"numeric_p_action_ratio", num.p_action_ratio}};
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"scaling", r.echo(), run};
}

// -------------------------------------------------------------------- spacing

inline PreparedRun prepare_spacing(const json& cfg) {
  ConfigReader r(cfg, "spacing");
  detail::require_natural_units(r);
  const double mass = r.positive("mass", 1.0);
  const double omega0 = r.positive("omega0", 1.0);
  const auto grav_levels = r.integers("gravitational_n", {10, 30, 100}, 1);
  const auto harmonic_levels = r.integers("harmonic_n", {0, 1, 5, 10, 20, 50}, 0);
  const auto ells = r.integers("ell_values", {1, 2}, 1);
  struct Tol {
    double grav, harmonic;
  };
  const Tol tol = r.object<Tol>("tolerances", [](ConfigReader& t) {
    return Tol{t.positive("gravitational_gap", 0.02), t.positive("harmonic_gap", 1e-6)};
  });
  r.finish();

  auto run = [=] {
    const Well grav = CentralCoupling{Gravitational{1.0, 1.0}};
    const Well harmonic = HarmonicWell{omega0};
    RunSummary s;
    s.experiment = "spacing";
    CsvTable csv({"well", "n", "ell", "delta_E", "ell_hbar_omega", "relative_gap"});
    double worst_final = 0.0, worst_step = 0.0, worst_harmonic = 0.0;
    for (auto ell : ells) {
      std::vector<double> gaps;
      for (auto n : grav_levels) {
        const auto c = level_spacing_check(grav, mass, int(n), int(ell));
        gaps.push_back(c.relative_gap);
        csv.add({std::string("gravitational"), (long long)n, (long long)ell, c.delta_E, c.ell_hbar_omega, c.relative_gap});
      }
      worst_final = std::max(worst_final, gaps.back());
      for (std::size_t i = 1; i < gaps.size(); ++i) worst_step = std::max(worst_step, gaps[i] / gaps[i - 1]);
      for (auto n : harmonic_levels) {
        const auto c = level_spacing_check(harmonic, mass, int(n), int(ell));
        worst_harmonic = std::max(worst_harmonic, c.relative_gap);
        csv.add({std::string("harmonic"), (long long)n, (long long)ell, c.delta_E, c.ell_hbar_omega, c.relative_gap});
      }
    }
    s.criteria.push_back(check("gravitational_gap_at_largest_n", worst_final, "<=", tol.grav));
    s.criteria.push_back(check("gravitational_gap_max_successive_ratio", worst_step, "<", 1.0));
    s.criteria.push_back(check("harmonic_max_gap", worst_harmonic, "<=", tol.harmonic));
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"spacing", r.echo(), run};
}

// ------------------------------------------------------------------ estimates

inline PreparedRun prepare_estimates(const json& cfg) {
  ConfigReader r(cfg, "estimates");
  const auto unit = r.text("unit_system", "cgs", {"si", "cgs", "natural"});
  const double max_gap = r.object<double>("tolerances", [](ConfigReader& t) {
    return t.positive("log10_gap", 3.0);
  });
  r.finish();

  auto run = [=] {
    const ConstantsSet k = unit == "si" ? si_constants() : unit == "cgs" ? cgs_constants() : natural_constants();
    RunSummary s;
    s.experiment = "estimates";
    CsvTable csv({"name", "formula", "value", "units", "quoted", "log10_discrepancy"});
    for (const auto& rep : estimate_reports(k)) {
      csv.add({rep.name, rep.formula, rep.value, rep.units,
               rep.quoted ? CsvTable::Cell(*rep.quoted) : CsvTable::Cell(std::string()),
               rep.log10_discrepancy ? CsvTable::Cell(*rep.log10_discrepancy) : CsvTable::Cell(std::string())});
      if (rep.log10_discrepancy) {
        s.criteria.push_back(check(rep.name + "_log10_gap", *rep.log10_discrepancy, "<=", max_gap));
      }
      s.measurements[rep.name] = rep.value;
    }
    s.measurements["unit_system"] = std::string(to_string(k.unit_system));
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"estimates", r.echo(), run};
}

// --------------------------------------------------------------------- packet

inline PreparedRun prepare_packet(const json& cfg) {
  ConfigReader r(cfg, "packet");
  detail::require_natural_units(r);
  const auto points = r.integer("grid_points", 1024, 16);
  const double x_min = r.number("x_min", -40.0);
  const double x_max = r.number("x_max", 40.0);
  const double width = r.positive("packet_width", 1.0);
  const double duration = r.positive("duration", 2.0);
  const double dt = r.positive("dt", 1e-3);
  const double g = r.number("g", 1.0);
  const double v0 = r.number("v0", 0.0);
  const double light = r.positive("mass_1", 1.0);
  const double heavy = r.positive("mass_2", 2.0);
  const auto norm_steps = r.integer("norm_steps", 10000, 1);
  const double norm_dt = r.positive("norm_dt", 1e-4);
  const auto trace_every = r.integer("trace_every", 100, 1);
  struct Tol {
    double uncertainty, spreading, mean_agreement, spread_difference, norm_drift, mass_inference;
  };
  const Tol tol = r.object<Tol>("tolerances", [](ConfigReader& t) {
    return Tol{t.positive("uncertainty_product", 1e-6), t.positive("free_spreading", 1e-6),
               t.positive("mean_position_agreement", 1e-8), t.positive("spread_difference_min", 0.01),
               t.positive("norm_drift", 1e-12), t.positive("mass_inference", 1e-6)};
  });
  r.finish();
  if (!(x_max > x_min)) r.fail("x_max must exceed x_min");

  auto run = [=] {
    const SpatialGrid grid(x_min, x_max, std::size_t(points));
    const std::size_t n = detail::step_count(duration, dt);
    RunSummary s;
    s.experiment = "packet";

    const auto free0 = gaussian_packet(grid, 0.0, 0.0, width, light);
    const auto o0 = observables(free0);
    const double product = o0.spread_x * o0.spread_p / (0.5 * scaled::hbar);
    const auto free_run = propagate(free0, potential::Free{}, dt, n);
    const double t_end = free_run.final_state.time();
    const double expected = std::sqrt(width * width + std::pow(scaled::hbar * t_end / (2.0 * light * width), 2));
    const double spreading = std::abs(observables(free_run.final_state).spread_x / expected - 1.0);

    auto fall = [&](double m) {
      return propagate(gaussian_packet(grid, 0.0, m * v0, width, m), potential::UniformGravity{g}, dt, n,
                       std::size_t(trace_every));
    };
    const auto a = fall(light);
    const auto b = fall(heavy);
    double mean_gap = 0.0;
    CsvTable csv({"time", "mean_x_mass_1", "mean_x_mass_2", "spread_x_mass_1", "spread_x_mass_2"});
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      const auto& oa = a.trace[i].observables;
      const auto& ob = b.trace[i].observables;
      mean_gap = std::max(mean_gap, std::abs(oa.mean_x - ob.mean_x));
      csv.add({a.trace[i].time, oa.mean_x, ob.mean_x, oa.spread_x, ob.spread_x});
    }
    const double sa = a.trace.back().observables.spread_x;
    const double sb = b.trace.back().observables.spread_x;
    const double spread_diff = std::abs(sa - sb) / std::min(sa, sb);

    const auto long_run = propagate(free0, potential::UniformGravity{g}, norm_dt, std::size_t(norm_steps));
    const double drift_per_1e4 = long_run.norm_drift * 1e4 / double(norm_steps);

    const auto probe = gaussian_packet(grid, 0.0, 0.0, width, heavy);
    const auto op = observables(probe);
    const double inferred = mass_from_velocity_spread(op.spread_x, op.spread_v, scaled::hbar);

    s.criteria.push_back(check("uncertainty_product_excess", std::abs(product - 1.0), "<=", tol.uncertainty));
    s.criteria.push_back(check("free_spreading_relative_error", spreading, "<=", tol.spreading));
    s.criteria.push_back(check("mean_position_max_difference", mean_gap, "<=", tol.mean_agreement));
    s.criteria.push_back(check("final_spread_relative_difference", spread_diff, ">", tol.spread_difference));
    s.criteria.push_back(check("norm_drift_per_1e4_steps", drift_per_1e4, "<=", tol.norm_drift));
    s.criteria.push_back(check("inferred_mass_relative_error", std::abs(inferred / heavy - 1.0), "<=", tol.mass_inference));
    s.measurements = {{"spread_x_final_mass_1", sa}, {"spread_x_final_mass_2", sb}, {"inferred_mass", inferred}};
    return ExperimentOutput{std::move(s), std::move(csv)};
  };
  return {"packet", r.echo(), run};
}

// ------------------------------------------------------------------- registry

using Preparer = PreparedRun (*)(const json&);

inline const std::vector<std::pair<std::string, Preparer>>& experiments() {
  static const std::vector<std::pair<std::string, Preparer>> table{
      {"equivalence", prepare_equivalence}, {"bohr", prepare_bohr},       {"correspondence", prepare_correspondence},
      {"scaling", prepare_scaling},         {"spacing", prepare_spacing}, {"estimates", prepare_estimates},
      {"packet", prepare_packet}};
  return table;
}

inline Preparer find_experiment(const std::string& name) {
  for (const auto& [n, p] : experiments()) {
    if (n == name) return p;
  }
  return nullptr;
}

}  // namespace eqlab::harness
