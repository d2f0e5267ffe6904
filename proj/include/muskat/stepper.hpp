#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muskat/field.hpp"
#include "muskat/functionals.hpp"
#include "muskat/phi.hpp"
#include "muskat/quadrature.hpp"
#include "muskat/rhs.hpp"

namespace muskat {

enum class SolverStatus { running, finished, halted_blowup, halted_resolution };

std::string to_string(SolverStatus s);

struct GuardConfig {
  double slope_max = 50.0;
  double tail_max = 1e-3;  // top-octave spectral mass fraction
};

struct SolverState {
  SolverState(Field f0, RegularizationParams p, double dt0)
      : f(std::move(f0)), params(std::move(p)), dt(dt0) {}

  double t = 0.0;
  Field f;
  RegularizationParams params;
  double dt;
  long step_count = 0;
  SolverStatus status = SolverStatus::running;
};

struct Trajectory {
  std::vector<EnergyReport> reports;
  std::vector<std::pair<double, Field>> snapshots;
  SolverStatus final_status = SolverStatus::running;
  long total_steps = 0;
};

struct EvolveOptions {
  double dt0 = 1e-3;
  double step_tol = 1e-8;   // step-doubling error target per step
  double dt_min = 1e-12;
  double dt_grow = 1.2;
  double fixed_dt = 0.0;    // > 0: no adaptivity, exact step size
  double cadence = 0.01;    // report interval
  double snapshot_cadence = 0.0;  // 0: no snapshots
  GuardConfig guards;
  PhiWeight phi = phi_one();
  double beta = 0.3;
  ConstantSet constants;
  bool dealias = true;
};

/// One ETD2RK step of size state.dt: exact semigroup for nu xi^2 + |xi|,
/// phi1/phi2-weighted explicit increments for T + R_eps.
SolverState step_etd(const SolverState& state, const QuadratureSpec& quad,
                     bool dealias = true);

/// Guard evaluation on the current state (slope blow-up, spectral
/// under-resolution).
SolverStatus blowup_guard(const SolverState& state, const GuardConfig& cfg);

/// Adaptive evolution to T_end with energy reports at the configured
/// cadence. Guards halt with an explicit status; reports carry it.
Trajectory evolve(const Field& f0, double t_end,
                  const RegularizationParams& params,
                  const QuadratureSpec& quad, const EvolveOptions& opts);

/// Horizon from the envelope functional: sup over a geometric rho-grid of
/// C2 (sqrt(r)+r) rho / phi(rho/r) - (C1/2) rho / m, with
/// m = (2 + lip(f0))^2; returns A(0) / (4 E(4 A(0), m)).
/// Returns 0 when the supremand is unbounded on the grid, +inf for zero data.
double local_time_horizon(const Field& f0, const PhiWeight& phi,
                          const ConstantSet& constants);

}  // namespace muskat
