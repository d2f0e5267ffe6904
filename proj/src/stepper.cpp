#include "muskat/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "muskat/errors.hpp"

namespace muskat {

std::string to_string(SolverStatus s) {
  switch (s) {
    case SolverStatus::running: return "running";
    case SolverStatus::finished: return "finished";
    case SolverStatus::halted_blowup: return "halted_blowup";
    case SolverStatus::halted_resolution: return "halted_resolution";
  }
  return "unknown";
}

namespace {

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2, series near 0.
double phi1(double z) {
  if (std::abs(z) < 1e-5) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
  }
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-4) {
    return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z * (1.0 / 120.0)));
  }
  return (std::expm1(z) - z) / (z * z);
}

// Stiff part T(f)f + R_eps(f); the linear symbol -(nu xi^2 + |xi|) is
// integrated exactly by the semigroup.
Field nonlinear_part(const Field& f, const RegularizationParams& params,
                     const QuadratureSpec& quad, bool dealias) {
  Field out = apply_T(f, f, quad, dealias);
  if (params.enabled()) {
    out = Field::from_samples(
        f.grid(), out.samples() + apply_R_eps(f, params).samples());
  }
  return out;
}

double sigma_of(double xi, double nu) {
  return nu * xi * xi + std::abs(xi);
}

}  // namespace

SolverState step_etd(const SolverState& state, const QuadratureSpec& quad,
                     bool dealias) {
  const Grid& grid = state.f.grid();
  const int n = grid.n_modes();
  const double h = state.dt;
  if (!(h > 0.0)) throw ConfigError("step_etd: dt must be positive");
  const double nu = state.params.nu();

  const Field nf = nonlinear_part(state.f, state.params, quad, dealias);
  const ComplexArray& fk = state.f.spectrum();
  const ComplexArray& nk = nf.spectrum();

  ComplexArray ak(n);
  for (int j = 0; j < n; ++j) {
    const double z = -h * sigma_of(grid.wavenumber(j), nu);
    ak[j] = std::exp(z) * fk[j] + h * phi1(z) * nk[j];
  }
  const Field a = Field::from_spectrum(grid, ak);

  const Field na = nonlinear_part(a, state.params, quad, dealias);
  const ComplexArray& nak = na.spectrum();
  ComplexArray outk(n);
  for (int j = 0; j < n; ++j) {
    const double z = -h * sigma_of(grid.wavenumber(j), nu);
    outk[j] = ak[j] + h * phi2(z) * (nak[j] - nk[j]);
  }

  SolverState next = state;
  next.f = Field::from_spectrum(grid, outk);
  if (!next.f.all_finite()) throw NumericError("step_etd: non-finite state");
  next.t = state.t + h;
  next.step_count = state.step_count + 1;
  return next;
}

SolverStatus blowup_guard(const SolverState& state, const GuardConfig& cfg) {
  if (!state.f.all_finite() || lipschitz_seminorm(state.f) > cfg.slope_max) {
    return SolverStatus::halted_blowup;
  }
  // Spectral mass fraction carried by the top octave |k| in (N/4, N/2].
  const Grid& g = state.f.grid();
  const ComplexArray& c = state.f.spectrum();
  double total = 0.0;
  double top = 0.0;
  for (int j = 0; j < g.n_modes(); ++j) {
    const int k = g.mode_index(j);
    if (k == 0) continue;
    const double m = std::norm(c[j]);
    total += m;
    if (std::abs(k) > g.n_modes() / 4) top += m;
  }
  if (total > 0.0 && top / total > cfg.tail_max) {
    return SolverStatus::halted_resolution;
  }
  return SolverStatus::running;
}

namespace {

// One accepted step with step-doubling control. Mutates state in place;
// never steps past t_cap. Returns false when dt underflows.
bool advance(SolverState& state, double t_cap, const QuadratureSpec& quad,
             const EvolveOptions& opts) {
  if (opts.fixed_dt > 0.0) {
    state.dt = std::min(opts.fixed_dt, t_cap - state.t);
    state = step_etd(state, quad, opts.dealias);
    state.dt = opts.fixed_dt;
    return true;
  }
  double dt = std::min(state.dt, t_cap - state.t);
  while (true) {
    SolverState big = state;
    big.dt = dt;
    const SolverState one = step_etd(big, quad, opts.dealias);

    SolverState half = state;
    half.dt = dt / 2.0;
    SolverState two = step_etd(half, quad, opts.dealias);
    two.dt = dt / 2.0;
    two = step_etd(two, quad, opts.dealias);

    const double err = std::sqrt(
        (one.f.samples() - two.f.samples()).square().mean());
    if (err <= opts.step_tol) {
      state = two;  // keep the finer result
      state.step_count = one.step_count + 1;
      state.dt = std::min(dt * opts.dt_grow, t_cap > state.t
                                                 ? t_cap - state.t
                                                 : dt * opts.dt_grow);
      state.dt = std::max(state.dt, opts.dt_min);
      return true;
    }
    dt /= 2.0;
    if (dt < opts.dt_min) return false;
  }
}

}  // namespace

Trajectory evolve(const Field& f0, double t_end,
                  const RegularizationParams& params,
                  const QuadratureSpec& quad, const EvolveOptions& opts) {
  if (!(t_end > 0.0)) throw ConfigError("evolve: t_end must be positive");
  if (!(opts.cadence > 0.0)) throw ConfigError("evolve: cadence must be positive");
  check_quadrature(quad, f0.grid());

  Trajectory traj;
  SolverState state(f0, params, opts.dt0);

  auto emit = [&](const SolverState& s, SolverStatus status) {
    EnergyReport r =
        compute_report(s.f, opts.phi, quad, opts.beta, opts.constants);
    r.t = s.t;
    r.dt = s.dt;
    r.status = to_string(status);
    traj.reports.push_back(std::move(r));
  };

  auto maybe_snapshot = [&](const SolverState& s) {
    if (opts.snapshot_cadence <= 0.0) return;
    if (traj.snapshots.empty() ||
        s.t >= traj.snapshots.back().first + opts.snapshot_cadence - 1e-14) {
      traj.snapshots.emplace_back(s.t, s.f);
    }
  };

  emit(state, SolverStatus::running);
  maybe_snapshot(state);

  const double tol = 1e-12;
  long report_idx = 1;
  while (state.t < t_end - tol) {
    const double t_next = std::min(report_idx * opts.cadence, t_end);
    while (state.t < t_next - tol) {
      if (!advance(state, t_next, quad, opts)) {
        state.status = SolverStatus::halted_resolution;
        emit(state, state.status);
        traj.final_status = state.status;
        traj.total_steps = state.step_count;
        return traj;
      }
      const SolverStatus guard = blowup_guard(state, opts.guards);
      if (guard != SolverStatus::running) {
        state.status = guard;
        emit(state, guard);
        traj.final_status = guard;
        traj.total_steps = state.step_count;
        return traj;
      }
    }
    const SolverStatus status = (state.t >= t_end - tol)
                                    ? SolverStatus::finished
                                    : SolverStatus::running;
    emit(state, status);
    maybe_snapshot(state);
    ++report_idx;
  }

  traj.final_status = SolverStatus::finished;
  traj.total_steps = state.step_count;
  return traj;
}

double local_time_horizon(const Field& f0, const PhiWeight& phi,
                          const ConstantSet& constants) {
  const PhiEnergies e0 = energies(f0, phi);
  const double a0 = e0.a_phi;
  if (a0 <= 0.0) return std::numeric_limits<double>::infinity();

  const double lip = lipschitz_seminorm(f0);
  const double m = std::pow(2.0 + lip, 2.0);
  const double r = 4.0 * a0;

  // E(r, m) = sup_rho [ C2 (sqrt(r) + r) rho / phi(rho / r)
  //                     - (C1 / 2) rho / m ] over a geometric grid.
  double sup = 0.0;
  const int per_decade = 64;
  const int decades = 30;  // a slow (log) weight needs a long reach before
                           // it overtakes the linear drain term
  const double lo = r * 1e-6;
  const double ratio = std::pow(10.0, 1.0 / per_decade);
  double rho = lo;
  for (int i = 0; i <= decades * per_decade; ++i, rho *= ratio) {
    const double v = constants.c2 * (std::sqrt(r) + r) * rho / phi(rho / r) -
                     0.5 * constants.c1 * rho / m;
    sup = std::max(sup, v);
  }
  // The supremand grows like rho (1/phi - const); if still increasing at the
  // grid end it is unbounded and no horizon is certified.
  const double end_slope =
      constants.c2 * (std::sqrt(r) + r) / phi(rho / r) - 0.5 * constants.c1 / m;
  if (end_slope > 0.0) return 0.0;
  if (sup <= 0.0) return std::numeric_limits<double>::infinity();
  return a0 / (4.0 * sup);
}

}  // namespace muskat
