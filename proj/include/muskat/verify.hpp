#pragma once

#include <map>
#include <string>
#include <vector>

#include "muskat/field.hpp"
#include "muskat/functionals.hpp"
#include "muskat/stepper.hpp"

namespace muskat {

/// Outcome of one executable check. `pass` is a pure function of the
/// measured values against the tolerance; a failed hypothesis marks the
/// result vacuous, never passing.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool vacuous = false;
  double tolerance = 0.0;
  std::map<std::string, double> measured;
  std::map<std::string, double> fitted;
  std::vector<std::string> artifacts;
  std::string detail;

  bool counts_as_failure() const { return !pass && !vacuous; }
};

/// (1/pi) int dx(slope_a f) da truncated at each A against the spectral
/// -|D|f. Asserts the residual at the largest A meets tol and that the
/// residual decreases along A_values (given ascending).
CheckResult check_linear_identity(const Field& f,
                                  const std::vector<double>& a_values,
                                  double tol = 2e-2);

/// Centered-difference d/dt (1/2 ||f||^2) against -(1/pi) log_energy at
/// interior report times of a full-equation (eps off) trajectory.
CheckResult check_l2_dissipation(const Trajectory& traj, double tol = 1e-4);

/// Critical-scaling commutation: runs f0 on (L, N) to lambda*T and
/// f_lambda(x) = f0(lambda x)/lambda on (L/lambda, N) to T, both with the
/// same fixed time step dt0 (the shared step breaks the exact discrete
/// mirror symmetry, leaving a second-order discrepancy that refines
/// cleanly); compares at matched report times in Hdot^{1/2}.
CheckResult check_scaling(const Field& f0, double lambda, double t_end,
                          double dt0, double cadence,
                          const QuadratureSpec& quad_coarse, double tol = 1e-3);

/// Interval-wise slope-budget check
/// d lip/dt <= C0 (||f||_{Hdot^2}^2 + eps^beta * holder) + slack,
/// reporting the smallest passing C0 (floor 1).
CheckResult check_lipschitz_budget(const std::vector<EnergyReport>& reports,
                                   double eps, double beta,
                                   const ConstantSet& constants,
                                   double slack = 1e-10);

/// Interval-wise weighted-energy inequality
/// dA/dt + C1 B/(1+lip^2) <= C2 (sqrt(A)+A) mu B, reporting fitted C2.
CheckResult check_energy_inequality(const std::vector<EnergyReport>& reports,
                                    const ConstantSet& constants);

/// Difference-growth (uniqueness) check: both trajectories must stay under
/// m_bound in H^{3/2}, else vacuous. Fits the Gronwall constant in
/// log||g(t)|| - log||g(0)|| <= C (M+1)^5 int (||f1||^2 + ||f2||^2)_{Hdot^2}.
CheckResult check_contraction(const Field& f1_0, const Field& f2_0,
                              double t_end, double m_bound,
                              const QuadratureSpec& quad,
                              const EvolveOptions& opts);

/// Successive sup-t Hdot^{1/2} distances between the eps- and eps'-solutions
/// over a geometric eps list; asserts the distances decrease and reports the
/// empirical log2 rate.
CheckResult eps_convergence(const Field& f0, const std::vector<double>& eps_list,
                            double t_end, const QuadratureSpec& quad,
                            const EvolveOptions& opts, double min_rate = 0.4);

/// Calibration: max fitted constants over a corpus of regularized runs,
/// times a 2x safety factor, C0 floored at 1. Throws on an empty corpus or
/// any halted run.
ConstantSet calibrate_constants(const std::vector<Field>& corpus, double eps,
                                double t_end, const QuadratureSpec& quad,
                                const EvolveOptions& opts);

/// JSON array of results plus a text summary; returns true iff every
/// non-vacuous check passed.
bool write_check_report(const std::vector<CheckResult>& results,
                        const std::string& json_path,
                        const std::string& text_path);

}  // namespace muskat
