#include "muskat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "muskat/bump.hpp"
#include "muskat/errors.hpp"
#include "muskat/numfmt.hpp"
#include "muskat/rhs.hpp"
#include "muskat/spectral.hpp"

namespace muskat {

namespace {

// (1/pi) int_{|alpha| <= A} dx(slope_alpha f) dalpha by graded panels plus
// the Taylor cell (limit value f_xx), mirroring the nonlinear reduction.
Field linear_quadrature(const Field& f, double trunc_a) {
  const Grid& g = f.grid();
  const QuadratureSpec quad = QuadratureSpec::dyadic(g.dx() / 4.0, trunc_a);
  const Field fx = derivative(f);
  RealArray acc = RealArray::Zero(g.n_modes());
  for (const QuadNode& node : quad.half_nodes) {
    for (const double sign : {1.0, -1.0}) {
      acc += node.weight * slope_field(fx, sign * node.alpha).samples();
    }
  }
  acc += 2.0 * quad.delta0 * derivative(f, 2).samples();
  acc *= 1.0 / EIGEN_PI;
  return Field::from_samples(g, std::move(acc));
}

double hdot_half_distance(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw ConfigError("field grids differ");
  const Field diff =
      Field::from_samples(a.grid(), a.samples() - b.samples());
  return sobolev_norm(diff, 0.5);
}

void require_reports(const std::vector<EnergyReport>& reports, std::size_t n,
                     const char* who) {
  if (reports.size() < n) {
    throw ConfigError(std::string(who) + ": too few reports (need >= " +
                      std::to_string(n) + ")");
  }
}

}  // namespace

CheckResult check_linear_identity(const Field& f,
                                  const std::vector<double>& a_values,
                                  double tol) {
  if (a_values.empty()) throw ConfigError("check_linear_identity: empty A list");
  CheckResult r;
  r.name = "linear_identity";
  r.tolerance = tol;

  const Field lin = apply_multiplier(f, SymbolSpec::abs_power(1.0));  // |D|f
  const double denom = l2_norm(lin);
  std::vector<double> residuals;
  for (double a : a_values) {
    const Field q = linear_quadrature(f, a);
    const Field sum = Field::from_samples(f.grid(), q.samples() + lin.samples());
    const double res = denom > 0.0 ? l2_norm(sum) / denom : l2_norm(sum);
    residuals.push_back(res);
    r.measured["residual_A_" + format_double(a)] = res;
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    if (residuals[i] >= residuals[i - 1] && residuals[i - 1] > 0.0) {
      decreasing = false;
    }
  }
  r.measured["residual_final"] = residuals.back();
  r.pass = residuals.back() <= tol && decreasing;
  r.detail = decreasing ? "residual decreasing in A"
                        : "residual not monotone in A";
  return r;
}

CheckResult check_l2_dissipation(const Trajectory& traj, double tol) {
  require_reports(traj.reports, 3, "check_l2_dissipation");
  CheckResult r;
  r.name = "l2_dissipation";
  r.tolerance = tol;

  double worst = 0.0;
  const auto& rep = traj.reports;
  for (std::size_t i = 1; i + 1 < rep.size(); ++i) {
    const double dt2 = rep[i + 1].t - rep[i - 1].t;
    if (!(dt2 > 0.0)) throw ConfigError("check_l2_dissipation: nonmonotone times");
    const double dhalf_l2sq =
        (0.5 * rep[i + 1].l2 * rep[i + 1].l2 - 0.5 * rep[i - 1].l2 * rep[i - 1].l2) /
        dt2;
    const double rhs = -rep[i].log_energy / EIGEN_PI;
    const double scale = std::max(std::abs(rhs), 1e-300);
    const double resid = std::abs(dhalf_l2sq - rhs);
    const double rel = (resid <= 1e-16) ? 0.0 : resid / scale;
    worst = std::max(worst, rel);
  }
  r.measured["max_relative_residual"] = worst;
  r.pass = worst <= tol;
  return r;
}

CheckResult check_scaling(const Field& f0, double lambda, double t_end,
                          double dt0, double cadence,
                          const QuadratureSpec& quad_coarse, double tol) {
  if (!(lambda == 1.0 || lambda == 2.0 || lambda == 4.0)) {
    throw ConfigError("check_scaling: lambda must be 1, 2, or 4");
  }
  CheckResult r;
  r.name = "scaling_commutation";
  r.tolerance = tol;

  const Grid& ga = f0.grid();
  const Grid gb = Grid::make(ga.length() / lambda, ga.n_modes());
  // f_lambda(x) = f0(lambda x)/lambda: the collocation nodes of the scaled
  // grid map onto those of the original, so the samples just rescale.
  const Field fb0 = Field::from_samples(gb, f0.samples() / lambda);

  r.measured["lip_f0"] = lipschitz_seminorm(f0);
  r.measured["lip_f_lambda"] = lipschitz_seminorm(fb0);

  EvolveOptions oa;
  oa.fixed_dt = dt0;
  oa.cadence = lambda * cadence;
  oa.snapshot_cadence = lambda * cadence;
  EvolveOptions ob = oa;
  ob.cadence = cadence;
  ob.snapshot_cadence = cadence;

  const QuadratureSpec quad_b = QuadratureSpec::dyadic(
      quad_coarse.delta0 / lambda, quad_coarse.trunc_A / lambda,
      quad_coarse.gauss_order);

  const Trajectory ta =
      evolve(f0, lambda * t_end, RegularizationParams::off(), quad_coarse, oa);
  const Trajectory tb =
      evolve(fb0, t_end, RegularizationParams::off(), quad_b, ob);
  if (ta.final_status != SolverStatus::finished ||
      tb.final_status != SolverStatus::finished) {
    r.vacuous = true;
    r.detail = "a run halted before T_end";
    return r;
  }

  const std::size_t n = std::min(ta.snapshots.size(), tb.snapshots.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // Compare f_lambda(T_i) against lambda^{-1} f(lambda T_i, lambda .),
    // which lives on the scaled grid with the identical sample rescaling.
    const Field ref =
        Field::from_samples(gb, ta.snapshots[i].second.samples() / lambda);
    const double d = hdot_half_distance(tb.snapshots[i].second, ref);
    const double base = sobolev_norm(ref, 0.5);
    worst = std::max(worst, base > 0.0 ? d / base : d);
  }
  r.measured["sup_relative_hhalf_discrepancy"] = worst;
  r.pass = worst <= tol;
  return r;
}

CheckResult check_lipschitz_budget(const std::vector<EnergyReport>& reports,
                                   double eps, double beta,
                                   const ConstantSet& constants,
                                   double slack) {
  require_reports(reports, 3, "check_lipschitz_budget");
  CheckResult r;
  r.name = "lipschitz_budget";
  r.tolerance = slack;

  double fitted = 1.0;
  bool all_pass = true;
  const double epsb = eps > 0.0 ? std::pow(eps, beta) : 0.0;
  for (std::size_t i = 1; i + 1 < reports.size(); ++i) {
    const double dt2 = reports[i + 1].t - reports[i - 1].t;
    const double dlip = (reports[i + 1].lip - reports[i - 1].lip) / dt2;
    const double h2 = reports[i].hs.at(2.0);
    const double budget = h2 * h2 + epsb * reports[i].holder_c2beta;
    if (budget > 0.0 && dlip > 0.0) {
      fitted = std::max(fitted, dlip / budget);
    }
    if (dlip > constants.c0 * budget + slack) all_pass = false;
  }
  r.fitted["C0"] = fitted;
  r.measured["C0_used"] = constants.c0;
  r.pass = all_pass;
  return r;
}

CheckResult check_energy_inequality(const std::vector<EnergyReport>& reports,
                                    const ConstantSet& constants) {
  require_reports(reports, 3, "check_energy_inequality");
  CheckResult r;
  r.name = "energy_inequality";
  r.tolerance = 1e-10;

  double fitted = 0.0;
  bool all_pass = true;
  for (std::size_t i = 1; i + 1 < reports.size(); ++i) {
    const double dt2 = reports[i + 1].t - reports[i - 1].t;
    const double da = (reports[i + 1].a_phi - reports[i - 1].a_phi) / dt2;
    const EnergyReport& m = reports[i];
    const double lhs = da + constants.c1 * m.b_phi / (1.0 + m.lip * m.lip);
    const double rhs_base =
        (std::sqrt(m.a_phi) + m.a_phi) * m.mu_phi * m.b_phi;
    if (rhs_base > 0.0 && lhs > 0.0) {
      fitted = std::max(fitted, lhs / rhs_base);
    }
    if (lhs > constants.c2 * rhs_base + 1e-10) all_pass = false;
  }
  r.fitted["C2"] = fitted;
  r.measured["C1_used"] = constants.c1;
  r.measured["C2_used"] = constants.c2;
  r.pass = all_pass;
  return r;
}

CheckResult check_contraction(const Field& f1_0, const Field& f2_0,
                              double t_end, double m_bound,
                              const QuadratureSpec& quad,
                              const EvolveOptions& opts) {
  CheckResult r;
  r.name = "contraction";
  r.tolerance = 1e-10;

  EvolveOptions o = opts;
  if (o.snapshot_cadence <= 0.0) o.snapshot_cadence = o.cadence;
  const Trajectory t1 =
      evolve(f1_0, t_end, RegularizationParams::off(), quad, o);
  const Trajectory t2 =
      evolve(f2_0, t_end, RegularizationParams::off(), quad, o);
  if (t1.final_status != SolverStatus::finished ||
      t2.final_status != SolverStatus::finished) {
    r.vacuous = true;
    r.detail = "a run halted before T_end";
    return r;
  }

  const std::size_t n = std::min(t1.snapshots.size(), t2.snapshots.size());
  if (n < 2) throw ConfigError("check_contraction: too few snapshots");

  double sup_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sup_m = std::max(sup_m, sobolev_norm_inhom(t1.snapshots[i].second, 1.5));
    sup_m = std::max(sup_m, sobolev_norm_inhom(t2.snapshots[i].second, 1.5));
  }
  r.measured["sup_H32"] = sup_m;
  if (sup_m > m_bound) {
    r.vacuous = true;
    r.detail = "norm bound M violated along a trajectory";
    return r;
  }

  const double g0 = hdot_half_distance(t1.snapshots[0].second,
                                       t2.snapshots[0].second);
  const double scale0 = sobolev_norm(t1.snapshots[0].second, 0.5);

  if (g0 <= 1e-14 * std::max(scale0, 1.0)) {
    // Identical data: uniqueness demands the difference stays at noise level.
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double gi = hdot_half_distance(t1.snapshots[i].second,
                                           t2.snapshots[i].second);
      const double fi = sobolev_norm(t1.snapshots[i].second, 0.5);
      const double rel = fi > 0.0 ? gi / fi : gi;
      worst = std::max(worst, rel);
      if (rel > 1e-10) ok = false;
    }
    r.measured["sup_relative_difference"] = worst;
    r.pass = ok;
    r.detail = ok ? "identical data stay identical" : "uniqueness violation";
    return r;
  }

  // Gronwall fit: accumulated int (||f1||^2 + ||f2||^2)_{Hdot^2} by trapezoid.
  const double mp5 = std::pow(m_bound + 1.0, 5.0);
  double integral = 0.0;
  double c_fit = 0.0;
  double prev_h = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double h1 = sobolev_norm(t1.snapshots[i].second, 2.0);
    const double h2 = sobolev_norm(t2.snapshots[i].second, 2.0);
    const double h = h1 * h1 + h2 * h2;
    if (i > 0) {
      const double dt = t1.snapshots[i].first - t1.snapshots[i - 1].first;
      integral += 0.5 * dt * (h + prev_h);
      const double gi = hdot_half_distance(t1.snapshots[i].second,
                                           t2.snapshots[i].second);
      if (gi > 0.0 && integral > 0.0) {
        const double growth = std::log(gi) - std::log(g0);
        if (growth > 0.0) c_fit = std::max(c_fit, growth / (mp5 * integral));
      }
    }
    prev_h = h;
  }
  r.fitted["C_gronwall"] = c_fit;
  r.measured["g0"] = g0;
  r.pass = std::isfinite(c_fit);
  return r;
}

CheckResult eps_convergence(const Field& f0, const std::vector<double>& eps_list,
                            double t_end, const QuadratureSpec& quad,
                            const EvolveOptions& opts, double min_rate) {
  if (eps_list.size() < 3) {
    throw ConfigError("eps_convergence: need at least 3 epsilon values");
  }
  CheckResult r;
  r.name = "eps_convergence";
  r.tolerance = min_rate;

  EvolveOptions o = opts;
  if (o.snapshot_cadence <= 0.0) o.snapshot_cadence = o.cadence;

  std::vector<Trajectory> runs;
  std::vector<bool> ok;
  for (double eps : eps_list) {
    const RegularizationParams params =
        RegularizationParams::with_eps(eps, o.beta);
    const Field data = mollify_initial(f0, eps);
    Trajectory t = evolve(data, t_end, params, quad, o);
    ok.push_back(t.final_status == SolverStatus::finished);
    if (!ok.back()) {
      r.detail += "run eps=" + format_double(eps) + " halted (" +
                  to_string(t.final_status) + "); ";
    }
    runs.push_back(std::move(t));
  }

  std::vector<double> dists;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    if (!ok[i] || !ok[i + 1]) {
      dists.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const std::size_t n =
        std::min(runs[i].snapshots.size(), runs[i + 1].snapshots.size());
    double d = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      d = std::max(d, hdot_half_distance(runs[i].snapshots[j].second,
                                         runs[i + 1].snapshots[j].second));
    }
    dists.push_back(d);
    r.measured["d_" + std::to_string(i)] = d;
  }

  bool decreasing = true;
  double rate_sum = 0.0;
  int rate_count = 0;
  for (std::size_t i = 0; i + 1 < dists.size(); ++i) {
    if (std::isnan(dists[i]) || std::isnan(dists[i + 1])) continue;
    if (!(dists[i + 1] < dists[i])) decreasing = false;
    if (dists[i + 1] > 0.0) {
      const double denom =
          std::log2(eps_list[i] / eps_list[i + 1]);  // 1 for a halving list
      rate_sum += std::log2(dists[i] / dists[i + 1]) / denom;
      ++rate_count;
    }
  }
  if (rate_count == 0) {
    r.vacuous = true;
    r.detail += "no usable distance pairs";
    return r;
  }
  const double rate = rate_sum / rate_count;
  r.measured["empirical_rate"] = rate;
  r.pass = decreasing && rate >= min_rate;
  if (!decreasing) r.detail += "distances not strictly decreasing; ";
  return r;
}

ConstantSet calibrate_constants(const std::vector<Field>& corpus, double eps,
                                double t_end, const QuadratureSpec& quad,
                                const EvolveOptions& opts) {
  if (corpus.empty()) throw ConfigError("calibrate_constants: empty corpus");
  double c0 = 1.0;
  double c2 = 0.0;
  ConstantSet probe;  // C0 = C1 = C2 = 1 while fitting
  for (const Field& f0 : corpus) {
    const RegularizationParams params =
        eps > 0.0 ? RegularizationParams::with_eps(eps, opts.beta)
                  : RegularizationParams::off();
    const Field data = eps > 0.0 ? mollify_initial(f0, eps) : f0;
    const Trajectory traj = evolve(data, t_end, params, quad, opts);
    if (traj.final_status != SolverStatus::finished) {
      throw NumericError("calibrate_constants: corpus run halted (" +
                         to_string(traj.final_status) + ")");
    }
    const CheckResult lb =
        check_lipschitz_budget(traj.reports, eps, opts.beta, probe);
    const CheckResult en = check_energy_inequality(traj.reports, probe);
    c0 = std::max(c0, lb.fitted.at("C0"));
    c2 = std::max(c2, en.fitted.at("C2"));
  }
  ConstantSet out;
  out.c0 = std::max(1.0, 2.0 * c0);
  out.c1 = 1.0;
  out.c2 = std::max(1e-6, 2.0 * c2);
  out.provenance = "calibrated";
  return out;
}

bool write_check_report(const std::vector<CheckResult>& results,
                        const std::string& json_path,
                        const std::string& text_path) {
  nlohmann::json arr = nlohmann::json::array();
  bool all_pass = true;
  std::ostringstream text;
  for (const CheckResult& r : results) {
    nlohmann::json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["vacuous"] = r.vacuous;
    j["tolerance"] = r.tolerance;
    j["measured"] = r.measured;
    j["fitted"] = r.fitted;
    j["artifacts"] = r.artifacts;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
    const char* tag = r.vacuous ? "VACUOUS" : (r.pass ? "PASS" : "FAIL");
    text << tag << " " << r.name;
    if (!r.detail.empty()) text << " (" << r.detail << ")";
    text << "\n";
    if (r.counts_as_failure()) all_pass = false;
  }
  {
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot write " + json_path);
    out << arr.dump(2) << "\n";
  }
  {
    std::ofstream out(text_path);
    if (!out) throw IoError("cannot write " + text_path);
    out << text.str();
  }
  return all_pass;
}

}  // namespace muskat
