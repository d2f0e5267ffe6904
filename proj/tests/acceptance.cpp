// Acceptance gate: runs the full criteria list end to end, prints one
// PASS/FAIL line per criterion, and exits 0 only if every criterion holds.
// All tolerances and runtime budgets are enforced here, not in the library.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "muskat/bump.hpp"
#include "muskat/io.hpp"
#include "muskat/numfmt.hpp"
#include "muskat/phi.hpp"
#include "muskat/rhs.hpp"
#include "muskat/spectral.hpp"
#include "muskat/stepper.hpp"
#include "muskat/verify.hpp"

using namespace muskat;

namespace {

constexpr double kPi = std::numbers::pi;

std::string g_outdir;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> artifacts;
};

using Rows = std::vector<std::pair<std::string, double>>;

std::string write_kv_csv(const std::string& stem, const std::string& tag,
                         const Rows& rows) {
  const std::string path = g_outdir + "/" + stem + "_" + tag + ".csv";
  std::ofstream out(path);
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << k << ',' << format_double(v) << '\n';
  return path;
}

std::string write_traj_csv(const std::string& stem, const std::string& tag,
                           const std::vector<EnergyReport>& reports) {
  const std::string path = g_outdir + "/" + stem + "_" + tag + ".csv";
  write_trajectory_csv(reports, path);
  return path;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

Field make_sine(const Grid& g, double amplitude, int wave) {
  RealArray s(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) {
    s[j] = amplitude * std::sin(wave * g.node(j) * 2.0 * kPi / g.length());
  }
  return Field::from_samples(g, std::move(s));
}

Field make_mix(const Grid& g, double amplitude) {
  RealArray s(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) {
    const double x = g.node(j);
    s[j] = amplitude * (std::sin(x) + 0.5 * std::cos(2.0 * x) +
                        0.25 * std::sin(5.0 * x + 0.3));
  }
  return Field::from_samples(g, std::move(s));
}

// Random band-limited field with |c_k| ~ k^{-decay}, H^{3/2}-normalized.
Field random_field(const Grid& g, int band_hi, double decay, unsigned seed,
                   double h32_target) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> mag(0.5, 1.0);
  const int n = g.n_modes();
  ComplexArray spec = ComplexArray::Zero(n);
  for (int k = 1; k <= band_hi; ++k) {
    const double r = mag(rng) * std::pow(double(k), -decay);
    const double ph = phase(rng);
    const std::complex<double> c =
        0.5 * r * std::complex<double>(std::cos(ph), std::sin(ph));
    spec[k] = c;
    spec[n - k] = std::conj(c);
  }
  Field raw = Field::from_spectrum(g, spec);
  const double h32 = sobolev_norm(raw, 1.5);
  return Field::from_samples(g, raw.samples() * (h32_target / h32));
}

QuadratureSpec default_quad(const Grid& g) {
  return QuadratureSpec::dyadic(g.dx() / 4.0, g.length() / 2.0);
}

// ---------------------------------------------------------------------------
// 1. Linear identity: (1/pi) int dx(slope_a f) da -> -|D|f as A grows.
Outcome crit1(const std::string& tag) {
  const Grid g = Grid::make(64.0 * kPi, 4096);
  const Field f = make_sine(g, 1.0, 3 * 32);  // sin(3x) on L = 64 pi
  const double l = g.length();
  const CheckResult r =
      check_linear_identity(f, {l / 8.0, l / 4.0, l / 2.0}, 2e-2);
  Outcome o;
  o.pass = r.pass;
  o.detail = "residual " + fmt(r.measured.at("residual_final")) +
             (r.pass ? ", decreasing in A" : ", " + r.detail);
  Rows rows(r.measured.begin(), r.measured.end());
  o.artifacts.push_back(write_kv_csv("crit01", tag, rows));
  return o;
}

// ---------------------------------------------------------------------------
// 2. apply_T against an independent dense-trapezoid alpha-integration.
RealArray t_oracle(const Field& f, double trunc_a, int n_nodes) {
  const Grid& grid = f.grid();
  const Field gx = derivative(f);
  const RealArray fx = derivative(f).samples();
  const RealArray gxx = derivative(f, 2).samples();
  const double h = 2.0 * trunc_a / (n_nodes - 1);
  RealArray acc = RealArray::Zero(grid.n_modes());
  for (int i = 0; i < n_nodes; ++i) {
    const double alpha = -trunc_a + i * h;
    RealArray term(grid.n_modes());
    if (std::abs(alpha) < 1e-12) {
      term = gxx * fx.square() / (1.0 + fx.square());
    } else {
      const RealArray sf = slope_field(f, alpha).samples();
      const RealArray sg = slope_field(gx, alpha).samples();
      term = sg * sf.square() / (1.0 + sf.square());
    }
    const double w = (i == 0 || i == n_nodes - 1) ? 0.5 * h : h;
    acc += w * term;
  }
  return (-1.0 / kPi) * acc;
}

Outcome crit2(const std::string& tag) {
  const Grid g = Grid::make(2.0 * kPi, 512);
  // delta0 = dx/16: the Taylor-cell error is O(delta0^3) and must sit below
  // the 1e-6 agreement bound for the k <= 12 corpus member.
  const QuadratureSpec quad = QuadratureSpec::dyadic(g.dx() / 16.0, kPi);
  std::vector<Field> corpus;
  corpus.push_back(make_sine(g, 0.1, 1));
  corpus.push_back(make_mix(g, 0.3));
  corpus.push_back(make_mix(g, 0.5));
  corpus.push_back(random_field(g, 12, 1.2, 11, 0.3));
  {
    RealArray s(g.n_modes());
    for (int j = 0; j < g.n_modes(); ++j) {
      const double x = g.node(j) - kPi;
      s[j] = 0.3 * std::exp(-x * x / 0.5);
    }
    s -= s.mean();
    corpus.push_back(Field::from_samples(g, std::move(s)));
  }
  Outcome o;
  o.pass = true;
  double worst = 0.0;
  Rows rows;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Field t = apply_T(corpus[i], corpus[i], quad, /*dealias=*/false);
    // 40001 trapezoid nodes: the oracle's own O((k h)^2) error must sit
    // well below the 1e-6 agreement bound for the rough corpus members.
    const RealArray ref = t_oracle(corpus[i], kPi, 40001);
    const double denom =
        l2_norm(Field::from_samples(g, RealArray(ref)));
    const double rel =
        l2_norm(Field::from_samples(g, t.samples() - ref)) / denom;
    rows.emplace_back("rel_l2_field_" + std::to_string(i), rel);
    worst = std::max(worst, rel);
    if (rel > 1e-6) o.pass = false;
  }
  o.detail = "worst rel L2 " + fmt(worst);
  o.artifacts.push_back(write_kv_csv("crit02", tag, rows));
  return o;
}

// ---------------------------------------------------------------------------
// 3. L2 dissipation identity along a full-equation run.
double dissipation_residual(const std::vector<EnergyReport>& rep, int stride) {
  double worst = 0.0;
  for (std::size_t i = stride; i + stride < rep.size(); i += stride) {
    const double dt2 = rep[i + stride].t - rep[i - stride].t;
    const double d = (0.5 * rep[i + stride].l2 * rep[i + stride].l2 -
                      0.5 * rep[i - stride].l2 * rep[i - stride].l2) /
                     dt2;
    const double rhs = -rep[i].log_energy / kPi;
    worst = std::max(worst, std::abs(d - rhs) / std::abs(rhs));
  }
  return worst;
}

Outcome crit3(const std::string& tag) {
  const Grid g = Grid::make(8.0 * kPi, 1024);
  const Field f0 = make_sine(g, 0.1, 4);  // 0.1 sin(x)
  const QuadratureSpec quad = default_quad(g);
  EvolveOptions opts;
  opts.fixed_dt = 2e-4;
  opts.cadence = 0.005;
  const Trajectory traj =
      evolve(f0, 0.1, RegularizationParams::off(), quad, opts);
  Outcome o;
  if (traj.final_status != SolverStatus::finished) {
    o.detail = "run halted: " + to_string(traj.final_status);
    return o;
  }
  const double coarse = dissipation_residual(traj.reports, 2);  // cadence 0.01
  const double fine = dissipation_residual(traj.reports, 1);    // halved
  const double drop = fine > 0.0 ? coarse / fine : 0.0;
  o.pass = coarse <= 1e-4 && drop >= 3.5;
  o.detail = "residual " + fmt(coarse) + ", drop x" + fmt(drop) +
             " on halved cadence";
  o.artifacts.push_back(write_kv_csv(
      "crit03", tag,
      {{"residual_cadence_1e-2", coarse}, {"residual_cadence_5e-3", fine}}));
  o.artifacts.push_back(write_traj_csv("crit03_traj", tag, traj.reports));
  return o;
}

// ---------------------------------------------------------------------------
// 4. Small-data decay: A(t) nonincreasing and int B <= 1/C0 (calibrated).
Outcome crit4(const std::string& tag) {
  // Calibrate the constants on a disjoint small corpus first.
  const Grid gc = Grid::make(2.0 * kPi, 128);
  EvolveOptions copts;
  copts.fixed_dt = 1e-3;
  copts.cadence = 0.005;
  const ConstantSet calib = calibrate_constants(
      {make_sine(gc, 0.05, 1), make_mix(gc, 0.1)}, 1e-2, 0.02,
      default_quad(gc), copts);

  const Grid g = Grid::make(2.0 * kPi, 256);
  const Field f0 = make_sine(g, 0.05 / std::sqrt(kPi), 1);  // ||.||_{H3/2.} = 0.05
  const double margin = smallness_margin(f0, calib);

  EvolveOptions opts;
  opts.fixed_dt = 1e-3;
  opts.cadence = 0.02;
  opts.constants = calib;
  const Trajectory traj =
      evolve(f0, 1.0, RegularizationParams::off(), default_quad(g), opts);
  Outcome o;
  if (traj.final_status != SolverStatus::finished) {
    o.detail = "run halted: " + to_string(traj.final_status);
    return o;
  }
  bool monotone = true;
  double int_b = 0.0;
  for (std::size_t i = 1; i < traj.reports.size(); ++i) {
    if (traj.reports[i].a_phi > traj.reports[i - 1].a_phi + 1e-10) {
      monotone = false;
    }
    int_b += 0.5 * (traj.reports[i].t - traj.reports[i - 1].t) *
             (traj.reports[i].b_phi + traj.reports[i - 1].b_phi);
  }
  const double bound = 1.0 / calib.c0;
  o.pass = margin > 0.0 && monotone && int_b <= bound;
  o.detail = "margin " + fmt(margin) + ", A " +
             (monotone ? "nonincreasing" : "NOT monotone") + ", int B " +
             fmt(int_b) + " <= " + fmt(bound);
  o.artifacts.push_back(write_kv_csv("crit04", tag,
                                     {{"smallness_margin", margin},
                                      {"int_B", int_b},
                                      {"bound_1_over_C0", bound},
                                      {"calibrated_C0", calib.c0}}));
  o.artifacts.push_back(write_traj_csv("crit04_traj", tag, traj.reports));
  return o;
}

// ---------------------------------------------------------------------------
// 5. Scaling commutation with lambda = 2, refining under x2 resolution.
Outcome crit5(const std::string& tag) {
  const Grid g1 = Grid::make(2.0 * kPi, 128);
  const Grid g2 = Grid::make(2.0 * kPi, 256);
  const double t_end = 0.04;
  const double cadence = 0.01;
  const CheckResult base = check_scaling(make_sine(g1, 0.05, 1), 2.0, t_end,
                                         1e-3, cadence, default_quad(g1));
  const CheckResult refined = check_scaling(make_sine(g2, 0.05, 1), 2.0, t_end,
                                            5e-4, cadence, default_quad(g2));
  Outcome o;
  const double d1 = base.measured.at("sup_relative_hhalf_discrepancy");
  const double d2 = refined.measured.at("sup_relative_hhalf_discrepancy");
  const double drop = d2 > 0.0 ? d1 / d2 : 0.0;
  o.pass = base.pass && d1 <= 1e-3 && drop >= 2.0;
  o.detail = "discrepancy " + fmt(d1) + ", drop x" + fmt(drop) +
             " under refinement";
  o.artifacts.push_back(write_kv_csv(
      "crit05", tag, {{"discrepancy_base", d1}, {"discrepancy_refined", d2}}));
  return o;
}

// ---------------------------------------------------------------------------
// 6. R_eps scaling: fitted constant in ||R_eps f|| <= C sqrt(eps) ||f||_{H3/2.}
Outcome crit6(const std::string& tag) {
  const Grid g = Grid::make(2.0 * kPi, 32768);
  std::vector<Field> corpus;
  for (unsigned seed : {21u, 22u, 23u, 24u, 25u}) {
    corpus.push_back(random_field(g, 16000, 2.1, seed, 0.1));
  }
  Outcome o;
  Rows rows;
  double lo = 1e300, hi = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const RegularizationParams params = RegularizationParams::with_eps(eps);
    double c = 0.0;
    for (const Field& f : corpus) {
      const double num = l2_norm(apply_R_eps(f, params));
      c = std::max(c, num / (std::sqrt(eps) * sobolev_norm(f, 1.5)));
    }
    rows.emplace_back("C_eps_" + format_double(eps), c);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  const double spread = hi / lo;
  o.pass = spread <= 4.0;
  o.detail = "fitted-C spread x" + fmt(spread) + " over 3 decades of eps";
  rows.emplace_back("spread", spread);
  o.artifacts.push_back(write_kv_csv("crit06", tag, rows));
  return o;
}

// ---------------------------------------------------------------------------
// 7. eps-convergence of the regularized scheme.
Outcome crit7(const std::string& tag) {
  const Grid g = Grid::make(2.0 * kPi, 256);
  RealArray s(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) {
    const double x = g.node(j);
    s[j] = 0.1 * std::sin(x) + 0.05 * std::sin(2.0 * x);
  }
  const Field f0 = Field::from_samples(g, std::move(s));
  EvolveOptions opts;
  opts.fixed_dt = 2e-4;
  opts.cadence = 0.005;
  const CheckResult r = eps_convergence(f0, {1e-1, 5e-2, 2.5e-2, 1.25e-2},
                                        0.05, default_quad(g), opts, 0.4);
  Outcome o;
  o.pass = r.pass && !r.vacuous;
  o.detail = "distances (" + fmt(r.measured.at("d_0")) + ", " +
             fmt(r.measured.at("d_1")) + ", " + fmt(r.measured.at("d_2")) +
             "), rate " + fmt(r.measured.at("empirical_rate"));
  Rows rows(r.measured.begin(), r.measured.end());
  o.artifacts.push_back(write_kv_csv("crit07", tag, rows));
  return o;
}

// ---------------------------------------------------------------------------
// 8. Interpolation inequalities with one constant over a random corpus.
struct InterpRatios {
  double z20_74, z20_2, n110;
};

InterpRatios interp_ratios(const Field& f, const PhiWeight& phi,
                           const PhiFn& phi_sq) {
  const PhiEnergies e = energies(f, phi);
  InterpRatios r{0.0, 0.0, 0.0};
  if (e.a_phi == 0.0) return r;
  for (double s : {1.75, 2.0}) {
    const double ratio = sobolev_norm(f, s) /
                         (e.mu_phi * std::pow(e.a_phi, 2.0 - s) *
                          std::pow(e.b_phi, s - 1.5));
    (s == 1.75 ? r.z20_74 : r.z20_2) = ratio;
  }
  r.n110 = sobolev_phi_norm(f, 1.75, phi_sq) /
           (e.mu_phi * std::pow(e.a_phi, 0.25) * std::pow(e.b_phi, 0.25));
  return r;
}

Outcome crit8(const std::string& tag) {
  const Grid g = Grid::make(2.0 * kPi, 256);
  const PhiWeight phi = make_log_phi(1.0);
  const PhiFn fn = phi.fn();
  const PhiFn fn2 = [fn](double r) {
    const double v = fn(r);
    return v * v;
  };
  const int bands[4] = {16, 32, 64, 96};
  const double decays[4] = {1.6, 1.8, 2.0, 2.2};

  auto corpus_max = [&](unsigned seed0) {
    InterpRatios worst{0.0, 0.0, 0.0};
    for (int i = 0; i < 1000; ++i) {
      const Field f =
          random_field(g, bands[i % 4], decays[i % 4], seed0 + i, 0.1);
      const InterpRatios r = interp_ratios(f, phi, fn2);
      worst.z20_74 = std::max(worst.z20_74, r.z20_74);
      worst.z20_2 = std::max(worst.z20_2, r.z20_2);
      worst.n110 = std::max(worst.n110, r.n110);
    }
    return worst;
  };
  const InterpRatios env = corpus_max(10000);   // calibration corpus
  const InterpRatios test = corpus_max(20000);  // disjoint test corpus

  Outcome o;
  o.pass = test.z20_74 <= 1.1 * env.z20_74 && test.z20_2 <= 1.1 * env.z20_2 &&
           test.n110 <= 1.1 * env.n110;
  o.detail = "envelope exceedance x(" + fmt(test.z20_74 / env.z20_74) + ", " +
             fmt(test.z20_2 / env.z20_2) + ", " + fmt(test.n110 / env.n110) +
             ") <= 1.1";
  o.artifacts.push_back(write_kv_csv("crit08", tag,
                                     {{"env_z20_s74", env.z20_74},
                                      {"env_z20_s2", env.z20_2},
                                      {"env_n110", env.n110},
                                      {"test_z20_s74", test.z20_74},
                                      {"test_z20_s2", test.z20_2},
                                      {"test_n110", test.n110}}));
  return o;
}

// ---------------------------------------------------------------------------
// 9. Contraction/uniqueness: identical data, then a perturbation ladder.
Outcome crit9(const std::string& tag) {
  const Grid g = Grid::make(2.0 * kPi, 128);
  const QuadratureSpec quad = default_quad(g);
  EvolveOptions opts;
  opts.fixed_dt = 5e-4;
  opts.cadence = 0.01;
  const Field f1 = make_sine(g, 0.1, 1);
  const double t_end = 0.05;
  const double m_bound = 10.0;

  const CheckResult same = check_contraction(f1, f1, t_end, m_bound, quad, opts);
  Outcome o;
  Rows rows;
  rows.emplace_back("identical_sup_rel_diff",
                    same.measured.at("sup_relative_difference"));
  bool ok = same.pass && !same.vacuous;

  double lo = 1e300, hi = 0.0;
  bool finite = true;
  for (double delta : {1e-3, 1e-4, 1e-5}) {
    const Field f2 = Field::from_samples(
        g, f1.samples() + delta * make_sine(g, 1.0, 2).samples());
    const CheckResult r = check_contraction(f1, f2, t_end, m_bound, quad, opts);
    const double c = r.fitted.at("C_gronwall");
    rows.emplace_back("C_gronwall_delta_" + format_double(delta), c);
    if (!(r.pass && std::isfinite(c))) finite = false;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  // Stable within x2: either all fits vanish (the difference never grows)
  // or the spread of the positive fits stays under 2.
  const bool stable = (hi == 0.0) || (lo > 0.0 && hi / lo <= 2.0);
  o.pass = ok && finite && stable;
  o.detail = "identical rel diff " +
             fmt(same.measured.at("sup_relative_difference")) +
             ", Gronwall fits in [" + fmt(lo) + ", " + fmt(hi) + "]";
  o.artifacts.push_back(write_kv_csv("crit09", tag, rows));
  return o;
}

// ---------------------------------------------------------------------------
// 10. Lipschitz budget: fitted C0 across amplitude and eps sweeps.
Outcome crit10(const std::string& tag) {
  const Grid g = Grid::make(2.0 * kPi, 256);
  const QuadratureSpec quad = default_quad(g);
  EvolveOptions opts;
  opts.fixed_dt = 5e-4;
  opts.cadence = 0.005;
  const ConstantSet probe;  // C = 1 while fitting

  auto data = [&](double amp) {
    RealArray s(g.n_modes());
    for (int j = 0; j < g.n_modes(); ++j) {
      const double x = g.node(j);
      s[j] = amp * (std::sin(x) + 0.6 * std::sin(2.0 * x) +
                    0.3 * std::cos(3.0 * x));
    }
    return Field::from_samples(g, std::move(s));
  };
  auto fit = [&](double amp, double eps) {
    const RegularizationParams params = RegularizationParams::with_eps(eps);
    const Trajectory traj =
        evolve(mollify_initial(data(amp), eps), 0.05, params, quad, opts);
    if (traj.final_status != SolverStatus::finished) return -1.0;
    return check_lipschitz_budget(traj.reports, eps, 0.3, probe)
        .fitted.at("C0");
  };

  Outcome o;
  Rows rows;
  double alo = 1e300, ahi = 0.0;
  bool ok = true;
  for (double amp : {0.05, 0.1, 0.2}) {
    const double c = fit(amp, 1e-2);
    rows.emplace_back("C0_amp_" + format_double(amp), c);
    if (c < 1.0) ok = false;  // includes halted runs (-1)
    alo = std::min(alo, c);
    ahi = std::max(ahi, c);
  }
  std::vector<double> efits;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    const double c = fit(0.1, eps);
    rows.emplace_back("C0_eps_" + format_double(eps), c);
    if (c < 1.0) ok = false;
    efits.push_back(c);
  }
  bool nonincreasing = true;
  for (std::size_t i = 1; i < efits.size(); ++i) {
    if (efits[i] > efits[i - 1] + 1e-9) nonincreasing = false;
  }
  o.pass = ok && ahi / alo <= 4.0 && nonincreasing;
  o.detail = "amplitude spread x" + fmt(ahi / alo) + ", eps fits (" +
             fmt(efits[0]) + ", " + fmt(efits[1]) + ", " + fmt(efits[2]) +
             ")" + (nonincreasing ? " nonincreasing" : " NOT nonincreasing");
  o.artifacts.push_back(write_kv_csv("crit10", tag, rows));
  return o;
}

// ---------------------------------------------------------------------------
// 11. phi machinery: log-weight certification and data adaptation.
Outcome crit11(const std::string& tag) {
  const PhiWeight logphi = make_log_phi(1.0);
  const bool log_ok = logphi.certificate.all_pass();

  const Grid g = Grid::make(2.0 * kPi, 2048);
  const Field f = random_field(g, 1000, 2.1, 5, 0.3);
  const PhiWeight w = adapt_phi_to_data(f);
  const bool unbounded = w.certificate.h1_pass &&
                         w(w.r_max) >= 2.0 * w(1.0);
  const double weighted = sobolev_phi_norm(f, 1.5, w.fn());
  const double unweighted = sobolev_norm(f, 1.5);
  const bool tight = weighted <= 2.0 * unweighted + 1.0;

  Outcome o;
  o.pass = log_ok && w.certificate.all_pass() && unbounded && tight;
  o.detail = std::string("log-phi cert ") + (log_ok ? "ok" : "FAIL") +
             ", adapted weighted/unweighted " + fmt(weighted / unweighted);
  o.artifacts.push_back(write_kv_csv("crit11", tag,
                                     {{"log_cert", log_ok ? 1.0 : 0.0},
                                      {"adapted_h2_c0", w.certificate.h2_c0},
                                      {"phi_rmax_over_phi1", w(w.r_max) / w(1.0)},
                                      {"weighted_32", weighted},
                                      {"unweighted_32", unweighted}}));
  return o;
}

}  // namespace

int main() {
  const char* root = std::getenv("MUSKAT_OUTPUT_ROOT");
  g_outdir = (root != nullptr ? std::string(root) + "/" : std::string()) +
             "acceptance_out";
  std::filesystem::create_directories(g_outdir);

  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome(const std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"linear identity (truncated quadrature vs -|D|f)", 5.0, crit1},
      {"T-operator dense-trapezoid oracle equivalence", 30.0, crit2},
      {"L2 dissipation identity along a run", 120.0, crit3},
      {"small-data decay: A monotone, int B bounded", 120.0, crit4},
      {"critical-scaling commutation (lambda = 2)", 180.0, crit5},
      {"R_eps sqrt(eps) scaling constant", 60.0, crit6},
      {"eps-convergence of the approximation scheme", 600.0, crit7},
      {"interpolation inequality envelopes", 120.0, crit8},
      {"contraction / uniqueness (Gronwall fit)", 300.0, crit9},
      {"Lipschitz budget fitted C0 sweeps", 300.0, crit10},
      {"phi weight machinery", 10.0, crit11},
  };

  bool all_pass = true;
  std::vector<Outcome> first;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[i].run("run1");
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = elapsed < criteria[i].budget_s;
    const bool pass = o.pass && in_budget;
    std::printf("[%2zu] %s %s (%s; %.1f s / %.0f s)\n", i + 1,
                pass ? "PASS" : "FAIL", criteria[i].name, o.detail.c_str(),
                elapsed, criteria[i].budget_s);
    std::fflush(stdout);
    if (!pass) all_pass = false;
    first.push_back(std::move(o));
  }

  // 12. Determinism: rerun every criterion; all CSV artifacts must be
  // bit-identical.
  bool deterministic = true;
  std::string mismatch;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome again = criteria[i].run("run2");
    if (again.artifacts.size() != first[i].artifacts.size()) {
      deterministic = false;
      mismatch = "artifact count, criterion " + std::to_string(i + 1);
      continue;
    }
    for (std::size_t k = 0; k < again.artifacts.size(); ++k) {
      if (fnv1a_file(first[i].artifacts[k]) !=
          fnv1a_file(again.artifacts[k])) {
        deterministic = false;
        mismatch = first[i].artifacts[k];
      }
    }
  }
  std::printf("[12] %s determinism: rerun reproduces all CSV artifacts%s\n",
              deterministic ? "PASS" : "FAIL",
              deterministic ? " bit-identically"
                            : (" (mismatch: " + mismatch + ")").c_str());
  if (!deterministic) all_pass = false;

  std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL CRITERIA PASS"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
