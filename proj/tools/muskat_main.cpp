#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "muskat/errors.hpp"
#include "muskat/io.hpp"
#include "muskat/numfmt.hpp"
#include "muskat/rhs.hpp"
#include "muskat/spectral.hpp"
#include "muskat/stepper.hpp"
#include "muskat/verify.hpp"

namespace fs = std::filesystem;
using namespace muskat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitGuardHalt = 3;
constexpr int kExitIoError = 4;

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

fs::path output_dir(const RunConfig& config) {
  fs::path dir = config.output.directory;
  if (const char* root = std::getenv("MUSKAT_OUTPUT_ROOT")) {
    dir = fs::path(root) / dir;
  }
  fs::create_directories(dir);
  return dir;
}

RegularizationParams params_from(const RunConfig& config) {
  if (config.regularization.eps > 0.0) {
    return RegularizationParams::with_eps(config.regularization.eps,
                                          config.regularization.beta);
  }
  return RegularizationParams::off();
}

int cmd_solve(const std::string& config_path) {
  const std::string config_text = read_file(config_path);
  const RunConfig config = parse_config_text(config_text);
  const fs::path dir = output_dir(config);

  RunManifest manifest;
  manifest.config_echo = serialize_config(config);
  manifest.config_hash = fnv1a(config_text);
  manifest.code_version = code_version();
  manifest.started_at = timestamp_utc();

  const Grid grid = make_grid_from(config);
  Field f0 = build_initial_data(config);
  const RegularizationParams params = params_from(config);
  if (params.enabled()) f0 = mollify_initial(f0, params.eps);
  const PhiWeight phi = build_phi(config, f0);
  const QuadratureSpec quad = build_quadrature(config, grid);
  const EvolveOptions opts = build_evolve_options(config, phi);

  const Trajectory traj =
      evolve(f0, config.stepper.t_end, params, quad, opts);

  const fs::path csv = dir / "trajectory.csv";
  write_trajectory_csv(traj.reports, csv.string());
  manifest.artifacts.push_back({csv.string(), fnv1a_file(csv.string())});

  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    char name[48];
    std::snprintf(name, sizeof(name), "spectrum_%04zu.csv", i);
    const fs::path p = dir / name;
    write_spectrum_csv(traj.snapshots[i].second, p.string());
    manifest.artifacts.push_back({p.string(), fnv1a_file(p.string())});
  }

  manifest.final_status = to_string(traj.final_status);
  manifest.finished_at = timestamp_utc();
  write_manifest(manifest, (dir / "manifest.json").string());

  std::cout << "status: " << manifest.final_status
            << "  steps: " << traj.total_steps
            << "  reports: " << traj.reports.size() << "\n";
  return traj.final_status == SolverStatus::finished ? kExitOk : kExitGuardHalt;
}

int cmd_verify(const std::string& suite, const std::string& config_path) {
  if (suite != "identities" && suite != "inequalities" &&
      suite != "convergence" && suite != "all") {
    throw ConfigError("unknown verify suite '" + suite + "'");
  }
  const RunConfig config = parse_config_text(read_file(config_path));
  const fs::path dir = output_dir(config);

  const Grid grid = make_grid_from(config);
  const Field f0 = build_initial_data(config);
  const PhiWeight phi = build_phi(config, f0);
  const QuadratureSpec quad = build_quadrature(config, grid);
  EvolveOptions opts = build_evolve_options(config, phi);
  if (opts.snapshot_cadence <= 0.0) opts.snapshot_cadence = opts.cadence;

  std::vector<CheckResult> results;

  if (suite == "identities" || suite == "all") {
    const double l = grid.length();
    results.push_back(
        check_linear_identity(f0, {l / 8.0, l / 4.0, l / 2.0}));
    const Trajectory traj = evolve(f0, config.stepper.t_end,
                                   RegularizationParams::off(), quad, opts);
    results.push_back(check_l2_dissipation(traj));
    CheckResult scaling = check_scaling(
        f0, 2.0, config.stepper.t_end / 2.0,
        config.stepper.fixed_dt > 0.0 ? config.stepper.fixed_dt
                                      : config.stepper.dt0,
        config.stepper.cadence, quad);
    results.push_back(std::move(scaling));
  }

  if (suite == "inequalities" || suite == "all") {
    const double eps = config.regularization.eps > 0.0
                           ? config.regularization.eps
                           : 1e-2;
    const RegularizationParams params =
        RegularizationParams::with_eps(eps, config.regularization.beta);
    const Trajectory traj = evolve(mollify_initial(f0, eps),
                                   config.stepper.t_end, params, quad, opts);
    results.push_back(check_lipschitz_budget(
        traj.reports, eps, config.regularization.beta, config.constants));
    results.push_back(check_energy_inequality(traj.reports, config.constants));
    results.push_back(check_contraction(
        f0,
        Field::from_samples(grid, f0.samples() * (1.0 + 1e-4)),
        config.stepper.t_end, 10.0, quad, opts));
  }

  if (suite == "convergence" || suite == "all") {
    results.push_back(eps_convergence(f0, {1e-1, 5e-2, 2.5e-2, 1.25e-2},
                                      config.stepper.t_end, quad, opts));
  }

  const bool all_pass =
      write_check_report(results, (dir / "checks.json").string(),
                         (dir / "checks.txt").string());
  std::cout << read_file((dir / "checks.txt").string());
  return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_sweep(const std::string& sweep_path) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(read_file(sweep_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("sweep parse error: ") + e.what());
  }
  if (!root.is_object() || !root.contains("axis") || !root.contains("values") ||
      !root.contains("base")) {
    throw ConfigError("sweep config needs keys axis, values, base");
  }
  const std::string axis = root["axis"].get<std::string>();
  if (axis != "amplitude" && axis != "eps" && axis != "N") {
    throw ConfigError("sweep.axis must be amplitude, eps, or N");
  }
  const auto& values = root["values"];
  if (!values.is_array() || values.empty()) {
    throw ConfigError("sweep.values must be a nonempty array");
  }
  if (values.size() > 64) throw ConfigError("sweep.values too large (max 64)");
  const RunConfig base = parse_config_text(root["base"].dump());
  const fs::path dir = output_dir(base);

  std::ofstream out(dir / "sweep.csv");
  if (!out) throw IoError("cannot write sweep.csv");
  out << "point,final_status,sup_lip,sup_A,int_B,smallness_margin\n";

  for (const auto& v : values) {
    RunConfig c = base;
    if (axis == "amplitude") c.data.amplitude = v.get<double>();
    if (axis == "eps") c.regularization.eps = v.get<double>();
    if (axis == "N") c.grid.n_modes = v.get<int>();

    std::string status;
    double sup_lip = 0.0;
    double sup_a = 0.0;
    double int_b = 0.0;
    double margin = 0.0;
    try {
      const Grid grid = make_grid_from(c);
      Field f0 = build_initial_data(c);
      const RegularizationParams params = params_from(c);
      if (params.enabled()) f0 = mollify_initial(f0, params.eps);
      const PhiWeight phi = build_phi(c, f0);
      const QuadratureSpec quad = build_quadrature(c, grid);
      const EvolveOptions opts = build_evolve_options(c, phi);
      margin = smallness_margin(f0, c.constants);
      const Trajectory traj = evolve(f0, c.stepper.t_end, params, quad, opts);
      status = to_string(traj.final_status);
      for (std::size_t i = 0; i < traj.reports.size(); ++i) {
        const EnergyReport& r = traj.reports[i];
        sup_lip = std::max(sup_lip, r.lip);
        sup_a = std::max(sup_a, r.a_phi);
        if (i > 0) {
          const EnergyReport& p = traj.reports[i - 1];
          int_b += 0.5 * (r.t - p.t) * (r.b_phi + p.b_phi);
        }
      }
    } catch (const std::exception& e) {
      status = std::string("error: ") + e.what();
    }
    out << v.dump() << ',' << status << ',' << format_double(sup_lip) << ','
        << format_double(sup_a) << ',' << format_double(int_b) << ','
        << format_double(margin) << '\n';
  }
  if (!out) throw IoError("write failed for sweep.csv");
  std::cout << "sweep summary: " << (dir / "sweep.csv").string() << "\n";
  return kExitOk;
}

int cmd_phi_adapt(const std::string& data_path, const std::string& out_path) {
  const RunConfig config = parse_config_text(read_file(data_path));
  const Field f0 = build_initial_data(config);
  const PhiWeight phi = adapt_phi_to_data(f0);
  write_phi_csv(phi, out_path);
  std::cout << "phi kind: " << phi.kind
            << "  H1: " << (phi.certificate.h1_pass ? "pass" : "fail")
            << "  H2 c0: " << format_double(phi.certificate.h2_c0)
            << "  H3: " << (phi.certificate.h3_pass ? "pass" : "fail") << "\n";
  return phi.certificate.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral Muskat solver and verification harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string suite;
  std::string data_path;
  std::string out_path;

  CLI::App* solve = app.add_subcommand("solve", "Run one trajectory");
  solve->add_option("config", config_path, "JSON run config")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a check suite");
  verify->add_option("suite", suite,
                     "identities | inequalities | convergence | all")
      ->required();
  verify->add_option("config", config_path, "JSON run config")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep");
  sweep->add_option("config", config_path, "JSON sweep config")->required();

  CLI::App* adapt = app.add_subcommand("phi-adapt", "Data-adapted weight");
  adapt->add_option("data-file", data_path, "JSON config describing the data")
      ->required();
  adapt->add_option("out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (solve->parsed()) return cmd_solve(config_path);
    if (verify->parsed()) return cmd_verify(suite, config_path);
    if (sweep->parsed()) return cmd_sweep(config_path);
    if (adapt->parsed()) return cmd_phi_adapt(data_path, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitConfigError;
}
