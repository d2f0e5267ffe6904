#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "muskat/field.hpp"
#include "muskat/functionals.hpp"
#include "muskat/phi.hpp"
#include "muskat/quadrature.hpp"
#include "muskat/stepper.hpp"

namespace muskat {

struct GridConfig {
  double length = 2.0 * EIGEN_PI;
  int n_modes = 256;
};

struct DataConfig {
  std::string kind = "single_mode";  // single_mode | random_bandlimited |
                                     // gaussian_bump | from_file
  double amplitude = 0.1;
  int wavenumber = 1;
  int band_lo = 1;
  int band_hi = 8;
  double decay = 0.0;   // random family: |c_k| proportional to k^{-decay}
  double width = 0.0;   // gaussian bump; 0 -> L/16
  unsigned seed = 1;
  std::string path;     // from_file samples
};

struct RegConfig {
  double eps = 0.0;  // 0 = off
  double beta = 0.3;
};

struct PhiConfig {
  std::string kind = "one";  // one | log | adapted
  double a = 1.0;            // log-family exponent
};

struct StepperConfig {
  double t_end = 0.1;
  double dt0 = 1e-3;
  double fixed_dt = 0.0;
  double step_tol = 1e-8;
  double cadence = 0.01;
  GuardConfig guards;
};

struct QuadConfig {
  double delta0 = 0.0;   // 0 -> dx/4
  double trunc_a = 0.0;  // 0 -> L/2
  int gauss_order = 8;
};

struct OutputConfig {
  std::string directory = "out";
  double snapshot_cadence = 0.0;
};

struct RunConfig {
  GridConfig grid;
  DataConfig data;
  RegConfig regularization;
  PhiConfig phi;
  StepperConfig stepper;
  QuadConfig quadrature;
  ConstantSet constants;
  OutputConfig output;
};

/// Strict parse: schema-validated, unknown keys rejected with the offending
/// key named. Throws ConfigError.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Canonical serialization; parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& config);

Grid make_grid_from(const RunConfig& config);
Field build_initial_data(const RunConfig& config);
PhiWeight build_phi(const RunConfig& config, const Field& f0);
QuadratureSpec build_quadrature(const RunConfig& config, const Grid& grid);
EvolveOptions build_evolve_options(const RunConfig& config,
                                   const PhiWeight& phi);

/// Trajectory CSV with the fixed 15-column header
/// t,L2,lip,H32,H2,A_phi,B_phi,P_phi,mu_phi,Q,besov,holder,logE,dt,status.
void write_trajectory_csv(const std::vector<EnergyReport>& reports,
                          const std::string& path);

/// FNV-1a 64-bit content hashes.
std::uint64_t fnv1a(std::string_view bytes);
std::uint64_t fnv1a_file(const std::string& path);

struct ManifestEntry {
  std::string path;
  std::uint64_t hash = 0;
};

struct RunManifest {
  std::string config_echo;
  std::uint64_t config_hash = 0;
  std::string code_version;
  std::string started_at;
  std::string finished_at;
  std::string final_status;
  std::vector<ManifestEntry> artifacts;
};

/// Writes the manifest JSON atomically (temp file + rename).
void write_manifest(const RunManifest& manifest, const std::string& path);

/// Reads a whole file; throws IoError.
std::string read_file(const std::string& path);

/// Samples file: one collocation value per line.
Field read_samples(const Grid& grid, const std::string& path);

const char* code_version();

}  // namespace muskat
