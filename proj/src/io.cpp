#include "muskat/io.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "muskat/errors.hpp"
#include "muskat/numfmt.hpp"
#include "muskat/spectral.hpp"

namespace muskat {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const char* section,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) { known = true; break; }
    }
    if (!known) {
      throw ConfigError(std::string("unknown key '") + it.key() + "' in " +
                        section);
    }
  }
}

double get_num(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    throw ConfigError(std::string("key '") + key + "' must be numeric");
  }
  return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    throw ConfigError(std::string("key '") + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

std::string get_str(const json& obj, const char* key, std::string fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) {
    throw ConfigError(std::string("key '") + key + "' must be a string");
  }
  return obj[key].get<std::string>();
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(root, "config root",
                 {"grid", "data", "regularization", "phi", "stepper",
                  "quadrature", "constants", "output"});

  RunConfig c;
  if (root.contains("grid")) {
    const json& g = root["grid"];
    reject_unknown(g, "grid", {"L", "N"});
    c.grid.length = get_num(g, "L", c.grid.length);
    c.grid.n_modes = get_int(g, "N", c.grid.n_modes);
    if (c.grid.n_modes % 2 != 0 || c.grid.n_modes < 8) {
      throw ConfigError("grid.N must be even and >= 8");
    }
    if (!(c.grid.length > 0.0)) throw ConfigError("grid.L must be positive");
  }
  if (root.contains("data")) {
    const json& d = root["data"];
    reject_unknown(d, "data",
                   {"kind", "amplitude", "wavenumber", "band_lo", "band_hi",
                    "decay", "width", "seed", "path"});
    c.data.kind = get_str(d, "kind", c.data.kind);
    if (c.data.kind != "single_mode" && c.data.kind != "random_bandlimited" &&
        c.data.kind != "gaussian_bump" && c.data.kind != "from_file") {
      throw ConfigError("data.kind must be one of single_mode, "
                        "random_bandlimited, gaussian_bump, from_file");
    }
    c.data.amplitude = get_num(d, "amplitude", c.data.amplitude);
    c.data.wavenumber = get_int(d, "wavenumber", c.data.wavenumber);
    c.data.band_lo = get_int(d, "band_lo", c.data.band_lo);
    c.data.band_hi = get_int(d, "band_hi", c.data.band_hi);
    c.data.decay = get_num(d, "decay", c.data.decay);
    c.data.width = get_num(d, "width", c.data.width);
    c.data.seed = static_cast<unsigned>(get_int(d, "seed", 1));
    c.data.path = get_str(d, "path", c.data.path);
    if (c.data.wavenumber < 1) throw ConfigError("data.wavenumber must be >= 1");
    if (c.data.band_lo < 1 || c.data.band_hi < c.data.band_lo) {
      throw ConfigError("data band must satisfy 1 <= band_lo <= band_hi");
    }
  }
  if (root.contains("regularization")) {
    const json& r = root["regularization"];
    reject_unknown(r, "regularization", {"eps", "beta"});
    if (r.contains("eps") && r["eps"].is_string()) {
      if (r["eps"].get<std::string>() != "off") {
        throw ConfigError("regularization.eps must be a number or \"off\"");
      }
      c.regularization.eps = 0.0;
    } else {
      c.regularization.eps = get_num(r, "eps", c.regularization.eps);
    }
    c.regularization.beta = get_num(r, "beta", c.regularization.beta);
    if (c.regularization.eps < 0.0 || c.regularization.eps > 1.0) {
      throw ConfigError("regularization.eps must lie in [0, 1]");
    }
    if (!(c.regularization.beta > 0.0 && c.regularization.beta < 0.5)) {
      throw ConfigError("regularization.beta must lie in (0, 1/2)");
    }
  }
  if (root.contains("phi")) {
    const json& p = root["phi"];
    reject_unknown(p, "phi", {"kind", "a"});
    c.phi.kind = get_str(p, "kind", c.phi.kind);
    if (c.phi.kind != "one" && c.phi.kind != "log" && c.phi.kind != "adapted") {
      throw ConfigError("phi.kind must be one, log, or adapted");
    }
    c.phi.a = get_num(p, "a", c.phi.a);
    if (c.phi.kind == "log" && !(c.phi.a > 0.0 && c.phi.a <= 1.0)) {
      throw ConfigError("phi.a must lie in (0, 1]");
    }
  }
  if (root.contains("stepper")) {
    const json& s = root["stepper"];
    reject_unknown(s, "stepper",
                   {"T_end", "dt0", "fixed_dt", "step_tol", "cadence",
                    "slope_max", "tail_max"});
    c.stepper.t_end = get_num(s, "T_end", c.stepper.t_end);
    c.stepper.dt0 = get_num(s, "dt0", c.stepper.dt0);
    c.stepper.fixed_dt = get_num(s, "fixed_dt", c.stepper.fixed_dt);
    c.stepper.step_tol = get_num(s, "step_tol", c.stepper.step_tol);
    c.stepper.cadence = get_num(s, "cadence", c.stepper.cadence);
    c.stepper.guards.slope_max =
        get_num(s, "slope_max", c.stepper.guards.slope_max);
    c.stepper.guards.tail_max =
        get_num(s, "tail_max", c.stepper.guards.tail_max);
    if (!(c.stepper.t_end > 0.0)) throw ConfigError("stepper.T_end must be positive");
    if (!(c.stepper.dt0 > 0.0)) throw ConfigError("stepper.dt0 must be positive");
    if (!(c.stepper.cadence > 0.0)) {
      throw ConfigError("stepper.cadence must be positive");
    }
  }
  if (root.contains("quadrature")) {
    const json& q = root["quadrature"];
    reject_unknown(q, "quadrature", {"delta0", "A", "gauss_order"});
    c.quadrature.delta0 = get_num(q, "delta0", c.quadrature.delta0);
    c.quadrature.trunc_a = get_num(q, "A", c.quadrature.trunc_a);
    c.quadrature.gauss_order = get_int(q, "gauss_order", c.quadrature.gauss_order);
    if (c.quadrature.gauss_order < 2 || c.quadrature.gauss_order > 32) {
      throw ConfigError("quadrature.gauss_order must lie in [2, 32]");
    }
  }
  if (root.contains("constants")) {
    const json& k = root["constants"];
    reject_unknown(k, "constants", {"C0", "C1", "C2", "provenance"});
    c.constants.c0 = get_num(k, "C0", c.constants.c0);
    c.constants.c1 = get_num(k, "C1", c.constants.c1);
    c.constants.c2 = get_num(k, "C2", c.constants.c2);
    c.constants.provenance = get_str(k, "provenance", c.constants.provenance);
    if (!(c.constants.c0 > 0.0 && c.constants.c1 > 0.0 && c.constants.c2 > 0.0)) {
      throw ConfigError("constants must be positive");
    }
  }
  if (root.contains("output")) {
    const json& o = root["output"];
    reject_unknown(o, "output", {"directory", "snapshot_cadence"});
    c.output.directory = get_str(o, "directory", c.output.directory);
    c.output.snapshot_cadence =
        get_num(o, "snapshot_cadence", c.output.snapshot_cadence);
  }
  return c;
}

RunConfig parse_config(const std::string& path) {
  return parse_config_text(read_file(path));
}

std::string serialize_config(const RunConfig& c) {
  json root;
  root["grid"] = {{"L", c.grid.length}, {"N", c.grid.n_modes}};
  root["data"] = {{"kind", c.data.kind},
                  {"amplitude", c.data.amplitude},
                  {"wavenumber", c.data.wavenumber},
                  {"band_lo", c.data.band_lo},
                  {"band_hi", c.data.band_hi},
                  {"decay", c.data.decay},
                  {"width", c.data.width},
                  {"seed", static_cast<int>(c.data.seed)},
                  {"path", c.data.path}};
  root["regularization"] = {{"eps", c.regularization.eps},
                            {"beta", c.regularization.beta}};
  root["phi"] = {{"kind", c.phi.kind}, {"a", c.phi.a}};
  root["stepper"] = {{"T_end", c.stepper.t_end},
                     {"dt0", c.stepper.dt0},
                     {"fixed_dt", c.stepper.fixed_dt},
                     {"step_tol", c.stepper.step_tol},
                     {"cadence", c.stepper.cadence},
                     {"slope_max", c.stepper.guards.slope_max},
                     {"tail_max", c.stepper.guards.tail_max}};
  root["quadrature"] = {{"delta0", c.quadrature.delta0},
                        {"A", c.quadrature.trunc_a},
                        {"gauss_order", c.quadrature.gauss_order}};
  root["constants"] = {{"C0", c.constants.c0},
                       {"C1", c.constants.c1},
                       {"C2", c.constants.c2},
                       {"provenance", c.constants.provenance}};
  root["output"] = {{"directory", c.output.directory},
                    {"snapshot_cadence", c.output.snapshot_cadence}};
  return root.dump(2) + "\n";
}

Grid make_grid_from(const RunConfig& c) {
  return Grid::make(c.grid.length, c.grid.n_modes);
}

Field build_initial_data(const RunConfig& c) {
  const Grid grid = make_grid_from(c);
  const int n = grid.n_modes();
  const DataConfig& d = c.data;

  if (d.kind == "single_mode") {
    RealArray s(n);
    for (int j = 0; j < n; ++j) {
      s[j] = d.amplitude *
             std::sin(2.0 * EIGEN_PI * d.wavenumber * j / double(n));
    }
    return Field::from_samples(grid, std::move(s));
  }
  if (d.kind == "random_bandlimited") {
    if (d.band_hi > n / 2 - 1) {
      throw ConfigError("data.band_hi exceeds the resolved band");
    }
    std::mt19937 rng(d.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * EIGEN_PI);
    std::uniform_real_distribution<double> mag(0.5, 1.0);
    ComplexArray spec = ComplexArray::Zero(n);
    for (int k = d.band_lo; k <= d.band_hi; ++k) {
      const double r = mag(rng) * std::pow(double(k), -d.decay);
      const double ph = phase(rng);
      const std::complex<double> ck = 0.5 * r *
          std::complex<double>(std::cos(ph), std::sin(ph));
      spec[k] = ck;
      spec[n - k] = std::conj(ck);
    }
    Field raw = Field::from_spectrum(grid, spec);
    const double h32 = sobolev_norm(raw, 1.5);
    if (h32 == 0.0) return Field::zero(grid);
    return Field::from_samples(grid, raw.samples() * (d.amplitude / h32));
  }
  if (d.kind == "gaussian_bump") {
    const double w = d.width > 0.0 ? d.width : grid.length() / 16.0;
    RealArray s(n);
    for (int j = 0; j < n; ++j) {
      const double x = grid.node(j) - grid.length() / 2.0;
      // Periodize over three images; the tails beyond are negligible for
      // width << L.
      double v = 0.0;
      for (int m = -1; m <= 1; ++m) {
        const double y = x + m * grid.length();
        v += std::exp(-y * y / (2.0 * w * w));
      }
      s[j] = d.amplitude * v;
    }
    s -= s.mean();
    return Field::from_samples(grid, std::move(s));
  }
  if (d.kind == "from_file") {
    return read_samples(grid, d.path);
  }
  throw ConfigError("unknown data.kind '" + d.kind + "'");
}

PhiWeight build_phi(const RunConfig& c, const Field& f0) {
  if (c.phi.kind == "one") return phi_one();
  if (c.phi.kind == "log") return make_log_phi(c.phi.a);
  return adapt_phi_to_data(f0);
}

QuadratureSpec build_quadrature(const RunConfig& c, const Grid& grid) {
  const double d0 =
      c.quadrature.delta0 > 0.0 ? c.quadrature.delta0 : grid.dx() / 4.0;
  const double a =
      c.quadrature.trunc_a > 0.0 ? c.quadrature.trunc_a : grid.length() / 2.0;
  if (a > grid.length() / 2.0 + 1e-12) {
    throw ConfigError("quadrature.A exceeds L/2");
  }
  return QuadratureSpec::dyadic(d0, a, c.quadrature.gauss_order);
}

EvolveOptions build_evolve_options(const RunConfig& c, const PhiWeight& phi) {
  EvolveOptions o;
  o.dt0 = c.stepper.dt0;
  o.fixed_dt = c.stepper.fixed_dt;
  o.step_tol = c.stepper.step_tol;
  o.cadence = c.stepper.cadence;
  o.snapshot_cadence = c.output.snapshot_cadence;
  o.guards = c.stepper.guards;
  o.phi = phi;
  o.beta = c.regularization.beta;
  o.constants = c.constants;
  return o;
}

void write_trajectory_csv(const std::vector<EnergyReport>& reports,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "t,L2,lip,H32,H2,A_phi,B_phi,P_phi,mu_phi,Q,besov,holder,logE,dt,"
         "status\n";
  for (const EnergyReport& r : reports) {
    out << format_double(r.t) << ',' << format_double(r.l2) << ','
        << format_double(r.lip) << ',' << format_double(r.hs.at(1.5)) << ','
        << format_double(r.hs.at(2.0)) << ',' << format_double(r.a_phi) << ','
        << format_double(r.b_phi) << ',' << format_double(r.p_phi) << ','
        << format_double(r.mu_phi) << ',' << format_double(r.q_functional)
        << ',' << format_double(r.besov_half_sq) << ','
        << format_double(r.holder_c2beta) << ',' << format_double(r.log_energy)
        << ',' << format_double(r.dt) << ',' << r.status << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a_file(const std::string& path) {
  return fnv1a(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Field read_samples(const Grid& grid, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  RealArray s(grid.n_modes());
  std::string line;
  int j = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (j >= grid.n_modes()) throw IoError(path + ": too many samples");
    try {
      s[j++] = std::stod(line);
    } catch (const std::exception&) {
      throw IoError(path + ": bad sample line '" + line + "'");
    }
  }
  if (j != grid.n_modes()) {
    throw IoError(path + ": expected " + std::to_string(grid.n_modes()) +
                  " samples, got " + std::to_string(j));
  }
  return Field::from_samples(grid, std::move(s));
}

void write_manifest(const RunManifest& m, const std::string& path) {
  json j;
  j["config"] = json::parse(m.config_echo, nullptr, false).is_discarded()
                    ? json(m.config_echo)
                    : json::parse(m.config_echo);
  j["config_hash"] = m.config_hash;
  j["code_version"] = m.code_version;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  j["final_status"] = m.final_status;
  j["artifacts"] = json::array();
  for (const ManifestEntry& e : m.artifacts) {
    j["artifacts"].push_back({{"path", e.path}, {"hash", e.hash}});
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write " + tmp);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw IoError("cannot rename " + tmp + " to " + path);
  }
}

const char* code_version() { return "muskat 1.0.0"; }

}  // namespace muskat
