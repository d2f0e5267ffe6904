#include "muskat/phi.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <vector>

#include "muskat/errors.hpp"
#include "muskat/numfmt.hpp"

namespace muskat {

namespace {

const double kLog4 = std::log(4.0);

double log_phi_value(double a, double r) {
  return std::pow(std::log(4.0 + r) / kLog4, a);
}

}  // namespace

PhiWeight phi_one() {
  PhiWeight w;
  w.eval = [](double) { return 1.0; };
  w.r_max = 1e9;
  w.kind = "one";
  w.certificate = PhiCertificate{};  // H1 fails for a constant weight
  w.certificate.h3_pass = true;
  w.certificate.h2_c0 = 1.0;
  return w;
}

PhiWeight make_log_phi(double a, double r_max) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw ConfigError("make_log_phi: a must lie in (0,1], got " +
                      std::to_string(a));
  }
  PhiWeight w;
  w.eval = [a](double r) { return log_phi_value(a, r); };
  w.r_max = r_max;
  w.kind = "log";
  w.param = a;
  w.certificate = validate_phi(w.eval, r_max, 512);
  return w;
}

PhiCertificate validate_phi(const PhiFn& phi, double r_max, int n_samples) {
  if (!(r_max > 1.0)) throw ConfigError("validate_phi: r_max must exceed 1");
  if (n_samples < 64) throw ConfigError("validate_phi: n_samples must be >= 64");

  PhiCertificate cert;
  cert.grid_min = 1e-3;
  cert.grid_max = r_max;
  cert.n_samples = n_samples;

  const double ratio = std::pow(r_max / cert.grid_min,
                                1.0 / static_cast<double>(n_samples - 1));
  std::vector<double> r(n_samples), v(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    r[i] = cert.grid_min * std::pow(ratio, i);
    v[i] = phi(r[i]);
    if (!std::isfinite(v[i])) {
      throw WeightError("validate_phi: non-finite phi at r = " +
                        std::to_string(r[i]));
    }
  }

  // H2: doubling constant over the sampled range.
  double c0 = 1.0;
  for (int i = 0; i < n_samples; ++i) {
    const double p2 = phi(2.0 * r[i]);
    if (!std::isfinite(p2)) {
      throw WeightError("validate_phi: non-finite phi at r = " +
                        std::to_string(2.0 * r[i]));
    }
    c0 = std::max(c0, p2 / v[i]);
  }
  cert.h2_c0 = c0;

  // H3: phi(r)/log(4+r) nonincreasing (tolerate roundoff-level growth).
  bool h3 = true;
  double prev = v[0] / std::log(4.0 + r[0]);
  for (int i = 1; i < n_samples; ++i) {
    const double cur = v[i] / std::log(4.0 + r[i]);
    if (cur > prev * (1.0 + 1e-12)) {
      h3 = false;
      break;
    }
    prev = cur;
  }
  cert.h3_pass = h3;

  // H1 witness: growth by at least a factor 2 over the validated range.
  cert.h1_pass = phi(r_max) >= 2.0 * phi(1.0);
  return cert;
}

PhiWeight adapt_phi_to_data(const Field& f0, double s) {
  const Grid& g = f0.grid();
  const ComplexArray& c = f0.spectrum();
  const int n = g.n_modes();

  // Dyadic shell masses m_j over |xi| in [2^j, 2^{j+1}), j >= 0; mass below
  // |xi| = 1 is folded into shell 0.
  const int max_shell =
      std::max(1, static_cast<int>(std::ceil(std::log2(g.xi_max()))) + 1);
  std::vector<double> mass(max_shell, 0.0);
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    if (g.mode_index(j) == 0) continue;
    const double r = std::abs(g.wavenumber(j));
    const double m = std::pow(r, 2.0 * s) * std::norm(c[j]);
    int shell = (r < 1.0) ? 0 : static_cast<int>(std::floor(std::log2(r)));
    shell = std::min(shell, max_shell - 1);
    mass[shell] += m;
    total += m;
  }
  if (!(total > 0.0)) return make_log_phi(1.0);

  // Tail fractions finance the growth: phi on shell j targets
  // (tail_j / total)^{-1/4}, capped by the H3 envelope and forced monotone.
  std::vector<double> knot_r(max_shell), knot_v(max_shell);
  double tail = total;
  double running = 1.0;
  for (int j = 0; j < max_shell; ++j) {
    knot_r[j] = std::pow(2.0, j);
    double target = std::pow(tail / total, -0.25);
    target = std::max(1.0, std::max(running, target));
    if (j > 0) {
      // Cap the knot ratio so phi(r)/log(4+r) stays nonincreasing.
      const double envelope =
          knot_v[j - 1] * std::log(4.0 + knot_r[j]) / std::log(4.0 + knot_r[j - 1]);
      target = std::min(target, envelope);
    }
    knot_v[j] = target;
    running = target;
    tail -= mass[j];
    if (tail < 0.0) tail = 0.0;
  }

  auto knots_r = std::make_shared<std::vector<double>>(std::move(knot_r));
  auto knots_v = std::make_shared<std::vector<double>>(std::move(knot_v));
  PhiFn eval = [knots_r, knots_v](double r) {
    const auto& rs = *knots_r;
    const auto& vs = *knots_v;
    if (r <= rs.front()) return vs.front();
    if (r >= rs.back()) {
      // Extend along the H3 envelope so the weight keeps growing.
      return vs.back() * std::log(4.0 + r) / std::log(4.0 + rs.back());
    }
    const auto it = std::upper_bound(rs.begin(), rs.end(), r);
    const size_t hi = static_cast<size_t>(it - rs.begin());
    const size_t lo = hi - 1;
    // Linear in log(4+r): preserves monotonicity and the H3 envelope
    // between knots given the capped knot ratios.
    const double t = (std::log(4.0 + r) - std::log(4.0 + rs[lo])) /
                     (std::log(4.0 + rs[hi]) - std::log(4.0 + rs[lo]));
    return vs[lo] + t * (vs[hi] - vs[lo]);
  };

  PhiWeight w;
  w.eval = std::move(eval);
  w.r_max = g.xi_max();
  w.kind = "adapted";
  w.certificate = validate_phi(w.eval, std::max(2.0, g.xi_max()), 512);
  return w;
}

void write_phi_csv(const PhiWeight& phi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  out << "r,phi\n";
  const int n = 256;
  const double r_min = 1e-3;
  const double ratio = std::pow(phi.r_max / r_min, 1.0 / (n - 1));
  for (int i = 0; i < n; ++i) {
    const double r = r_min * std::pow(ratio, i);
    out << format_double(r) << ',' << format_double(phi(r)) << '\n';
  }
  std::ofstream hdr(path + ".json");
  if (!hdr) throw IoError("cannot open " + path + ".json");
  hdr << "{\n  \"kind\": \"" << phi.kind << "\",\n  \"param\": "
      << format_double(phi.param) << ",\n  \"r_max\": "
      << format_double(phi.r_max) << "\n}\n";
}

}  // namespace muskat
