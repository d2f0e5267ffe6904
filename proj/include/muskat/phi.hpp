#pragma once

#include <string>

#include "muskat/field.hpp"
#include "muskat/spectral.hpp"

namespace muskat {

/// Sampled certificate for the weight hypotheses: unbounded growth (H1),
/// doubling bound (H2), log-domination (H3). H1 cannot be certified
/// numerically; it is witnessed as phi(r_max) >= 2 * phi(1) on the grid.
struct PhiCertificate {
  bool h1_pass = false;
  double h2_c0 = 1.0;  // estimated sup phi(2r)/phi(r)
  bool h3_pass = false;
  double grid_min = 0.0;
  double grid_max = 0.0;
  int n_samples = 0;

  bool all_pass() const { return h1_pass && h3_pass && h2_c0 < 1e6; }
};

/// Fourier weight phi: [0,inf) -> [1,inf), nondecreasing on its validated
/// range, with an attached sampled certificate.
struct PhiWeight {
  PhiFn eval;
  double r_max = 0.0;
  PhiCertificate certificate;
  std::string kind;    // "one", "log", "adapted"
  double param = 0.0;  // exponent a for the log family

  double operator()(double r) const { return eval(r); }

  /// Callable view for the spectral layer; empty for phi == 1 so the
  /// unweighted fast path applies.
  PhiFn fn() const { return kind == "one" ? PhiFn{} : eval; }
};

/// The trivial weight phi == 1 (fails H1 by construction; used for the
/// unweighted Sobolev paths).
PhiWeight phi_one();

/// phi_a(r) = (log(4+r)/log 4)^a for a in (0,1]. Normalized so phi_a(0) = 1.
PhiWeight make_log_phi(double a, double r_max = 1e9);

PhiCertificate validate_phi(const PhiFn& phi, double r_max, int n_samples);

/// Data-adapted weight: dyadic tail masses of |xi|^{2s}|f_hat|^2 finance the
/// growth of phi while keeping the weighted norm within a factor of the
/// unweighted one. Zero data falls back to the log weight.
PhiWeight adapt_phi_to_data(const Field& f0, double s = 1.5);

/// CSV table (r, phi) on a geometric grid plus a JSON header file with
/// kind and parameters. Writes <path> and <path>.json.
void write_phi_csv(const PhiWeight& phi, const std::string& path);

}  // namespace muskat
