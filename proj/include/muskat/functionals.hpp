#pragma once

#include <map>
#include <string>

#include "muskat/field.hpp"
#include "muskat/phi.hpp"
#include "muskat/quadrature.hpp"
#include "muskat/spectral.hpp"

namespace muskat {

/// Constants entering the Lipschitz-budget and energy inequalities. The
/// originals are existential; defaults are calibrated, never taken from
/// closed form.
struct ConstantSet {
  double c0 = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  std::string provenance = "default";  // default | calibrated | user
};

/// All norms and functionals tracked along a trajectory.
struct EnergyReport {
  double t = 0.0;
  double l2 = 0.0;
  double lip = 0.0;
  std::map<double, double> hs;  // s -> Hdot^s seminorm
  double a_phi = 0.0;
  double b_phi = 0.0;
  double p_phi = 0.0;
  double mu_phi = 1.0;
  double q_functional = 0.0;
  double besov_half_sq = 0.0;
  double holder_c2beta = 0.0;
  double log_energy = 0.0;
  double smallness_margin = 0.0;
  double dt = 0.0;
  std::string status = "running";
};

/// The tracked fractional orders: 1/2, 1, 3/2, 19/12, 7/4, 2, 5/2.
const std::vector<double>& tracked_orders();

struct PhiEnergies {
  double a_phi;
  double b_phi;
  double p_phi;
  double mu_phi;
};

/// Squared weighted norms at orders 3/2, 2, 5/2 and the gain factor
/// mu = 1/phi(B/A) (with the continuous extension mu = 1/phi(0) at A = 0).
PhiEnergies energies(const Field& f, const PhiWeight& phi);

double q_functional(const Field& f, const PhiWeight& phi);

/// int ||delta_a f_x||_Linf^2 da / a^2 over the symmetric panels.
double besov_half_sq(const Field& f, const QuadratureSpec& quad);

/// sup over geometrically graded shifts (8 per octave, from dx/4 to L/2) of
/// ||delta_a f_xx||_Linf / a^beta.
double holder_c2beta(const Field& f, double beta);

/// Double quadrature of log sqrt(1 + slope^2). Includes a closed-form tail
/// closure beyond the truncation using the quadratic spectral asymptotics,
/// so the L2 dissipation identity holds to quadrature accuracy.
double log_energy(const Field& f, const QuadratureSpec& quad);

/// 1 - 2 (K + C0/C1)^{1/2} (2 + lip(f0))^2 ||f0||_{H^{3/2}_dot},
/// K = 1 + 16 (C2/C1)^2. Positive iff the smallness hypothesis holds.
double smallness_margin(const Field& f0, const ConstantSet& constants);

/// max |f_x|: coarse search on a 4x Fourier-refined grid, then Newton
/// refinement of the critical point, so the value is grid-alignment free.
double lipschitz_seminorm(const Field& f);

/// Full report at one time.
EnergyReport compute_report(const Field& f, const PhiWeight& phi,
                            const QuadratureSpec& quad, double beta,
                            const ConstantSet& constants);

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

}  // namespace muskat
