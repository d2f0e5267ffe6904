#include "muskat/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "muskat/errors.hpp"

namespace muskat {

const std::vector<double>& tracked_orders() {
  static const std::vector<double> orders = {0.5, 1.0,        1.5, 19.0 / 12.0,
                                             1.75, 2.0, 2.5};
  return orders;
}

double sine_integral(double x) {
  const double ax = std::abs(x);
  double si;
  if (ax <= 4.0) {
    // Power series: sum (-1)^n x^{2n+1} / ((2n+1)(2n+1)!)
    double term = ax;
    double sum = ax;
    for (int n = 1; n < 40; ++n) {
      term *= -ax * ax / ((2.0 * n) * (2.0 * n + 1.0));
      sum += term / (2.0 * n + 1.0);
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    si = sum;
  } else {
    // Auxiliary-function rational approximations (Abramowitz & Stegun).
    const double x2 = ax * ax;
    const double f =
        (1.0 / ax) *
        (((((x2 + 38.027264) * x2 + 265.187033) * x2 + 335.677320) * x2 +
          38.102495) /
         ((((x2 + 40.021433) * x2 + 322.624911) * x2 + 570.236280) * x2 +
          157.105423));
    const double g =
        (1.0 / x2) *
        (((((x2 + 42.242855) * x2 + 302.757865) * x2 + 352.018498) * x2 +
          21.821899) /
         ((((x2 + 48.196927) * x2 + 482.485984) * x2 + 1114.978885) * x2 +
          449.690326));
    si = 0.5 * EIGEN_PI - f * std::cos(ax) - g * std::sin(ax);
  }
  return x < 0.0 ? -si : si;
}

PhiEnergies energies(const Field& f, const PhiWeight& phi) {
  const PhiFn fn = phi.fn();
  const double a = sobolev_phi_norm(f, 1.5, fn);
  const double b = sobolev_phi_norm(f, 2.0, fn);
  const double p = sobolev_phi_norm(f, 2.5, fn);
  PhiEnergies e{a * a, b * b, p * p, 1.0};
  e.mu_phi = (e.a_phi > 0.0) ? 1.0 / phi(e.b_phi / e.a_phi) : 1.0 / phi(0.0);
  return e;
}

double q_functional(const Field& f, const PhiWeight& phi) {
  const PhiFn fn = phi.fn();
  PhiFn fn_sq;
  if (fn) fn_sq = [fn](double r) { const double v = fn(r); return v * v; };

  const double h2 = sobolev_norm(f, 2.0);
  const double h74 = sobolev_norm(f, 1.75);
  const double d32_phi = sobolev_phi_norm(f, 1.5, fn);
  const double d74_phi = sobolev_phi_norm(f, 1.75, fn);
  const double d74_phi2 = sobolev_phi_norm(f, 1.75, fn_sq);
  const double h74_in = sobolev_norm_inhom(f, 1.75);
  const double h1912_in = sobolev_norm_inhom(f, 19.0 / 12.0);

  return (h2 + h74 * h74) * d32_phi + d74_phi * h74_in +
         (std::pow(h1912_in, 1.5) + std::sqrt(h74)) * std::sqrt(d74_phi2) * h74;
}

namespace {

// Pointwise spectral evaluation of the order-th derivative at x.
double eval_deriv(const Field& f, double x, int order) {
  const Grid& g = f.grid();
  const ComplexArray& c = f.spectrum();
  std::complex<double> acc = 0.0;
  for (int j = 0; j < g.n_modes(); ++j) {
    const double xi = g.wavenumber(j);
    std::complex<double> m = c[j];
    for (int p = 0; p < order; ++p) m *= std::complex<double>(0.0, xi);
    acc += m * std::exp(std::complex<double>(0.0, xi * x));
  }
  return acc.real();
}

// True L-infinity norm of a band-limited field: coarse search on a 4x
// Fourier-refined grid, then Newton refinement of the critical point
// (f'(x*) = 0), so the sup is independent of grid alignment.
double sup_abs(const Field& f) {
  const Field fine = refine(f, 4);
  const RealArray& s = fine.samples();
  int jmax = 0;
  double best = 0.0;
  for (int j = 0; j < fine.grid().n_modes(); ++j) {
    if (std::abs(s[j]) > best) {
      best = std::abs(s[j]);
      jmax = j;
    }
  }
  if (best == 0.0) return 0.0;
  const double dx = fine.grid().dx();
  double x = fine.grid().node(jmax);
  for (int it = 0; it < 8; ++it) {
    const double g1 = eval_deriv(f, x, 1);
    const double g2 = eval_deriv(f, x, 2);
    if (std::abs(g2) < 1e-14) break;
    const double step = g1 / g2;
    if (!(std::abs(step) < dx)) break;  // stay within the bracketing cell
    x -= step;
  }
  return std::max(best, std::abs(eval_deriv(f, x, 0)));
}

}  // namespace

double besov_half_sq(const Field& f, const QuadratureSpec& quad) {
  const Field fx = derivative(f);
  const Grid& g = f.grid();
  double acc = 0.0;
  for (const QuadNode& node : quad.half_nodes) {
    // ||delta_a f_x||_inf is even in alpha: account for both signs.
    const Field d = Field::from_samples(
        g, fx.samples() - shift(fx, node.alpha).samples());
    const double s = sup_abs(d);
    acc += 2.0 * node.weight * s * s / (node.alpha * node.alpha);
  }
  if (quad.delta0 > 0.0) {
    const double fxx_sup = sup_abs(derivative(f, 2));
    acc += 2.0 * quad.delta0 * fxx_sup * fxx_sup;
  }
  return acc;
}

double holder_c2beta(const Field& f, double beta) {
  if (!(beta > 0.0 && beta < 0.5)) {
    throw ConfigError("holder_c2beta: beta must lie in (0,1/2)");
  }
  const Grid& g = f.grid();
  const Field fxx = derivative(f, 2);
  double best = 0.0;
  const double half_l = g.length() / 2.0;
  // Geometrically graded shifts, eight per octave: the sup over shifts is
  // then within ~ beta * log(2)/8 of the continuum sup.
  const double ratio = std::pow(2.0, 1.0 / 8.0);
  for (double alpha = g.dx() / 4.0; alpha <= half_l; alpha *= ratio) {
    const Field d =
        Field::from_samples(g, fxx.samples() - shift(fxx, alpha).samples());
    best = std::max(best, sup_abs(d) / std::pow(alpha, beta));
  }
  return best;
}

double log_energy(const Field& f, const QuadratureSpec& quad) {
  const Grid& g = f.grid();
  const double dx = g.dx();
  const RealArray& s = f.samples();
  double acc = 0.0;
  for (const QuadNode& node : quad.half_nodes) {
    // The x-integral is even in alpha (the sample multiset coincides).
    const RealArray sl = (s - shift(f, node.alpha).samples()) / node.alpha;
    acc += 2.0 * node.weight * 0.5 * dx * (1.0 + sl.square()).log().sum();
  }
  if (quad.delta0 > 0.0) {
    const RealArray fx = derivative(f).samples();
    acc += 2.0 * quad.delta0 * 0.5 * dx * (1.0 + fx.square()).log().sum();
  }
  // Tail closure for |alpha| > A via the quadratic asymptotics
  // log(1+u) ~ u: per mode, 2 [ (1-cos(xi A))/A + xi (pi/2 - Si(xi A)) ].
  const ComplexArray& c = f.spectrum();
  const double a_trunc = quad.trunc_A;
  double tail = 0.0;
  for (int j = 0; j < g.n_modes(); ++j) {
    if (g.mode_index(j) == 0) continue;
    const double xi = std::abs(g.wavenumber(j));
    const double m = 2.0 * ((1.0 - std::cos(xi * a_trunc)) / a_trunc +
                            xi * (0.5 * EIGEN_PI - sine_integral(xi * a_trunc)));
    tail += std::norm(c[j]) * m;
  }
  acc += g.length() * tail;
  return acc;
}

double smallness_margin(const Field& f0, const ConstantSet& constants) {
  const double k = 1.0 + 16.0 * std::pow(constants.c2 / constants.c1, 2.0);
  const double lip = lipschitz_seminorm(f0);
  const double h32 = sobolev_norm(f0, 1.5);
  return 1.0 - 2.0 * std::sqrt(k + constants.c0 / constants.c1) *
                   std::pow(2.0 + lip, 2.0) * h32;
}

double lipschitz_seminorm(const Field& f) { return sup_abs(derivative(f)); }

EnergyReport compute_report(const Field& f, const PhiWeight& phi,
                            const QuadratureSpec& quad, double beta,
                            const ConstantSet& constants) {
  EnergyReport r;
  r.l2 = l2_norm(f);
  r.lip = lipschitz_seminorm(f);
  for (double s : tracked_orders()) r.hs[s] = sobolev_norm(f, s);
  const PhiEnergies e = energies(f, phi);
  r.a_phi = e.a_phi;
  r.b_phi = e.b_phi;
  r.p_phi = e.p_phi;
  r.mu_phi = e.mu_phi;
  r.q_functional = q_functional(f, phi);
  r.besov_half_sq = besov_half_sq(f, quad);
  r.holder_c2beta = holder_c2beta(f, beta);
  r.log_energy = log_energy(f, quad);
  r.smallness_margin = smallness_margin(f, constants);
  return r;
}

}  // namespace muskat
