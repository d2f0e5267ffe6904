#include "muskat/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "muskat/errors.hpp"

namespace muskat {

void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (order < 1) throw ConfigError("gauss_legendre: order must be >= 1");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < order; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
}

namespace {

void append_panel(QuadratureSpec& q, double lo, double hi,
                  const std::vector<double>& gn,
                  const std::vector<double>& gw) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < gn.size(); ++i) {
    q.half_nodes.push_back({mid + half * gn[i], half * gw[i]});
  }
}

}  // namespace

QuadratureSpec QuadratureSpec::dyadic(double delta0, double trunc_A,
                                      int gauss_order) {
  if (!(delta0 > 0.0) || !(trunc_A > delta0)) {
    throw ConfigError("QuadratureSpec::dyadic: need 0 < delta0 < A");
  }
  QuadratureSpec q;
  q.delta0 = delta0;
  q.trunc_A = trunc_A;
  q.gauss_order = gauss_order;
  std::vector<double> gn, gw;
  gauss_legendre(gauss_order, gn, gw);
  // Panels double while narrow; the width is capped so a Gauss rule of
  // moderate order still resolves the data-frequency oscillation of the
  // integrand on the outer panels.
  const double max_width = 0.5;
  double lo = delta0;
  while (lo < trunc_A * (1.0 - 1e-14)) {
    const double hi = std::min(std::min(2.0 * lo, lo + max_width), trunc_A);
    append_panel(q, lo, hi, gn, gw);
    lo = hi;
  }
  return q;
}

QuadratureSpec QuadratureSpec::uniform(double lo, double hi, int panels,
                                       int gauss_order) {
  if (!(lo >= 0.0) || !(hi > lo) || panels < 1) {
    throw ConfigError("QuadratureSpec::uniform: bad panel range");
  }
  QuadratureSpec q;
  q.delta0 = 0.0;  // no Taylor cell: panels start at lo
  q.trunc_A = hi;
  q.gauss_order = gauss_order;
  std::vector<double> gn, gw;
  gauss_legendre(gauss_order, gn, gw);
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    append_panel(q, lo + p * h, lo + (p + 1) * h, gn, gw);
  }
  return q;
}

}  // namespace muskat
