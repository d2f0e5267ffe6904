#include "muskat/rhs.hpp"

#include <cmath>
#include <string>

#include "muskat/errors.hpp"

namespace muskat {

RegularizationParams RegularizationParams::with_eps(double eps, double beta) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ConfigError("RegularizationParams: eps must lie in (0,1]");
  }
  if (!(beta > 0.0 && beta < 0.5)) {
    throw ConfigError("RegularizationParams: beta must lie in (0,1/2)");
  }
  RegularizationParams p;
  p.eps = eps;
  p.beta = beta;
  return p;
}

Field slope_field(const Field& f, double alpha) {
  if (alpha == 0.0) {
    throw ConfigError("slope_field: alpha must be nonzero (use f_x for the limit)");
  }
  const Field shifted = shift(f, alpha);
  return Field::from_samples(f.grid(),
                             (f.samples() - shifted.samples()) / alpha);
}

void check_quadrature(const QuadratureSpec& quad, const Grid& grid) {
  if (quad.half_nodes.empty()) {
    throw ConfigError("quadrature has no nodes");
  }
  if (!quad.strict_pairing) {
    throw ConfigError("quadrature must use strict +/- alpha pairing");
  }
  if (quad.trunc_A > grid.length() / 2.0 + 1e-12) {
    throw ConfigError("quadrature truncation A exceeds L/2");
  }
}

namespace {

// Shared core for the T(f)g reduction. Sum order is fixed: nodes ascending
// in |alpha|, + before -, Taylor cell last.
RealArray accumulate_T(const Field& f, const Field& g,
                       const QuadratureSpec& quad) {
  const Grid& grid = f.grid();
  const int n = grid.n_modes();
  const Field gx = derivative(g);
  RealArray acc = RealArray::Zero(n);
  for (const QuadNode& node : quad.half_nodes) {
    for (const double sign : {1.0, -1.0}) {
      const double alpha = sign * node.alpha;
      const RealArray sf = slope_field(f, alpha).samples();
      const RealArray sg = slope_field(gx, alpha).samples();
      acc += node.weight * (sg * sf.square() / (1.0 + sf.square()));
    }
  }
  if (quad.delta0 > 0.0) {
    const RealArray fx = derivative(f).samples();
    const RealArray gxx = derivative(g, 2).samples();
    acc += 2.0 * quad.delta0 * (gxx * fx.square() / (1.0 + fx.square()));
  }
  return acc;
}

}  // namespace

Field apply_T(const Field& f, const Field& g, const QuadratureSpec& quad,
              bool dealias) {
  if (!(f.grid() == g.grid())) throw ConfigError("apply_T: grid mismatch");
  check_quadrature(quad, f.grid());
  RealArray acc = accumulate_T(f, g, quad);
  acc *= -1.0 / EIGEN_PI;
  if (!acc.allFinite()) throw NumericError("apply_T: non-finite result");
  Field out = Field::from_samples(f.grid(), std::move(acc));
  return dealias ? dealias_two_thirds(out) : out;
}

Field apply_R_eps(const Field& f, const RegularizationParams& params,
                  int gauss_order) {
  if (!params.enabled()) return Field::zero(f.grid());
  const double eps = params.eps;
  const BumpSpec& bump = *params.bump;
  const double hi = bump.support_radius() * eps;  // chi(alpha/eps) support
  const QuadratureSpec quad = QuadratureSpec::uniform(0.0, hi, 8, gauss_order);

  const Grid& grid = f.grid();
  const Field fx = derivative(f);
  RealArray acc = RealArray::Zero(grid.n_modes());
  for (const QuadNode& node : quad.half_nodes) {
    const double cut = bump.chi(node.alpha / eps);
    if (cut == 0.0) continue;
    for (const double sign : {1.0, -1.0}) {
      const double alpha = sign * node.alpha;
      const RealArray sf = slope_field(f, alpha).samples();
      const RealArray sfx = slope_field(fx, alpha).samples();
      acc += (node.weight * cut) * (sfx / (1.0 + sf.square()));
    }
  }
  acc *= -1.0 / EIGEN_PI;
  if (!acc.allFinite()) throw NumericError("apply_R_eps: non-finite result");
  return Field::from_samples(grid, std::move(acc));
}

Field rhs_full(const Field& f, const QuadratureSpec& quad, bool dealias) {
  const Field linear = apply_multiplier(f, SymbolSpec::abs_power(1.0));
  const Field nonlinear = apply_T(f, f, quad, dealias);
  return Field::from_samples(f.grid(), nonlinear.samples() - linear.samples());
}

Field rhs_regularized(const Field& f, const RegularizationParams& params,
                      const QuadratureSpec& quad, bool dealias) {
  const Field base = rhs_full(f, quad, dealias);
  RealArray acc = base.samples();
  if (params.enabled()) {
    acc += params.nu() * derivative(f, 2).samples();
    acc += apply_R_eps(f, params).samples();
  }
  return Field::from_samples(f.grid(), std::move(acc));
}

Field principal_symbol_field(const Field& f) {
  const RealArray fx = derivative(f).samples();
  return Field::from_samples(f.grid(), fx.square() / (1.0 + fx.square()));
}

}  // namespace muskat
