#pragma once

#include <memory>

#include "muskat/bump.hpp"
#include "muskat/field.hpp"
#include "muskat/quadrature.hpp"
#include "muskat/spectral.hpp"

namespace muskat {

/// Parameters of the regularized evolution: small-alpha cutoff eps,
/// vanishing viscosity nu = 1/|log eps|, Holder exponent for the budget
/// checks, and the bump profile.
struct RegularizationParams {
  double eps = 0.0;  // 0 disables the regularization
  double beta = 0.3;
  std::shared_ptr<const BumpSpec> bump = BumpSpec::make();

  bool enabled() const { return eps > 0.0; }
  double nu() const {
    return (eps > 0.0 && eps < 1.0) ? 1.0 / std::abs(std::log(eps)) : 0.0;
  }

  static RegularizationParams off() { return RegularizationParams{}; }
  static RegularizationParams with_eps(double eps, double beta = 0.3);
};

/// Finite slope (f(x) - f(x-alpha)) / alpha via the exact spectral shift.
Field slope_field(const Field& f, double alpha);

/// T(f)g = -(1/pi) int dx(slope_a g) * (slope_a f)^2 / (1+(slope_a f)^2) da.
/// Graded panels plus a Taylor cell using the alpha -> 0 limit values.
/// The node reduction runs in |alpha|-ascending order, + before -.
Field apply_T(const Field& f, const Field& g, const QuadratureSpec& quad,
              bool dealias = true);

/// Small-alpha remainder R_eps(f): the cutoff part of the integrand,
/// supported on |alpha| <= 2 eps.
Field apply_R_eps(const Field& f, const RegularizationParams& params,
                  int gauss_order = 8);

/// Full Muskat right-hand side: -|D|f (spectral) + T(f)f (quadrature).
Field rhs_full(const Field& f, const QuadratureSpec& quad, bool dealias = true);

/// Regularized right-hand side: nu f_xx - |D|f + T(f)f + R_eps(f).
Field rhs_regularized(const Field& f, const RegularizationParams& params,
                      const QuadratureSpec& quad, bool dealias = true);

/// Principal symbol coefficient f_x^2 / (1 + f_x^2) (diagnostics only).
Field principal_symbol_field(const Field& f);

/// Validates a quadrature against a grid (A <= L/2, symmetric pairing).
void check_quadrature(const QuadratureSpec& quad, const Grid& grid);

}  // namespace muskat
