#pragma once

#include <memory>
#include <vector>

#include "muskat/field.hpp"

namespace muskat {

/// Even C^2 bump: identically 1 on |y| <= 1/4, a quintic-smoothstep descent
/// on [1/4, rho], zero beyond. rho is solved so the integral is exactly 1.
/// A table of the transform chi_hat(eta) is built once for mollifier use,
/// clipped into [-1, 1].
class BumpSpec {
 public:
  static std::shared_ptr<const BumpSpec> make();

  double plateau_radius() const { return 0.25; }
  double support_radius() const { return rho_; }
  int smoothstep_order() const { return 5; }

  double chi(double y) const;

  /// chi_hat(eta) = int chi(y) exp(-i eta y) dy, real and even.
  double chi_hat(double eta) const;

  /// Integral of chi over the line (should be 1 to quadrature accuracy).
  double integral() const;

 private:
  BumpSpec() = default;
  void build_table();

  double rho_ = 0.0;
  double d_eta_ = 0.0;
  std::vector<double> hat_;  // chi_hat at eta = j * d_eta_, j >= 0
};

/// Pointwise evaluation helper matching the spec's free-function surface.
double bump_chi(double y, const BumpSpec& spec);

/// Spectral mollification: f0_hat(xi) * chi_hat(eps * xi).
Field mollify_initial(const Field& f0, double eps, const BumpSpec& spec);

/// Convenience overload using the shared default bump.
Field mollify_initial(const Field& f0, double eps);

}  // namespace muskat
