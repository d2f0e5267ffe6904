#pragma once

#include <complex>
#include <optional>

#include <Eigen/Core>

#include "muskat/grid.hpp"

namespace muskat {

using RealArray = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;

/// A real periodic function on a Grid. Holds collocation samples and a lazily
/// computed spectrum c_k = (1/N) sum_j f_j exp(-2*pi*i*k*j/N), so that
/// f(x) = sum_k c_k exp(i*xi_k*x) for band-limited data.
///
/// Fields are immutable once constructed; all operations return new Fields.
class Field {
 public:
  static Field from_samples(const Grid& grid, RealArray samples);

  /// Builds the field whose spectrum is the given coefficient array
  /// (DFT storage order). The imaginary part of the synthesized samples is
  /// discarded; callers are expected to pass conjugate-symmetric data.
  static Field from_spectrum(const Grid& grid, const ComplexArray& spectrum);

  static Field zero(const Grid& grid);

  const Grid& grid() const { return grid_; }
  const RealArray& samples() const { return samples_; }
  const ComplexArray& spectrum() const;

  bool all_finite() const { return samples_.allFinite(); }

 private:
  Field(const Grid& grid, RealArray samples)
      : grid_(grid), samples_(std::move(samples)) {}

  Grid grid_;
  RealArray samples_;
  mutable std::optional<ComplexArray> spectrum_;
};

/// Forward transform, normalized by 1/N.
ComplexArray dft(const RealArray& samples);

/// Inverse of dft(); returns the real part of the synthesis.
RealArray idft(const ComplexArray& spectrum);

}  // namespace muskat
