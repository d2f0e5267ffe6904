#pragma once

#include <Eigen/Core>

namespace muskat {

/// Uniform periodic grid on [0, L). Wavenumbers follow the usual DFT layout:
/// index j maps to k = j for j <= N/2 and k = j - N otherwise, so the
/// integer mode range is {-N/2+1, ..., N/2} with the Nyquist mode at +N/2.
class Grid {
 public:
  static Grid make(double length, int n_modes);

  double length() const { return length_; }
  int n_modes() const { return n_modes_; }
  double dx() const { return length_ / n_modes_; }

  double node(int j) const { return j * dx(); }

  /// Signed integer mode for storage index j.
  int mode_index(int j) const {
    return (j <= n_modes_ / 2) ? j : j - n_modes_;
  }

  /// Wavenumber xi_k = 2*pi*k / L for storage index j.
  double wavenumber(int j) const {
    return 2.0 * EIGEN_PI * mode_index(j) / length_;
  }

  /// Largest resolved wavenumber (the Nyquist mode).
  double xi_max() const { return EIGEN_PI * n_modes_ / length_; }

  bool operator==(const Grid& o) const {
    return length_ == o.length_ && n_modes_ == o.n_modes_;
  }

 private:
  Grid(double length, int n_modes) : length_(length), n_modes_(n_modes) {}
  double length_;
  int n_modes_;
};

Grid make_grid(double length, int n_modes);

}  // namespace muskat
