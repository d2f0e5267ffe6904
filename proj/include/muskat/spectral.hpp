#pragma once

#include <functional>
#include <string>

#include "muskat/field.hpp"

namespace muskat {

/// Scalar weight r -> phi(r) used inside |.|^{s,phi} multipliers.
using PhiFn = std::function<double(double)>;

/// Fourier multiplier descriptor. Symbols are functions of xi evaluated
/// mode-wise on the grid.
struct SymbolSpec {
  enum class Kind { abs_power, abs_power_phi, heat, poisson, derivative };

  Kind kind = Kind::abs_power;
  double s = 0.0;     // abs_power / abs_power_phi exponent
  double nu_t = 0.0;  // heat: exp(-nu_t * xi^2)
  double t = 0.0;     // poisson: exp(-t * |xi|)
  int order = 1;      // derivative order
  PhiFn phi;          // abs_power_phi weight

  static SymbolSpec abs_power(double s);
  static SymbolSpec abs_power_phi(double s, PhiFn phi);
  static SymbolSpec heat(double nu_t);
  static SymbolSpec poisson(double t);
  static SymbolSpec derivative(int order = 1);
};

/// Applies the multiplier mode-wise. Output is real-valued; odd derivative
/// orders zero the Nyquist mode.
Field apply_multiplier(const Field& f, const SymbolSpec& sym);

/// x -> f(x - alpha), exact for band-limited fields (phase modulation).
Field shift(const Field& f, double alpha);

/// d/dx via spectral differentiation.
Field derivative(const Field& f, int order = 1);

/// Fourier interpolation onto a grid refined by the given factor.
Field refine(const Field& f, int factor);

/// 2/3-rule truncation: zeroes modes with |k| > N/3.
Field dealias_two_thirds(const Field& f);

/// L2 norm over one period, computed from the spectrum.
double l2_norm(const Field& f);

/// L2 norm computed from the samples (trapezoid on the periodic grid).
double l2_norm_samples(const Field& f);

/// Weighted homogeneous Sobolev norm:
/// sqrt( L * sum_{k != 0} |xi_k|^{2s} phi(|xi_k|)^2 |c_k|^2 ).
/// Pass phi = {} for the plain Hdot^s norm.
double sobolev_phi_norm(const Field& f, double s, const PhiFn& phi = {});

double sobolev_norm(const Field& f, double s);

/// Inhomogeneous H^s norm: sqrt(Hdot^s + L2 squared).
double sobolev_norm_inhom(const Field& f, double s);

/// L2 inner product over one period (spectral).
double inner_product(const Field& a, const Field& b);

/// CSV snapshot (k, xi, re, im) with a header row.
void write_spectrum_csv(const Field& f, const std::string& path);

}  // namespace muskat
