#include "muskat/bump.hpp"

#include <cmath>
#include <mutex>

#include "muskat/errors.hpp"
#include "muskat/quadrature.hpp"

namespace muskat {

namespace {

// Quintic smoothstep: C^2 with vanishing first and second derivatives at
// both ends.
double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double chi_profile(double y, double rho) {
  const double a = std::abs(y);
  if (a <= 0.25) return 1.0;
  if (a >= rho) return 0.0;
  return 1.0 - smoothstep((a - 0.25) / (rho - 0.25));
}

double chi_integral(double rho) {
  std::vector<double> gn, gw;
  gauss_legendre(32, gn, gw);
  const double mid = 0.5 * (0.25 + rho);
  const double half = 0.5 * (rho - 0.25);
  double acc = 0.25;  // plateau on [0, 1/4]
  for (std::size_t i = 0; i < gn.size(); ++i) {
    acc += half * gw[i] * chi_profile(mid + half * gn[i], rho);
  }
  return 2.0 * acc;  // even extension
}

}  // namespace

std::shared_ptr<const BumpSpec> BumpSpec::make() {
  static std::shared_ptr<const BumpSpec> cached = [] {
    auto spec = std::shared_ptr<BumpSpec>(new BumpSpec());
    // Solve integral(rho) = 1 on (1/4, 2) by bisection.
    double lo = 0.26, hi = 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (chi_integral(mid) < 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    spec->rho_ = 0.5 * (lo + hi);
    if (spec->rho_ > 2.0 - 1e-9) {
      throw ConfigError("BumpSpec: support radius escaped the mandated range");
    }
    spec->build_table();
    return std::shared_ptr<const BumpSpec>(spec);
  }();
  return cached;
}

void BumpSpec::build_table() {
  // Sample chi on a period P >> support and read chi_hat off the DFT.
  // Aliasing is negligible: chi_hat decays like eta^-4.
  const int m = 1 << 18;
  const double period = 128.0;
  RealArray samples(m);
  for (int j = 0; j < m; ++j) {
    double y = j * (period / m);
    if (y > period / 2) y -= period;
    samples[j] = chi_profile(y, rho_);
  }
  const ComplexArray c = dft(samples);
  d_eta_ = 2.0 * EIGEN_PI / period;
  hat_.resize(m / 2 + 1);
  for (int k = 0; k <= m / 2; ++k) {
    double v = c[k].real() * period;
    if (v > 1.0) v = 1.0;  // mollification must not amplify modes
    if (v < -1.0) v = -1.0;
    hat_[static_cast<std::size_t>(k)] = v;
  }
}

double BumpSpec::chi(double y) const { return chi_profile(y, rho_); }

double BumpSpec::chi_hat(double eta) const {
  const double a = std::abs(eta);
  const double pos = a / d_eta_;
  const auto idx = static_cast<std::size_t>(pos);
  if (idx + 1 >= hat_.size()) return 0.0;
  const double t = pos - idx;
  return (1.0 - t) * hat_[idx] + t * hat_[idx + 1];
}

double BumpSpec::integral() const { return chi_integral(rho_); }

double bump_chi(double y, const BumpSpec& spec) { return spec.chi(y); }

Field mollify_initial(const Field& f0, double eps, const BumpSpec& spec) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw ConfigError("mollify_initial: eps must lie in (0,1]");
  }
  const Grid& g = f0.grid();
  const ComplexArray& c = f0.spectrum();
  ComplexArray out(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) {
    out[j] = c[j] * spec.chi_hat(eps * g.wavenumber(j));
  }
  return Field::from_spectrum(g, out);
}

Field mollify_initial(const Field& f0, double eps) {
  return mollify_initial(f0, eps, *BumpSpec::make());
}

}  // namespace muskat
