#include "muskat/field.hpp"

#include <unsupported/Eigen/FFT>

#include "muskat/errors.hpp"

namespace muskat {

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

ComplexArray dft(const RealArray& samples) {
  const Eigen::Index n = samples.size();
  std::vector<std::complex<double>> in(n), out(n);
  for (Eigen::Index j = 0; j < n; ++j) in[j] = samples[j];
  fft_engine().fwd(out, in);
  ComplexArray c(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index j = 0; j < n; ++j) c[j] = out[j] * inv_n;
  return c;
}

RealArray idft(const ComplexArray& spectrum) {
  const Eigen::Index n = spectrum.size();
  std::vector<std::complex<double>> in(n), out(n);
  for (Eigen::Index j = 0; j < n; ++j) in[j] = spectrum[j];
  fft_engine().inv(out, in);
  RealArray f(n);
  // Eigen's inv applies 1/N; undo it since our coefficients carry the 1/N.
  const double scale = static_cast<double>(n);
  for (Eigen::Index j = 0; j < n; ++j) f[j] = out[j].real() * scale;
  return f;
}

Field Field::from_samples(const Grid& grid, RealArray samples) {
  if (samples.size() != grid.n_modes()) {
    throw ConfigError("sample count does not match grid");
  }
  return Field(grid, std::move(samples));
}

Field Field::from_spectrum(const Grid& grid, const ComplexArray& spectrum) {
  if (spectrum.size() != grid.n_modes()) {
    throw ConfigError("spectrum size does not match grid");
  }
  Field f(grid, idft(spectrum));
  f.spectrum_ = spectrum;
  return f;
}

Field Field::zero(const Grid& grid) {
  return Field(grid, RealArray::Zero(grid.n_modes()));
}

const ComplexArray& Field::spectrum() const {
  if (!spectrum_) spectrum_ = dft(samples_);
  return *spectrum_;
}

}  // namespace muskat
