#include "muskat/spectral.hpp"

#include <cmath>
#include <complex>
#include <fstream>

#include "muskat/errors.hpp"
#include "muskat/numfmt.hpp"

namespace muskat {

SymbolSpec SymbolSpec::abs_power(double s) {
  SymbolSpec sym;
  sym.kind = Kind::abs_power;
  sym.s = s;
  return sym;
}

SymbolSpec SymbolSpec::abs_power_phi(double s, PhiFn phi) {
  SymbolSpec sym;
  sym.kind = Kind::abs_power_phi;
  sym.s = s;
  sym.phi = std::move(phi);
  return sym;
}

SymbolSpec SymbolSpec::heat(double nu_t) {
  SymbolSpec sym;
  sym.kind = Kind::heat;
  sym.nu_t = nu_t;
  return sym;
}

SymbolSpec SymbolSpec::poisson(double t) {
  SymbolSpec sym;
  sym.kind = Kind::poisson;
  sym.t = t;
  return sym;
}

SymbolSpec SymbolSpec::derivative(int order) {
  SymbolSpec sym;
  sym.kind = Kind::derivative;
  sym.order = order;
  return sym;
}

namespace {

void validate_symbol(const SymbolSpec& sym) {
  switch (sym.kind) {
    case SymbolSpec::Kind::abs_power:
      if (sym.s < 0) throw ConfigError("abs_power: s must be >= 0");
      break;
    case SymbolSpec::Kind::abs_power_phi:
      if (sym.s < 0) throw ConfigError("abs_power_phi: s must be >= 0");
      if (!sym.phi) throw ConfigError("abs_power_phi: missing phi");
      break;
    case SymbolSpec::Kind::heat:
      if (sym.nu_t < 0) throw ConfigError("heat: nu*t must be >= 0");
      break;
    case SymbolSpec::Kind::poisson:
      if (sym.t < 0) throw ConfigError("poisson: t must be >= 0");
      break;
    case SymbolSpec::Kind::derivative:
      if (sym.order < 1) throw ConfigError("derivative: order must be >= 1");
      break;
  }
}

double real_symbol(const SymbolSpec& sym, double xi) {
  const double r = std::abs(xi);
  switch (sym.kind) {
    case SymbolSpec::Kind::abs_power:
      return std::pow(r, sym.s);
    case SymbolSpec::Kind::abs_power_phi:
      return std::pow(r, sym.s) * sym.phi(r);
    case SymbolSpec::Kind::heat:
      return std::exp(-sym.nu_t * xi * xi);
    case SymbolSpec::Kind::poisson:
      return std::exp(-sym.t * r);
    default:
      return 0.0;
  }
}

}  // namespace

Field apply_multiplier(const Field& f, const SymbolSpec& sym) {
  validate_symbol(sym);
  const Grid& g = f.grid();
  const ComplexArray& c = f.spectrum();
  const int n = g.n_modes();
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(c[j].real()) || !std::isfinite(c[j].imag())) {
      throw NumericError("apply_multiplier: non-finite spectrum at mode index " +
                         std::to_string(g.mode_index(j)));
    }
  }

  ComplexArray out(n);
  if (sym.kind == SymbolSpec::Kind::derivative) {
    const std::complex<double> i_unit(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
      if (sym.order % 2 == 1 && j == n / 2) {
        out[j] = 0.0;  // odd symbol: drop the Nyquist mode
        continue;
      }
      out[j] = c[j] * std::pow(i_unit * g.wavenumber(j), sym.order);
    }
  } else {
    for (int j = 0; j < n; ++j) {
      out[j] = c[j] * real_symbol(sym, g.wavenumber(j));
    }
  }
  return Field::from_spectrum(g, out);
}

Field shift(const Field& f, double alpha) {
  if (!std::isfinite(alpha)) throw ConfigError("shift: alpha must be finite");
  if (alpha == 0.0) return f;
  const Grid& g = f.grid();
  const ComplexArray& c = f.spectrum();
  const int n = g.n_modes();
  ComplexArray out(n);
  for (int j = 0; j < n; ++j) {
    const double xi = g.wavenumber(j);
    if (j == n / 2) {
      // Keep the shifted field real: the Nyquist mode picks up cos only.
      out[j] = c[j] * std::cos(xi * alpha);
    } else {
      out[j] = c[j] * std::exp(std::complex<double>(0.0, -xi * alpha));
    }
  }
  return Field::from_spectrum(g, out);
}

Field derivative(const Field& f, int order) {
  return apply_multiplier(f, SymbolSpec::derivative(order));
}

Field refine(const Field& f, int factor) {
  if (factor < 1) throw ConfigError("refine: factor must be >= 1");
  if (factor == 1) return f;
  const Grid& g = f.grid();
  const int n = g.n_modes();
  const int m = n * factor;
  const Grid fine = Grid::make(g.length(), m);
  const ComplexArray& c = f.spectrum();
  ComplexArray out = ComplexArray::Zero(m);
  for (int j = 0; j < n; ++j) {
    const int k = g.mode_index(j);
    if (k == n / 2) {
      // Split the Nyquist coefficient symmetrically.
      out[k] += 0.5 * c[j];
      out[m - k] += 0.5 * std::conj(c[j]);
    } else {
      out[(k + m) % m] = c[j];
    }
  }
  return Field::from_spectrum(fine, out);
}

Field dealias_two_thirds(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.n_modes();
  const int cutoff = n / 3;
  const ComplexArray& c = f.spectrum();
  ComplexArray out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = (std::abs(g.mode_index(j)) > cutoff) ? 0.0 : c[j];
  }
  return Field::from_spectrum(g, out);
}

double l2_norm(const Field& f) {
  const ComplexArray& c = f.spectrum();
  const double L = f.grid().length();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < c.size(); ++j) acc += std::norm(c[j]);
  return std::sqrt(L * acc);
}

double l2_norm_samples(const Field& f) {
  const RealArray& s = f.samples();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) acc += s[j] * s[j];
  return std::sqrt(f.grid().dx() * acc);
}

double sobolev_phi_norm(const Field& f, double s, const PhiFn& phi) {
  if (s < 0) throw ConfigError("sobolev_phi_norm: s must be >= 0");
  const Grid& g = f.grid();
  const ComplexArray& c = f.spectrum();
  const int n = g.n_modes();
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    if (g.mode_index(j) == 0) continue;
    const double r = std::abs(g.wavenumber(j));
    double w = std::pow(r, 2.0 * s);
    if (phi) {
      const double p = phi(r);
      w *= p * p;
    }
    acc += w * std::norm(c[j]);
  }
  return std::sqrt(g.length() * acc);
}

double sobolev_norm(const Field& f, double s) { return sobolev_phi_norm(f, s); }

double sobolev_norm_inhom(const Field& f, double s) {
  const double h = sobolev_norm(f, s);
  const double l2 = l2_norm(f);
  return std::sqrt(h * h + l2 * l2);
}

double inner_product(const Field& a, const Field& b) {
  const ComplexArray& ca = a.spectrum();
  const ComplexArray& cb = b.spectrum();
  const double L = a.grid().length();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < ca.size(); ++j) {
    acc += (std::conj(ca[j]) * cb[j]).real();
  }
  return L * acc;
}

void write_spectrum_csv(const Field& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  out << "k,xi,re,im\n";
  const Grid& g = f.grid();
  const ComplexArray& c = f.spectrum();
  for (int j = 0; j < g.n_modes(); ++j) {
    out << g.mode_index(j) << ',' << format_double(g.wavenumber(j)) << ','
        << format_double(c[j].real()) << ',' << format_double(c[j].imag())
        << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace muskat
