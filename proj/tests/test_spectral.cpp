#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "muskat/errors.hpp"
#include "muskat/field.hpp"
#include "muskat/spectral.hpp"

using namespace muskat;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

Field make_sine(const Grid& g, double amplitude, int k, double phase = 0.0) {
  RealArray s(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) {
    s[j] = amplitude * std::sin(k * g.node(j) * 2.0 * kPi / g.length() + phase);
  }
  return Field::from_samples(g, std::move(s));
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::make(-1.0, 64), ConfigError);
  CHECK_THROWS_AS(Grid::make(2.0 * kPi, 63), ConfigError);
  CHECK_THROWS_AS(Grid::make(2.0 * kPi, 4), ConfigError);
  const Grid g = Grid::make(2.0 * kPi, 64);
  CHECK(g.dx() == doctest::Approx(2.0 * kPi / 64));
  CHECK(g.mode_index(0) == 0);
  CHECK(g.mode_index(32) == 32);
  CHECK(g.mode_index(33) == -31);
  CHECK(g.xi_max() == doctest::Approx(32.0));
}

TEST_CASE("dft/idft round trip and spectrum of a single mode") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  const Field f = make_sine(g, 2.0, 3);
  const ComplexArray& c = f.spectrum();
  // 2 sin(3x) = -i e^{i3x} + i e^{-i3x}: c_3 = -i, c_{-3} = i.
  CHECK(std::abs(c[3] - std::complex<double>(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(c[64 - 3] - std::complex<double>(0.0, 1.0)) < 1e-12);
  const RealArray back = idft(c);
  CHECK((back - f.samples()).abs().maxCoeff() < 1e-12);
}

TEST_CASE("L2 norm: spectral and sample paths agree, closed form") {
  const Grid g = Grid::make(2.0 * kPi, 128);
  const Field f = make_sine(g, 1.0, 5);
  // ||sin(5x)||_{L2[0,2pi)} = sqrt(pi)
  CHECK(l2_norm(f) == doctest::Approx(kSqrtPi).epsilon(1e-12));
  CHECK(l2_norm_samples(f) == doctest::Approx(kSqrtPi).epsilon(1e-12));
}

TEST_CASE("Sobolev norms of sin(kx): k^s sqrt(pi)") {
  const Grid g = Grid::make(2.0 * kPi, 128);
  for (int k : {1, 3, 8}) {
    const Field f = make_sine(g, 1.0, k);
    for (double s : {0.5, 1.5, 2.0, 2.5}) {
      CHECK(sobolev_norm(f, s) ==
            doctest::Approx(std::pow(double(k), s) * kSqrtPi).epsilon(1e-12));
    }
  }
}

TEST_CASE("weighted Sobolev norm multiplies by phi(k)") {
  const Grid g = Grid::make(2.0 * kPi, 128);
  const Field f = make_sine(g, 1.0, 4);
  const PhiFn phi = [](double r) { return 1.0 + r; };
  CHECK(sobolev_phi_norm(f, 1.5, phi) ==
        doctest::Approx(std::pow(4.0, 1.5) * 5.0 * kSqrtPi).epsilon(1e-12));
}

TEST_CASE("inhomogeneous norm") {
  const Grid g = Grid::make(2.0 * kPi, 128);
  const Field f = make_sine(g, 1.0, 2);
  const double expect =
      std::sqrt(kPi + std::pow(2.0, 3.0) * kPi);  // L2^2 + Hdot^{3/2}^2
  CHECK(sobolev_norm_inhom(f, 1.5) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("abs_power(1) maps sin(3x) to 3 sin(3x)") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  const Field f = make_sine(g, 1.0, 3);
  const Field df = apply_multiplier(f, SymbolSpec::abs_power(1.0));
  const Field expect = make_sine(g, 3.0, 3);
  CHECK((df.samples() - expect.samples()).abs().maxCoeff() < 1e-12);
}

TEST_CASE("derivative of sin(3x) is 3 cos(3x)") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  const Field f = make_sine(g, 1.0, 3);
  const Field dx = derivative(f);
  const Field expect = make_sine(g, 3.0, 3, kPi / 2.0);
  CHECK((dx.samples() - expect.samples()).abs().maxCoeff() < 1e-12);
}

TEST_CASE("shift is exact for band-limited data") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  const Field f = make_sine(g, 1.0, 1);
  const Field sh = shift(f, kPi / 2.0);  // sin(x - pi/2) = -cos(x)
  RealArray expect(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) expect[j] = -std::cos(g.node(j));
  CHECK((sh.samples() - expect).abs().maxCoeff() < 1e-12);

  // alpha = 0 is bit-identical.
  const Field same = shift(f, 0.0);
  CHECK((same.samples() == f.samples()).all());
}

TEST_CASE("refine interpolates: original nodes preserved, norms preserved") {
  const Grid g = Grid::make(2.0 * kPi, 32);
  const Field f = make_sine(g, 0.7, 5);
  const Field r = refine(f, 4);
  CHECK(r.grid().n_modes() == 128);
  for (int j = 0; j < 32; ++j) {
    CHECK(r.samples()[4 * j] == doctest::Approx(f.samples()[j]).epsilon(1e-12));
  }
  CHECK(l2_norm(r) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
  CHECK(sobolev_norm(r, 1.5) ==
        doctest::Approx(sobolev_norm(f, 1.5)).epsilon(1e-12));
}

TEST_CASE("two-thirds dealias zeroes the top third") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  Field f = make_sine(g, 1.0, 30);
  const Field d = dealias_two_thirds(f);
  CHECK(l2_norm(d) < 1e-13);  // |k| = 30 > 64/3
  Field low = make_sine(g, 1.0, 10);
  const Field kept = dealias_two_thirds(low);
  CHECK((kept.samples() - low.samples()).abs().maxCoeff() < 1e-12);
}

TEST_CASE("inner product is compatible with the L2 norm") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  const Field f = make_sine(g, 0.3, 2);
  const Field h = make_sine(g, 1.0, 3);
  CHECK(inner_product(f, f) ==
        doctest::Approx(l2_norm(f) * l2_norm(f)).epsilon(1e-12));
  CHECK(inner_product(f, h) == doctest::Approx(0.0));  // orthogonal modes
}

TEST_CASE("norms are translation invariant") {
  const Grid g = Grid::make(2.0 * kPi, 64);
  const Field f = make_sine(g, 0.5, 3);
  const Field t = shift(f, 0.37);
  CHECK(sobolev_norm(t, 1.5) ==
        doctest::Approx(sobolev_norm(f, 1.5)).epsilon(1e-12));
  CHECK(l2_norm(t) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("norms on a long domain: L enters the Parseval weight") {
  const Grid g = Grid::make(64.0 * kPi, 512);
  // sin(3x) on [0, 64 pi): mode k = 96, xi = 3.
  RealArray s(g.n_modes());
  for (int j = 0; j < g.n_modes(); ++j) s[j] = std::sin(3.0 * g.node(j));
  const Field f = Field::from_samples(g, std::move(s));
  CHECK(l2_norm(f) == doctest::Approx(std::sqrt(32.0 * kPi)).epsilon(1e-12));
  CHECK(sobolev_norm(f, 1.0) ==
        doctest::Approx(3.0 * std::sqrt(32.0 * kPi)).epsilon(1e-12));
}
