#include <doctest.h>

#include <cmath>
#include <random>

#include "rellandau/errors.hpp"
#include "rellandau/units.hpp"

using namespace rellandau;
using namespace rellandau::units;

namespace {

// Hand-entered CODATA 2018 values, kept separate from the library's table.
constexpr double kE = 1.602176634e-19;
constexpr double kMe = 9.1093837015e-31;
constexpr double kHbar = 1.054571817e-34;
constexpr double kH = 6.62607015e-34;
constexpr double kC = 299792458.0;

PhysicalConfig with_k(double B0, double k) {
  PhysicalConfig cfg;
  cfg.B0 = B0;
  cfg.k_grad = k;
  return cfg;
}

bool within(double value, double target, double rel) { return std::abs(value - target) <= rel * std::abs(target); }

}  // namespace

TEST_CASE("cyclotron frequency") {
  const auto cfg = axial_matched(15.0);
  const double wc = cyclotron_frequency(cfg);
  CHECK(within(wc, kE * 15.0 / kMe, 1e-15));
  CHECK(within(wc, 2.6382e12, 1e-4));
  // Half a cyclotron quantum at 15 T, in meV.
  CHECK(within(kHbar * wc / 2 / 1.602176634e-22, 0.868, 5e-3));

  PhysicalConfig doubled = cfg;
  doubled.B0 = 30.0;
  CHECK(cyclotron_frequency(doubled) == 2.0 * wc);

  PhysicalConfig bad = cfg;
  bad.B0 = 0.0;
  CHECK_THROWS_AS(cyclotron_frequency(bad), ConfigError);
  bad.B0 = -1.0;
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("axial frequency") {
  const double wc = kE * 15.0 / kMe;
  const double k_matched = kMe * wc * wc / kE;
  CHECK(within(axial_frequency(with_k(15.0, k_matched)), 2.6382e12, 1e-4));
  CHECK(within(axial_frequency(with_k(15.0, k_matched)), wc, 1e-14));

  const double k = 3.7e6;
  CHECK(axial_frequency(with_k(1.0, 4 * k)) == 2.0 * axial_frequency(with_k(1.0, k)));

  PhysicalConfig o;
  o.B0 = 1.0;
  o.omega_z_override = 1.0;
  CHECK(axial_frequency(o) == 1.0);

  PhysicalConfig both = o;
  both.k_grad = 1.0;
  CHECK_THROWS_AS(axial_frequency(both), ConfigError);
  PhysicalConfig neither;
  neither.B0 = 1.0;
  CHECK_THROWS_AS(axial_frequency(neither), ConfigError);
  CHECK_THROWS_AS(axial_frequency(with_k(1.0, -2.0)), ConfigError);
}

TEST_CASE("epsilon") {
  const auto cfg = axial_matched(15.0);
  // Reported as 3.392e-9; CODATA 2018 gives 3.398e-9.
  CHECK(within(epsilon(cfg), 3.392e-9, 5e-3));
  CHECK(epsilon(cfg) == kCodata2018.hbar * axial_frequency(cfg) / (kCodata2018.m_e * kCodata2018.c * kCodata2018.c));
  CHECK(within(epsilon(cfg), kHbar * axial_frequency(cfg) / (kMe * kC * kC), 1e-15));
  CHECK(epsilon_from_axial(0.0) == 0.0);
  CHECK(epsilon_from_axial(2.0e12) == doctest::Approx(2.0 * epsilon_from_axial(1.0e12)).epsilon(1e-15));
}

TEST_CASE("landau degeneracy") {
  PhysicalConfig cfg = axial_matched(1.0);
  cfg.area = (kH / kE) / cfg.B0;
  CHECK(landau_degeneracy(cfg) == doctest::Approx(1.0).epsilon(1e-14));

  cfg = axial_matched(15.0);
  cfg.area = 1e-12;
  CHECK(within(landau_degeneracy(cfg), 15e-12 / (kH / kE), 1e-14));
  CHECK(std::floor(landau_degeneracy(cfg)) == 3626.0);
  CHECK(landau_degeneracy(cfg) == doctest::Approx(3627).epsilon(1e-3));

  cfg.area = 0.0;
  CHECK(landau_degeneracy(cfg) == 0.0);
  cfg.area.reset();
  CHECK_THROWS_AS(landau_degeneracy(cfg), ConfigError);
}

TEST_CASE("guiding center") {
  const auto cfg = axial_matched(2.0);
  CHECK(guiding_center(0.0, cfg) == 0.0);
  CHECK(guiding_center(1e7, cfg) < 0.0);
  CHECK(guiding_center(-1e7, cfg) > 0.0);
  CHECK(guiding_center(2e7, cfg) == 2.0 * guiding_center(1e7, cfg));
  CHECK(within(guiding_center(1e7, cfg), -kHbar * 1e7 / (kE * 2.0), 1e-15));
}

TEST_CASE("energies in meV") {
  const auto cfg = axial_matched(15.0);
  CHECK(within(to_si_energy(0.5, cfg), 0.868, 5e-3));
  CHECK(to_si_energy(0.0, cfg) == 0.0);
  const double e1 = -3.0 / 32.0 * epsilon(cfg);
  CHECK(within(to_si_energy(e1, cfg), -0.552e-9, 5e-3));
}

TEST_CASE("property: meV conversion is linear to rounding") {
  const auto cfg = axial_matched(7.5);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> exponent(-12.0, 12.0);
  const double unit = to_si_energy(1.0, cfg);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    CHECK(within(to_si_energy(x, cfg) / unit, x, 4e-16));
  }
}

TEST_CASE("property: frequencies are strictly monotone") {
  double previous_c = 0.0;
  double previous_z = 0.0;
  for (double s = 0.01; s < 100.0; s *= 1.37) {
    const auto cfg = with_k(s, s * 1e5);
    const double wc = cyclotron_frequency(cfg);
    const double wz = axial_frequency(cfg);
    CHECK(wc > previous_c);
    CHECK(wz > previous_z);
    previous_c = wc;
    previous_z = wz;
  }
}
