#pragma once

#include <optional>

namespace rellandau::units {

// CODATA 2018 values, SI units.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;        // J s
  double planck = 6.62607015e-34;       // J s (exact)
  double e_charge = 1.602176634e-19;    // C (exact)
  double m_e = 9.1093837015e-31;        // kg
  double c = 299792458.0;               // m/s (exact)
};

inline constexpr PhysicalConstants kCodata2018{};

// Field configuration. Exactly one of k_grad / omega_z_override must be set.
struct PhysicalConfig {
  double B0 = 0.0;                          // T
  std::optional<double> k_grad;             // V/m^2
  std::optional<double> omega_z_override;   // rad/s
  std::optional<double> area;               // m^2, only for Landau degeneracy
};

// Throws ConfigError on non-positive B0 or a bad axial specification.
void validate(const PhysicalConfig& cfg);

double cyclotron_frequency(const PhysicalConfig& cfg);
double axial_frequency(const PhysicalConfig& cfg);

// hbar * omega_z / (m_e c^2) for a bare axial frequency. No validation, so
// omega_z = 0 yields 0.
double epsilon_from_axial(double omega_z);
double epsilon(const PhysicalConfig& cfg);

// Flux quanta threading the sample: B0 * area / (h/e).
double landau_degeneracy(const PhysicalConfig& cfg);

// Guiding-center coordinate x0 = -hbar k_y / (e B0), meters.
double guiding_center(double k_y, const PhysicalConfig& cfg);

// Energy in units of hbar*omega_z to meV.
double to_si_energy(double value, const PhysicalConfig& cfg);

// Convenience: omega_z pinned to the cyclotron frequency at B0.
PhysicalConfig axial_matched(double B0);

}  // namespace rellandau::units
