#include "rellandau/units.hpp"

#include <cmath>
#include <string>

#include "rellandau/errors.hpp"

namespace rellandau::units {

namespace {
constexpr double kJoulePerMilliElectronVolt = 1.602176634e-22;
}

void validate(const PhysicalConfig& cfg) {
  if (!(cfg.B0 > 0.0)) throw ConfigError("B0 must be positive, got " + std::to_string(cfg.B0));
  if (cfg.k_grad.has_value() == cfg.omega_z_override.has_value())
    throw ConfigError("exactly one of k_grad / omega_z must be set");
  if (cfg.k_grad && !(*cfg.k_grad > 0.0)) throw ConfigError("k_grad must be positive");
  if (cfg.omega_z_override && !(*cfg.omega_z_override > 0.0))
    throw ConfigError("omega_z must be positive");
  if (cfg.area && !(*cfg.area >= 0.0)) throw ConfigError("area must be non-negative");
}

double cyclotron_frequency(const PhysicalConfig& cfg) {
  if (!(cfg.B0 > 0.0)) throw ConfigError("B0 must be positive");
  return kCodata2018.e_charge * cfg.B0 / kCodata2018.m_e;
}

double axial_frequency(const PhysicalConfig& cfg) {
  validate(cfg);
  if (cfg.omega_z_override) return *cfg.omega_z_override;
  return std::sqrt(kCodata2018.e_charge * *cfg.k_grad / kCodata2018.m_e);
}

double epsilon_from_axial(double omega_z) {
  const auto& k = kCodata2018;
  return k.hbar * omega_z / (k.m_e * k.c * k.c);
}

double epsilon(const PhysicalConfig& cfg) { return epsilon_from_axial(axial_frequency(cfg)); }

double landau_degeneracy(const PhysicalConfig& cfg) {
  if (!cfg.area) throw ConfigError("landau_degeneracy needs a sample area");
  if (!(cfg.B0 > 0.0)) throw ConfigError("B0 must be positive");
  if (!(*cfg.area >= 0.0)) throw ConfigError("area must be non-negative");
  const double flux_quantum = kCodata2018.planck / kCodata2018.e_charge;
  return cfg.B0 * *cfg.area / flux_quantum;
}

double guiding_center(double k_y, const PhysicalConfig& cfg) {
  if (!(cfg.B0 > 0.0)) throw ConfigError("B0 must be positive");
  return -kCodata2018.hbar * k_y / (kCodata2018.e_charge * cfg.B0);
}

double to_si_energy(double value, const PhysicalConfig& cfg) {
  return value * kCodata2018.hbar * axial_frequency(cfg) / kJoulePerMilliElectronVolt;
}

PhysicalConfig axial_matched(double B0) {
  PhysicalConfig cfg;
  cfg.B0 = B0;
  cfg.omega_z_override = cyclotron_frequency(cfg);
  return cfg;
}

}  // namespace rellandau::units
