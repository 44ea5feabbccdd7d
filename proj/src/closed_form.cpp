#include "rellandau/closed_form.hpp"

#include <string>

namespace rellandau {

void validate(const QuantumNumbers& q) {
  if (q.n < 0 || q.nz < 0) throw DomainError("quantum numbers must be non-negative, got " + to_string(q));
}

std::string to_string(const QuantumNumbers& q) {
  return "(" + std::to_string(q.n) + "," + std::to_string(q.nz) + ")";
}

namespace closed_form {

SecondOrderCase case_from_step(int step) {
  switch (step) {
    case -4: return SecondOrderCase::kDown4;
    case -2: return SecondOrderCase::kDown2;
    case 2: return SecondOrderCase::kUp2;
    case 4: return SecondOrderCase::kUp4;
    default: throw DomainError("second-order case must be -4, -2, 2 or 4, got " + std::to_string(step));
  }
}

Rational axial_moment(int k, int nz) {
  if (nz < 0) throw DomainError("n_z must be non-negative");
  if (k < 0 || k > 6) throw DomainError("axial_moment supports 0 <= k <= 6");
  const long long n = nz;
  switch (k) {
    case 0: return 1;
    case 2: return Rational(-(2 * n + 1));
    case 4: return Rational(6 * n * n + 6 * n + 3);
    case 6: return Rational(-5 * (4 * n * n * n + 6 * n * n + 8 * n + 3));
    default: return 0;
  }
}

EnergyDecomposition<double> to_double(const EnergyDecomposition<Rational>& d) {
  return {d.order, rellandau::to_double(d.e0), rellandau::to_double(d.e1), rellandau::to_double(d.e2),
          rellandau::to_double(d.total)};
}

}  // namespace closed_form
}  // namespace rellandau
