#pragma once

#include <compare>
#include <string>

namespace rellandau {

// Level label (n, n_z). n is the combined Landau + spin index, n_z the axial
// oscillator index. Both non-negative.
struct QuantumNumbers {
  int n = 0;
  int nz = 0;

  // n = 0 has a single spin orientation; every n >= 1 is doubly degenerate.
  constexpr int spin_mult() const { return n == 0 ? 1 : 2; }

  auto operator<=>(const QuantumNumbers&) const = default;
};

// Throws DomainError for negative indices.
void validate(const QuantumNumbers& q);

std::string to_string(const QuantumNumbers& q);

}  // namespace rellandau
