#pragma once

#include <stdexcept>

namespace rellandau {

// Invalid physical or numerical configuration (bad field strengths, bad
// truncation sizes, conflicting options).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A Fock-space index falls outside the trusted band of a truncated operator.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace rellandau
