#pragma once

#include <string>
#include <vector>

#include "rellandau/rational.hpp"

namespace rellandau::verification {

enum class Formula { kCorrected, kPublished };

struct VerifyOptions {
  int n_max = 6;
  int nz_max = 6;
  std::vector<Rational> w_list{make_rational(1, 2), Rational(1), Rational(2)};
  int dim = 16;
  int guard_band = 8;
  Rational eps = 1;
  double tol = 1e-10;            // e1, e2 and their pieces, relative
  double case_tol = 1e-12;       // per-channel second-order terms, relative
  double moment_tol = 1e-12;     // axial moments, relative
  double selection_tol = 1e-14;  // forbidden H1 elements, absolute
  Formula formula = Formula::kCorrected;
};

struct CheckSummary {
  std::string name;
  long points = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct Failure {
  std::string check;
  int n = 0;
  int nz = 0;
  std::string w;
  double expected = 0.0;
  double actual = 0.0;
  double deviation = 0.0;
};

struct VerifyReport {
  std::vector<CheckSummary> checks;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

// |actual - expected| / |expected|, or the absolute difference when the
// expected value is exactly zero.
double relative_deviation(double expected, double actual);

// Compares every closed form against the Fock-space oracle over
// n <= n_max, n_z <= nz_max and each w. Throws ConfigError when the
// truncation cannot hold nz_max inside its trusted band.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace rellandau::verification
