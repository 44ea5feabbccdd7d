#pragma once

// Brute-force Rayleigh-Schroedinger reference for the axial problem.
//
// Operators are dense real matrices on the truncated axial Fock basis
// |0>, ..., |dim-1>. p_z only appears in even powers, so the kinetic operator
// K = p_z^2 / (2 m_e hbar omega_z) = -(a^dagger - a)^2 / 4 is built directly
// and stays real symmetric. H_x acts as the scalar n*w on every axial state.
//
// Nothing here knows about the closed-form expressions.

#include <utility>

#include <Eigen/Dense>

namespace rellandau::fock {

struct TruncatedOperator {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
  double operator()(int row, int col) const { return entries(row, col); }
};

struct OracleConfig {
  int dim = 16;
  // Results are trusted only for n_z <= dim - guard_band.
  int guard_band = 8;
  double tol = 1e-10;

  int max_trusted() const { return dim - guard_band; }
};

// Throws ConfigError unless dim >= guard_band + 1 and guard_band >= 0.
void validate(const OracleConfig& cfg);

// a(i, i+1) = sqrt(i+1); a_dagger = a^T. Throws ConfigError for dim < 2.
std::pair<TruncatedOperator, TruncatedOperator> build_ladder(int dim);

// K = -(1/4)(a^dagger - a)^2. Note the last diagonal entry is a truncation
// artifact.
TruncatedOperator build_axial_kinetic(int dim);

// H1 = -(eps/2)(n w + K)^2 and H2 = (eps^2/2)(n w + K)^3 in hbar*omega_z units.
std::pair<TruncatedOperator, TruncatedOperator> perturbation_matrices(int n, double w, double eps, int dim);

// Both perturbation operators for one (n, w, eps) on one truncation, so that
// many axial states can be queried without rebuilding matrices.
class AxialOracle {
 public:
  AxialOracle(int n, double w, double eps, const OracleConfig& cfg);

  const OracleConfig& config() const { return cfg_; }
  const TruncatedOperator& h1() const { return h1_; }
  const TruncatedOperator& h2() const { return h2_; }

  double first_order(int nz) const;
  // <n_z|H2|n_z> alone.
  double h2_diagonal(int nz) const;
  // sum_{p != n_z} H1[n_z,p]^2 / (n_z - p), over the full truncated basis.
  double second_order_sum(int nz) const;
  double second_order(int nz) const { return h2_diagonal(nz) + second_order_sum(nz); }
  // <p|H1|n_z>; zero when p is below the ground state.
  double matrix_element(int nz, int p) const;
  // H1[p,n_z]^2 / (n_z - p) for p = n_z + step.
  double channel(int nz, int step) const;

  // The three pieces of <(n w + K)^2>: (n w)^2, 2 n w <K>, <K^2>.
  struct FirstOrderTerms {
    double landau_squared;
    double cross;
    double axial_quartic;
  };
  FirstOrderTerms first_order_terms(int nz) const;

 private:
  void require_trusted(int index) const;

  OracleConfig cfg_;
  double nw_;
  TruncatedOperator kinetic_;
  TruncatedOperator h1_;
  TruncatedOperator h2_;
};

double first_order_oracle(int n, int nz, double w, double eps, const OracleConfig& cfg);
double second_order_oracle(int n, int nz, double w, double eps, const OracleConfig& cfg);
double matrix_element(int n, int nz, int p, double w, double eps, const OracleConfig& cfg);

// <n_z|(a^dagger - a)^k|n_z> by direct matrix power, 0 <= k <= 6.
double centered_moment(int k, int nz, const OracleConfig& cfg);

}  // namespace rellandau::fock
