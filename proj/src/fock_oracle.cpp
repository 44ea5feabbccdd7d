#include "rellandau/fock_oracle.hpp"

#include <cmath>
#include <string>

#include "rellandau/errors.hpp"

namespace rellandau::fock {

void validate(const OracleConfig& cfg) {
  if (cfg.guard_band < 0) throw ConfigError("guard band must be non-negative");
  if (cfg.dim < 2) throw ConfigError("truncation dim must be at least 2");
  if (cfg.dim < cfg.guard_band + 1)
    throw ConfigError("truncation dim " + std::to_string(cfg.dim) + " leaves no trusted states with guard band " +
                      std::to_string(cfg.guard_band));
}

std::pair<TruncatedOperator, TruncatedOperator> build_ladder(int dim) {
  if (dim < 2) throw ConfigError("ladder operators need dim >= 2");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i + 1 < dim; ++i) a(i, i + 1) = std::sqrt(static_cast<double>(i + 1));
  Eigen::MatrixXd a_dagger = a.transpose();
  return {TruncatedOperator{std::move(a)}, TruncatedOperator{std::move(a_dagger)}};
}

TruncatedOperator build_axial_kinetic(int dim) {
  auto [a, a_dagger] = build_ladder(dim);
  const Eigen::MatrixXd d = a_dagger.entries - a.entries;
  return {-0.25 * (d * d)};
}

std::pair<TruncatedOperator, TruncatedOperator> perturbation_matrices(int n, double w, double eps, int dim) {
  const TruncatedOperator kinetic = build_axial_kinetic(dim);
  const Eigen::MatrixXd base = n * w * Eigen::MatrixXd::Identity(dim, dim) + kinetic.entries;
  const Eigen::MatrixXd base2 = base * base;
  const Eigen::MatrixXd base3 = base2 * base;
  return {TruncatedOperator{-0.5 * eps * base2}, TruncatedOperator{0.5 * eps * eps * base3}};
}

AxialOracle::AxialOracle(int n, double w, double eps, const OracleConfig& cfg)
    : cfg_(cfg), nw_(n * w) {
  validate(cfg_);
  if (n < 0) throw DomainError("n must be non-negative");
  kinetic_ = build_axial_kinetic(cfg_.dim);
  auto [h1, h2] = perturbation_matrices(n, w, eps, cfg_.dim);
  h1_ = std::move(h1);
  h2_ = std::move(h2);
}

void AxialOracle::require_trusted(int index) const {
  if (index < 0 || index > cfg_.max_trusted())
    throw TruncationError("axial index " + std::to_string(index) + " outside trusted band [0, " +
                          std::to_string(cfg_.max_trusted()) + "] of dim " + std::to_string(cfg_.dim));
}

double AxialOracle::first_order(int nz) const {
  require_trusted(nz);
  return h1_(nz, nz);
}

double AxialOracle::h2_diagonal(int nz) const {
  require_trusted(nz);
  return h2_(nz, nz);
}

double AxialOracle::second_order_sum(int nz) const {
  require_trusted(nz);
  double sum = 0.0;
  for (int p = 0; p < cfg_.dim; ++p) {
    if (p == nz) continue;
    const double element = h1_(nz, p);
    sum += element * element / static_cast<double>(nz - p);
  }
  return sum;
}

double AxialOracle::matrix_element(int nz, int p) const {
  require_trusted(nz);
  if (p < 0) return 0.0;
  // The guard band already covers the reach of H1 (four axial steps), so any
  // p inside the basis is exact once n_z is trusted.
  if (p >= cfg_.dim)
    throw TruncationError("axial index " + std::to_string(p) + " outside basis of dim " + std::to_string(cfg_.dim));
  return h1_(p, nz);
}

double AxialOracle::channel(int nz, int step) const {
  if (step == 0) throw DomainError("channel step must be non-zero");
  const double element = matrix_element(nz, nz + step);
  return element * element / static_cast<double>(-step);
}

AxialOracle::FirstOrderTerms AxialOracle::first_order_terms(int nz) const {
  require_trusted(nz);
  const Eigen::MatrixXd k2 = kinetic_.entries * kinetic_.entries;
  return {nw_ * nw_, 2.0 * nw_ * kinetic_(nz, nz), k2(nz, nz)};
}

double first_order_oracle(int n, int nz, double w, double eps, const OracleConfig& cfg) {
  return AxialOracle(n, w, eps, cfg).first_order(nz);
}

double second_order_oracle(int n, int nz, double w, double eps, const OracleConfig& cfg) {
  return AxialOracle(n, w, eps, cfg).second_order(nz);
}

double matrix_element(int n, int nz, int p, double w, double eps, const OracleConfig& cfg) {
  return AxialOracle(n, w, eps, cfg).matrix_element(nz, p);
}

double centered_moment(int k, int nz, const OracleConfig& cfg) {
  validate(cfg);
  if (k < 0 || k > 6) throw DomainError("centered_moment supports 0 <= k <= 6");
  if (nz < 0 || nz > cfg.max_trusted())
    throw TruncationError("axial index " + std::to_string(nz) + " outside trusted band");
  if (k % 2 == 1) return 0.0;
  auto [a, a_dagger] = build_ladder(cfg.dim);
  const Eigen::MatrixXd d = a_dagger.entries - a.entries;
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(cfg.dim, cfg.dim);
  for (int i = 0; i < k; ++i) power = power * d;
  return power(nz, nz);
}

}  // namespace rellandau::fock
