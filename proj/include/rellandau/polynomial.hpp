#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rellandau/rational.hpp"

namespace rellandau {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending order. Trailing zero coefficients are always trimmed, so the zero
// polynomial has no coefficients and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit constant lift
  Polynomial(long long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(std::initializer_list<Rational> ascending);
  explicit Polynomial(std::vector<Rational> ascending);

  // The monomial x.
  static Polynomial variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  // p(x + shift), computed exactly.
  Polynomial taylor_shift(const Rational& shift) const;
  Polynomial derivative() const;
  std::vector<double> to_double() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace rellandau
