#pragma once

// Closed-form zeroth, first and second order energies of the axial Landau
// problem, in units of hbar*omega_z.
//
// Every function is a template over the scalar type so the same expression
// serves exact evaluation (Rational), floating sweeps (double) and symbolic
// dependence on w (Polynomial, used to build spectral lines).

#include <type_traits>

#include "rellandau/errors.hpp"
#include "rellandau/polynomial.hpp"
#include "rellandau/quantum_numbers.hpp"
#include "rellandau/rational.hpp"

namespace rellandau::closed_form {

template <class Scalar>
struct ModelParams {
  Scalar w;    // omega_c / omega_z
  Scalar eps;  // hbar omega_z / (m_e c^2)
  bool include_rest_mass = false;
};

template <class Scalar>
Scalar constant(long long num, long long den = 1) {
  if constexpr (std::is_floating_point_v<Scalar>)
    return static_cast<Scalar>(num) / static_cast<Scalar>(den);
  else
    return Scalar(make_rational(num, den));
}

template <class Scalar>
void validate(const ModelParams<Scalar>& p) {
  if constexpr (!std::is_same_v<Scalar, Polynomial>) {
    if (!(p.w > 0)) throw DomainError("w must be positive");
    if (!(p.eps >= 0)) throw DomainError("eps must be non-negative");
  }
}

namespace detail {

template <class Scalar>
Scalar reciprocal(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, Polynomial>) {
    if (x.degree() != 0) throw DomainError("rest mass needs a non-zero constant eps");
    return Polynomial(Rational(1) / x.coefficient(0));
  } else {
    if (x == 0) throw DomainError("rest mass term 1/eps is undefined for eps = 0");
    return Scalar(1) / x;
  }
}

template <class Scalar>
Scalar pow_int(const Scalar& x, int k) {
  Scalar r = constant<Scalar>(1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

template <class Scalar>
void check(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  rellandau::validate(q);
  validate(p);
}

}  // namespace detail

// n w + (n_z + 1/2), plus 1/eps when the rest mass is included.
template <class Scalar>
Scalar e0(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  Scalar r = constant<Scalar>(q.n) * p.w + constant<Scalar>(2 * q.nz + 1, 2);
  if (p.include_rest_mass) r = r + detail::reciprocal(p.eps);
  return r;
}

// Expectation values of the three pieces of (H_x + p_z^2/2m)^2, without the
// -eps/2 prefactor: <H_x^2>, <H_x p_z^2/m>, <p_z^4/4m^2>.
template <class Scalar>
struct FirstOrderTerms {
  Scalar landau_squared;
  Scalar cross;
  Scalar axial_quartic;

  Scalar sum() const { return landau_squared + cross + axial_quartic; }
};

template <class Scalar>
FirstOrderTerms<Scalar> first_order_terms(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  const Scalar n = constant<Scalar>(q.n);
  const long long nz = q.nz;
  return {n * n * p.w * p.w,
          p.w * n * constant<Scalar>(2 * nz + 1, 2),
          constant<Scalar>(6 * nz * nz + 6 * nz + 3, 16)};
}

template <class Scalar>
Scalar e1(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  return constant<Scalar>(-1, 2) * p.eps * first_order_terms(q, p).sum();
}

// Diagonal element <n,n_z|H2|n,n_z>. The axial sextic moment enters with a
// positive sign: <p_z^6> is the expectation of a positive operator.
template <class Scalar>
Scalar h2_diagonal(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  const Scalar n = constant<Scalar>(q.n);
  const long long nz = q.nz;
  const Scalar nw = n * p.w;
  Scalar bracket = detail::pow_int(nw, 3) +
                   constant<Scalar>(3, 4) * nw * nw * constant<Scalar>(2 * nz + 1) +
                   constant<Scalar>(3, 16) * nw * constant<Scalar>(6 * nz * nz + 6 * nz + 3) +
                   constant<Scalar>(5 * (4 * nz * nz * nz + 6 * nz * nz + 8 * nz + 3), 64);
  return constant<Scalar>(1, 2) * p.eps * p.eps * bracket;
}

// Off-diagonal second-order channels, labelled by the axial step p - n_z.
enum class SecondOrderCase : int { kDown4 = -4, kDown2 = -2, kUp2 = 2, kUp4 = 4 };

inline constexpr SecondOrderCase kAllCases[] = {SecondOrderCase::kDown4, SecondOrderCase::kDown2,
                                                SecondOrderCase::kUp2, SecondOrderCase::kUp4};

// Throws DomainError unless step is one of -4, -2, +2, +4.
SecondOrderCase case_from_step(int step);

// |<n,p|H1|n,n_z>|^2 / (E0(n_z) - E0(p)) for p = n_z + step. Channels below
// the ground state vanish through the falling factorial.
template <class Scalar>
Scalar case_contribution(SecondOrderCase which, const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  const long long nz = q.nz;
  const Scalar eps2 = p.eps * p.eps;
  const Scalar four_nw = constant<Scalar>(4 * q.n) * p.w;
  switch (which) {
    case SecondOrderCase::kDown4:
      return eps2 * constant<Scalar>(nz * (nz - 1) * (nz - 2) * (nz - 3), 4096);
    case SecondOrderCase::kUp4:
      return eps2 * constant<Scalar>(-(nz + 1) * (nz + 2) * (nz + 3) * (nz + 4), 4096);
    case SecondOrderCase::kUp2: {
      const Scalar amp = four_nw + constant<Scalar>(2 * nz + 3);
      return eps2 * constant<Scalar>(-(nz + 1) * (nz + 2), 512) * amp * amp;
    }
    case SecondOrderCase::kDown2: {
      const Scalar amp = four_nw + constant<Scalar>(2 * nz - 1);
      return eps2 * constant<Scalar>(nz * (nz - 1), 512) * amp * amp;
    }
  }
  throw DomainError("unknown second-order case");
}

template <class Scalar>
Scalar case_contribution(int step, const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  return case_contribution(case_from_step(step), q, p);
}

// Sum over intermediate axial states of the first-order operator.
template <class Scalar>
Scalar second_order_sum(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  const Scalar n = constant<Scalar>(q.n);
  const long long nz = q.nz;
  const Scalar nw = n * p.w;
  Scalar bracket = constant<Scalar>(32 * (2 * nz + 1)) * nw * nw +
                   constant<Scalar>(48 * (2 * nz * nz + 2 * nz + 1)) * nw +
                   constant<Scalar>(34 * nz * nz * nz + 51 * nz * nz + 59 * nz + 21);
  return constant<Scalar>(-1, 512) * p.eps * p.eps * bracket;
}

// Full second-order correction: h2_diagonal + second_order_sum.
template <class Scalar>
Scalar e2(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  const Scalar n = constant<Scalar>(q.n);
  const long long nz = q.nz;
  const Scalar nw = n * p.w;
  Scalar bracket = detail::pow_int(nw, 3) +
                   constant<Scalar>(5 * (2 * nz + 1), 8) * nw * nw +
                   constant<Scalar>(6 * nz * nz + 6 * nz + 3, 8) * nw +
                   constant<Scalar>(46 * nz * nz * nz + 69 * nz * nz + 101 * nz + 39, 256);
  return constant<Scalar>(1, 2) * p.eps * p.eps * bracket;
}

// The second-order diagonal term and total exactly as they appear in print,
// where the sextic axial moment carries a minus sign. Kept for comparison and
// as a known-bad input for the verification harness.
namespace published {

template <class Scalar>
Scalar h2_diagonal(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  const long long nz = q.nz;
  return closed_form::h2_diagonal(q, p) -
         p.eps * p.eps * constant<Scalar>(5 * (4 * nz * nz * nz + 6 * nz * nz + 8 * nz + 3), 64);
}

template <class Scalar>
Scalar e2(const QuantumNumbers& q, const ModelParams<Scalar>& p) {
  detail::check(q, p);
  const Scalar n = constant<Scalar>(q.n);
  const long long nz = q.nz;
  const Scalar nw = n * p.w;
  Scalar bracket = detail::pow_int(nw, 3) +
                   constant<Scalar>(5 * (2 * nz + 1), 8) * nw * nw +
                   constant<Scalar>(6 * nz * nz + 6 * nz + 3, 8) * nw -
                   constant<Scalar>(114 * nz * nz * nz + 171 * nz * nz + 219 * nz + 81, 256);
  return constant<Scalar>(1, 2) * p.eps * p.eps * bracket;
}

}  // namespace published

// <n_z|(a^dagger - a)^k|n_z> for k <= 6. Odd moments vanish.
Rational axial_moment(int k, int nz);

template <class Scalar>
struct EnergyDecomposition {
  int order = 0;
  Scalar e0;
  Scalar e1;
  Scalar e2;
  Scalar total;
};

template <class Scalar>
EnergyDecomposition<Scalar> decompose(const QuantumNumbers& q, const ModelParams<Scalar>& p, int order) {
  if (order < 0 || order > 2) throw DomainError("order must be 0, 1 or 2");
  EnergyDecomposition<Scalar> d;
  d.order = order;
  d.e0 = e0(q, p);
  d.e1 = order >= 1 ? e1(q, p) : constant<Scalar>(0);
  d.e2 = order >= 2 ? e2(q, p) : constant<Scalar>(0);
  d.total = d.e0 + d.e1 + d.e2;
  return d;
}

EnergyDecomposition<double> to_double(const EnergyDecomposition<Rational>& d);

}  // namespace rellandau::closed_form
