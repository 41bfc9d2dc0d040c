// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Riemann zeta for real s > 0 (alternating-eta branch plus even-integer and
// odd-integer closed/integral forms) and the generalized Hurwitz-Lerch Zeta
//   Phi*_mu(z, s, a) = (1/Gamma(mu)) sum_{n>=0} Gamma(mu+n)/n! z^n / (n+a)^s
// with the integral representation
//   Phi*_mu(z, s, a) = (1/Gamma(s)) int_0^inf t^{s-1} e^{-a t} (1 - z e^{-t})^{-mu} dt.

#ifndef GML_SPECFUN_HPP
#define GML_SPECFUN_HPP

#include <complex>

#include "gml/numerics.hpp"

namespace gml {

/// Arguments of the generalized Hurwitz-Lerch Zeta. z in [-1, 1), s > 0,
/// Re(a) > 0, mu_order >= 0. mu_order = 0 degenerates to the closed form
/// a^{-s} (unit denominator in the integral representation).
struct PhiStarArgs {
  double z = -1.0;
  double s = 1.0;
  std::complex<double> a{1.0, 0.0};
  double mu_order = 2.0;

  void validate() const;  // throws DomainError on violation
};

/// Riemann zeta via the alternating eta series, s > 0, s != 1.
/// (|s - 1| < 1e-6 is rejected rather than expanded around the pole.)
double riemann_zeta(double s, const QuadratureSpec& spec = default_quadrature_spec());

/// Closed form for even arguments: zeta(2n) = (-1)^{n+1} 2^{2n-1}/(2n)! pi^{2n} B_{2n}.
/// two_n must be even, in {2, 4, ..., 40}.
double zeta_even(int two_n);

/// zeta(2n+1) = (-1)^{n+1} (2 pi)^{2n+1} / (2 (2n+1)!) int_0^1 B_{2n+1}(u) cot(pi u) du.
/// Input odd, 3 <= input <= 21. (The integrand's endpoint singularities are
/// removable since B_{2n+1}(0) = B_{2n+1}(1) = 0.)
double zeta_odd_integral(int two_n_plus_1,
                         const QuadratureSpec& spec = default_quadrature_spec());

/// Phi*, real arguments, computed by the integral-representation quadrature
/// (the primary method; the defining series is exposed separately as a
/// cross-check for |z| < 0.95).
NumericValue phi_star(double z, double s, double a, double mu_order,
                      const QuadratureSpec& spec = default_quadrature_spec());

/// Phi* by the defining series. Requires |z| < 0.95 (at z = -1 the series
/// loses meaning for small s, which is why the quadrature is primary).
NumericValue phi_star_series(double z, double s, double a, double mu_order,
                             const QuadratureSpec& spec = default_quadrature_spec());

/// Phi* for complex a (quadrature path only). Satisfies
/// phi_star(conj(a)) = conj(phi_star(a)) and is real when a is.
ComplexValue phi_star(const PhiStarArgs& args,
                      const QuadratureSpec& spec = default_quadrature_spec());

}  // namespace gml

#endif  // GML_SPECFUN_HPP
