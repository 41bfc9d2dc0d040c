// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared numerical kernels: double-exponential quadrature on finite and
// semi-infinite intervals (with endpoint singularities), Euler-accelerated
// alternating-series summation, bracketed root finding, and Bernoulli
// numbers/polynomials.

#ifndef GML_NUMERICS_HPP
#define GML_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

#include "gml/errors.hpp"

namespace gml {

/// How a NumericValue was obtained.
enum class Method { series, quadrature, closed_form };

const char* method_name(Method m);

/// A computed scalar paired with a (heuristic) error estimate and the method
/// that produced it. No NaN/Inf ever escapes an operation without an error
/// being thrown instead.
template <class T>
struct Numeric {
  T value{};
  double error_estimate = 0.0;
  Method method = Method::closed_form;
};

using NumericValue = Numeric<double>;
using ComplexValue = Numeric<std::complex<double>>;

/// Tolerances and refinement budget for the quadrature/series kernels.
struct QuadratureSpec {
  double relative_tolerance = 1e-12;
  double absolute_tolerance = 1e-300;  // underflow floor, not a real target
  int max_refinement_levels = 12;

  /// Throws DomainError unless tolerances are > 0 and levels >= 1.
  void validate() const;
};

/// Process-wide default spec. The relative tolerance may be overridden once
/// at startup (the CLI honors the GML_QUAD_TOL environment variable).
QuadratureSpec default_quadrature_spec();
void set_default_quadrature_relative_tolerance(double relative_tolerance);

/// Integrate f over (0, inf). `endpoint_exponent` is the power alpha > -1
/// such that f(t) t^{-alpha} stays bounded near 0; for alpha in (-1,0) the
/// singularity is removed by the substitution t = u^{1/(1+alpha)} before a
/// tanh-sinh pass on (0,1), and the (1,inf) part uses exp-sinh nodes. f must
/// decay at least exponentially at infinity and must underflow cleanly when
/// sampled at very large arguments (assemble products like t^p e^{-t} in log
/// space; inf * 0 at a tail node surfaces as a DomainError).
NumericValue integrate_semi_infinite(const std::function<double(double)>& f,
                                     double endpoint_exponent,
                                     const QuadratureSpec& spec = default_quadrature_spec());

/// Complex-valued variant (same node scheme, complex weights accumulate).
ComplexValue integrate_semi_infinite_complex(
    const std::function<std::complex<double>(double)>& f, double endpoint_exponent,
    const QuadratureSpec& spec = default_quadrature_spec());

/// Integrate f over (lo, hi) by tanh-sinh refinement. Endpoint singularities
/// must be integrable; endpoints themselves are never evaluated.
NumericValue integrate_finite(const std::function<double(double)>& f, double lo,
                              double hi,
                              const QuadratureSpec& spec = default_quadrature_spec());

/// Sum an alternating series term(1) + term(2) + ... where term(j) carries
/// its sign. Terms must eventually alternate with eventually decreasing
/// magnitude; summation is Euler-accelerated. Throws DivergenceError when the
/// magnitudes fail to decrease over 32 consecutive indices past index 64
/// (which is what happens for sum (-1)^{j-1} sqrt(j)).
NumericValue alternating_series_sum(const std::function<double(long)>& term,
                                    const QuadratureSpec& spec = default_quadrature_spec());

/// Bisect a nondecreasing f on [lo, hi] with f(lo) <= 0 <= f(hi) until the
/// bracket width is <= tol; returns the bracket midpoint.
double find_root_increasing(const std::function<double(double)>& f, double lo,
                            double hi, double tol);

/// Bernoulli numbers B_0..B_n via the generating-function recurrence.
/// n <= 64 (beyond that the magnitudes call for extended precision).
std::vector<double> bernoulli_numbers(int n);

/// Bernoulli polynomial B_n(x), n <= 64. B_n(0) equals bernoulli_numbers(n)[n]
/// through the identical arithmetic path.
double bernoulli_polynomial(int n, double x);

}  // namespace gml

#endif  // GML_NUMERICS_HPP
