// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// The density generator g(u) = exp(-b u) / (1 + exp(-a u))^r and everything
// derived from it: normalizing constants, marginal/conditional generators,
// the radial law of the stochastic representation, and the odd-dimension
// construction of a consistent generator with these marginals.

#ifndef GML_GENERATOR_HPP
#define GML_GENERATOR_HPP

#include <functional>

#include "gml/numerics.hpp"
#include "gml/rng.hpp"

namespace gml {

/// The (a, b, r) triple defining the density generator. a > 0, b > 0, r >= 0;
/// r = 0 is admitted as the multivariate-normal closure point of the family
/// (with b = 1/2 it gives exactly the normal law).
struct GeneratorParams {
  double a = 1.0;
  double b = 1.0;
  double r = 2.0;

  void validate() const;  // throws DomainError
};

/// g(u) for u >= 0. Evaluated through the log-space path so large u yields
/// the correctly rounded (possibly subnormal) tail instead of spurious 0/0.
double generator_g(double u, const GeneratorParams& params);

/// log g(u) = -b u - r log1p(exp(-a u)); never under/overflows for u >= 0.
double log_generator_g(double u, const GeneratorParams& params);

/// Normalizing constant of the n-dimensional density with generator g:
/// d_n = (a/pi)^{n/2} [Phi*_r(-1, n/2, b/a)]^{-1}.
double norm_const_d(int n, const GeneratorParams& params,
                    const QuadratureSpec& spec = default_quadrature_spec());

/// Normalizing constant of the classic elliptically symmetric logistic
/// density (a = b = 1, r = 2, with the q/2 argument convention):
/// n=1 via Phi*, n=2 -> 1/pi, n=4 -> 1/(4 pi^2 ln 2),
/// otherwise pi^{-n/2} [(2^{n/2} - 4) zeta(n/2 - 1)]^{-1} with the
/// eta-series zeta. Equals 2^{-n/2} d_n(a=b=1, r=2).
double norm_const_c(int n, const QuadratureSpec& spec = default_quadrature_spec());

/// Same constant through the independent Bernoulli route: the even-argument
/// zeta closed form for n = 4m+2 and the Bernoulli-polynomial integral for
/// n = 4m+4 (m >= 1). Cross-checks norm_const_c.
double norm_const_c_bernoulli(int n,
                              const QuadratureSpec& spec = default_quadrature_spec());

/// Marginal generator of a k-dimensional margin of the n-dimensional law:
///   g_(k)(t) = e^{-b t} a^{-(n-k)/2} Gamma((n-k)/2) Phi*_r(-e^{-a t}, (n-k)/2, b/a),
/// which is exactly int_t^inf (w-t)^{(n-k)/2-1} g(w) dw.
std::function<double(double)> marginal_generator(int k, int n,
                                                 const GeneratorParams& params);

/// Generator of the conditional law given an observed block with Mahalanobis
/// form q1: the shifted generator g(t + q1).
double conditional_generator(double t, double q1, const GeneratorParams& params);

/// Distribution of the squared generalized radius R:
/// f_R(v) = v^{n/2-1} g(v) / int_0^inf t^{n/2-1} g(t) dt.
class RadialLaw {
public:
  RadialLaw(int dim, const GeneratorParams& params);

  int dim() const { return dim_; }
  const GeneratorParams& params() const { return params_; }
  /// int_0^inf t^{n/2-1} g(t) dt = a^{-n/2} Gamma(n/2) Phi*_r(-1, n/2, b/a).
  double normalizer() const { return normalizer_; }

private:
  int dim_;
  GeneratorParams params_;
  double normalizer_;
};

double radial_density(double v, const RadialLaw& law);

/// CDF by quadrature of the density over (0, x).
double radial_cdf(double x, const RadialLaw& law,
                  const QuadratureSpec& spec = default_quadrature_spec());

/// Quantile through bracketed root finding on the CDF (the validation path
/// for the rejection sampler).
double radial_quantile(double p, const RadialLaw& law, double tol = 1e-12);

/// E(R^l) = a^{-l} Gamma(n/2+l) Phi*_r(-1, n/2+l, b/a)
///               / [Gamma(n/2) Phi*_r(-1, n/2, b/a)],  l > -n/2.
double radial_moment(double l, const RadialLaw& law,
                     const QuadratureSpec& spec = default_quadrature_spec());

/// Exact draw from f_R: propose V ~ Gamma(n/2, rate b), accept with
/// probability (1 + e^{-aV})^{-r} in [2^{-r}, 1]. r = 0 always accepts.
double radial_sample(const RadialLaw& law, RngStream& rng);

/// Odd-dimension (n = 2m+1) generator whose m-fold margins reproduce g:
///   g_n(t) = ((-1)^m / pi^m) d^m/dt^m g(t),  t > 0,
/// evaluated through the term-wise differentiated binomial series
///   d^m g(t) = sum_j (-1)^j Gamma(r+j)/(Gamma(r) j!) (-(b+aj))^m e^{-(b+aj)t}.
/// t = 0 is rejected (the series is only conditionally convergent there).
double consistent_generator_odd(int n, double t, const GeneratorParams& params,
                                const QuadratureSpec& spec = default_quadrature_spec());

}  // namespace gml

#endif  // GML_GENERATOR_HPP
