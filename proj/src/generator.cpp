// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/generator.hpp"

#include <cmath>

#include "euler_accumulator.hpp"
#include "gml/specfun.hpp"

namespace gml {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

void GeneratorParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("generator parameters require a > 0 and b > 0");
  }
  if (!(r >= 0.0)) {
    throw DomainError("generator parameter r must be >= 0");
  }
}

double log_generator_g(double u, const GeneratorParams& params) {
  params.validate();
  if (!(u >= 0.0)) {
    throw DomainError("generator argument must be >= 0");
  }
  return -params.b * u - params.r * std::log1p(std::exp(-params.a * u));
}

double generator_g(double u, const GeneratorParams& params) {
  return std::exp(log_generator_g(u, params));
}

double norm_const_d(int n, const GeneratorParams& params,
                    const QuadratureSpec& spec) {
  if (n < 1) {
    throw DomainError("dimension must be >= 1");
  }
  params.validate();
  const double half_n = 0.5 * n;
  const NumericValue phi =
      phi_star(-1.0, half_n, params.b / params.a, params.r, spec);
  return std::pow(params.a / kPi, half_n) / phi.value;
}

double norm_const_c(int n, const QuadratureSpec& spec) {
  if (n < 1) {
    throw DomainError("dimension must be >= 1");
  }
  const double half_n = 0.5 * n;
  if (n == 1) {
    return 1.0 / (std::sqrt(2.0 * kPi) * phi_star(-1.0, 0.5, 1.0, 2.0, spec).value);
  }
  if (n == 2) return 1.0 / kPi;
  if (n == 4) return 1.0 / (4.0 * kPi * kPi * std::log(2.0));
  const double zeta = riemann_zeta(half_n - 1.0, spec);
  return std::pow(kPi, -half_n) /
         ((std::pow(2.0, half_n) - 4.0) * zeta);
}

double norm_const_c_bernoulli(int n, const QuadratureSpec& spec) {
  if (n < 6 || n % 2 != 0) {
    throw DomainError(
        "the Bernoulli route needs n of the form 4m+2 or 4m+4 with m >= 1");
  }
  const double half_n = 0.5 * n;
  const double pow_gap = std::pow(2.0, half_n) - 4.0;
  if (n % 4 == 2) {
    // n = 4m+2: zeta(2m) closed form substituted into
    // c_n = pi^{-n/2} [(2^{n/2}-4) zeta(n/2-1)]^{-1}.
    const int m = (n - 2) / 4;
    const std::vector<double> b = bernoulli_numbers(2 * m);
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    const double fact = std::tgamma(2.0 * m + 1.0);
    return fact / (sign * std::pow(2.0, 2 * m - 1) *
                   std::pow(kPi, half_n + 2 * m) * pow_gap *
                   b[static_cast<std::size_t>(2 * m)]);
  }
  // n = 4m+4: the Bernoulli-polynomial integral for zeta(2m+1).
  const int m = (n - 4) / 4;
  const int odd = 2 * m + 1;
  const NumericValue integral = integrate_finite(
      [odd](double u) {
        const double si = std::sin(kPi * u);
        if (si == 0.0) return 0.0;
        return bernoulli_polynomial(odd, u) * std::cos(kPi * u) / si;
      },
      0.0, 1.0, spec);
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
  const double fact = std::tgamma(static_cast<double>(odd) + 1.0);
  return 2.0 * fact /
         (std::pow(kPi, half_n) * pow_gap * sign *
          std::pow(2.0 * kPi, odd) * integral.value);
}

std::function<double(double)> marginal_generator(int k, int n,
                                                 const GeneratorParams& params) {
  params.validate();
  if (k < 1 || k >= n) {
    throw DomainError("marginal_generator requires 1 <= k < n");
  }
  const double nu = 0.5 * (n - k);
  const double a = params.a;
  const double b = params.b;
  const double r = params.r;
  const double scale = std::pow(a, -nu) * std::tgamma(nu);
  return [=](double t) {
    if (!(t >= 0.0)) {
      throw DomainError("marginal generator argument must be >= 0");
    }
    const double z = -std::exp(-a * t);
    return std::exp(-b * t) * scale * phi_star(z, nu, b / a, r).value;
  };
}

double conditional_generator(double t, double q1, const GeneratorParams& params) {
  if (!(t >= 0.0) || !(q1 >= 0.0)) {
    throw DomainError("conditional generator arguments must be >= 0");
  }
  return generator_g(t + q1, params);
}

RadialLaw::RadialLaw(int dim, const GeneratorParams& params)
    : dim_(dim), params_(params) {
  if (dim < 1) {
    throw DomainError("radial law dimension must be >= 1");
  }
  params.validate();
  const double half_n = 0.5 * dim;
  normalizer_ = std::pow(params.a, -half_n) * std::tgamma(half_n) *
                phi_star(-1.0, half_n, params.b / params.a, params.r).value;
}

double radial_density(double v, const RadialLaw& law) {
  if (!(v >= 0.0)) {
    throw DomainError("radial density argument must be >= 0");
  }
  if (v == 0.0 && law.dim() == 1) {
    throw DomainError("radial density is unbounded at 0 in dimension 1");
  }
  const double half_n = 0.5 * law.dim();
  return std::pow(v, half_n - 1.0) * generator_g(v, law.params()) /
         law.normalizer();
}

double radial_cdf(double x, const RadialLaw& law, const QuadratureSpec& spec) {
  if (std::isnan(x)) {
    throw DomainError("radial CDF argument is NaN");
  }
  if (x <= 0.0) return 0.0;
  // Past this point the density underflows; everything is to the left.
  const double cap = (720.0 + 5.0 * law.dim()) / law.params().b;
  const double upper = std::min(x, cap);
  // Piecewise panels of geometrically growing width keep the decaying
  // integrand well resolved at every scale.
  double total = 0.0;
  double lo = 0.0;
  double width = std::min(upper, 4.0 / law.params().b);
  while (lo < upper) {
    const double hi = std::min(upper, lo + width);
    total += integrate_finite([&law](double v) { return radial_density(v, law); },
                              lo, hi, spec)
                 .value;
    lo = hi;
    width *= 2.0;
  }
  return std::min(total, 1.0);
}

double radial_quantile(double p, const RadialLaw& law, double tol) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DomainError("quantile level must lie in (0, 1)");
  }
  double hi = 1.0 / law.params().b;
  int doublings = 0;
  while (radial_cdf(hi, law) < p) {
    hi *= 2.0;
    if (++doublings > 60) {
      throw InternalError("radial quantile bracket failed to close");
    }
  }
  return find_root_increasing([&](double v) { return radial_cdf(v, law) - p; },
                              0.0, hi, tol);
}

double radial_moment(double l, const RadialLaw& law, const QuadratureSpec& spec) {
  const double half_n = 0.5 * law.dim();
  if (!(l > -half_n)) {
    throw DomainError("radial moment requires l > -n/2 for integrability");
  }
  const GeneratorParams& p = law.params();
  const double num = phi_star(-1.0, half_n + l, p.b / p.a, p.r, spec).value;
  const double den = phi_star(-1.0, half_n, p.b / p.a, p.r, spec).value;
  return std::pow(p.a, -l) *
         std::exp(std::lgamma(half_n + l) - std::lgamma(half_n)) * num / den;
}

double radial_sample(const RadialLaw& law, RngStream& rng) {
  const GeneratorParams& p = law.params();
  const double half_n = 0.5 * law.dim();
  constexpr long kMaxProposals = 1000000;
  for (long i = 0; i < kMaxProposals; ++i) {
    const double v = rng.gamma(half_n, p.b);
    if (p.r == 0.0) return v;
    const double log_accept = -p.r * std::log1p(std::exp(-p.a * v));
    if (std::log(rng.uniform()) < log_accept) return v;
  }
  throw InternalError("radial rejection sampler exceeded its proposal budget");
}

double consistent_generator_odd(int n, double t, const GeneratorParams& params,
                                const QuadratureSpec& spec) {
  params.validate();
  spec.validate();
  if (n < 3 || n % 2 == 0) {
    throw DomainError("consistent_generator_odd requires odd n >= 3");
  }
  if (!(t > 0.0)) {
    throw DomainError(
        "consistent_generator_odd requires t > 0 (the series is only "
        "conditionally convergent at the boundary)");
  }
  const int m = (n - 1) / 2;
  const double a = params.a;
  const double b = params.b;
  const double r = params.r;

  auto term = [&](long j) {
    // coef_j = Gamma(r+j) / (Gamma(r) j!), computed in logs to stay stable
    // for large j; the sign alternates with j.
    return std::pow(b + a * j, static_cast<double>(m)) *
           std::exp(-(b + a * j) * t);
  };

  // Raw head until the magnitudes start decreasing, Euler-accelerated tail.
  double head = 0.0, comp = 0.0;
  detail::EulerAccumulator acc(64);
  bool decreasing = false;
  double coef = 1.0;
  double prev_mag = -1.0;
  int small_run = 0;
  constexpr long kMaxTerms = 500000;
  for (long j = 0; j < kMaxTerms; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double raw = coef * term(j);
    const double signed_term = sign * raw;
    if (!std::isfinite(signed_term)) {
      throw ConvergenceError("consistent generator series term overflowed",
                             std::complex<double>(head + acc.sum(), 0.0), raw);
    }
    if (!decreasing && prev_mag >= 0.0 && raw < prev_mag) decreasing = true;
    double increment;
    if (decreasing) {
      increment = acc.feed(signed_term);
    } else {
      const double y = signed_term - comp;
      const double s = head + y;
      comp = (s - head) - y;
      head = s;
      increment = signed_term;
    }
    const double total = head + acc.sum();
    const double target = std::max(spec.absolute_tolerance,
                                   spec.relative_tolerance * std::abs(total));
    small_run = (decreasing && std::abs(increment) <= target) ? small_run + 1 : 0;
    if (small_run >= 2 || (r == 0.0 && j >= 1)) {
      return (head + acc.sum()) / std::pow(kPi, m);
    }
    prev_mag = raw;
    coef *= (r + j) / (j + 1.0);
  }
  throw ConvergenceError("consistent generator series did not converge",
                         std::complex<double>(head + acc.sum(), 0.0), 0.0);
}

}  // namespace gml
