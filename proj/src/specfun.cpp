// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/specfun.hpp"

#include <cmath>

namespace gml {

namespace {

constexpr double kPi = 3.14159265358979323846;

double factorial(int n) {
  return std::tgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

void PhiStarArgs::validate() const {
  if (!(z >= -1.0) || !(z < 1.0)) {
    throw DomainError("phi_star requires z in [-1, 1)");
  }
  if (!(s > 0.0)) {
    throw DomainError("phi_star requires s > 0");
  }
  if (!(a.real() > 0.0)) {
    throw DomainError("phi_star requires Re(a) > 0");
  }
  if (!(mu_order >= 0.0)) {
    throw DomainError("phi_star requires mu_order >= 0");
  }
}

double riemann_zeta(double s, const QuadratureSpec& spec) {
  if (!(s > 0.0)) {
    throw DomainError("riemann_zeta requires s > 0");
  }
  if (std::abs(s - 1.0) < 1e-6) {
    throw DomainError("riemann_zeta is not evaluated near the pole at s = 1");
  }
  NumericValue eta = alternating_series_sum(
      [s](long j) {
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        return sign * std::pow(static_cast<double>(j), -s);
      },
      spec);
  return eta.value / (1.0 - std::pow(2.0, 1.0 - s));
}

double zeta_even(int two_n) {
  if (two_n <= 0 || two_n % 2 != 0) {
    throw DomainError("zeta_even requires a positive even argument");
  }
  if (two_n > 40) {
    throw RangeError("zeta_even supports arguments up to 40");
  }
  const int n = two_n / 2;
  const std::vector<double> b = bernoulli_numbers(two_n);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  return sign * std::pow(2.0, two_n - 1) / factorial(two_n) *
         std::pow(kPi, two_n) * b[static_cast<std::size_t>(two_n)];
}

double zeta_odd_integral(int two_n_plus_1, const QuadratureSpec& spec) {
  if (two_n_plus_1 % 2 == 0 || two_n_plus_1 < 3) {
    throw DomainError("zeta_odd_integral requires an odd argument >= 3");
  }
  if (two_n_plus_1 > 21) {
    throw RangeError("zeta_odd_integral supports arguments up to 21");
  }
  const int n = (two_n_plus_1 - 1) / 2;
  NumericValue integral = integrate_finite(
      [two_n_plus_1](double u) {
        const double si = std::sin(kPi * u);
        if (si == 0.0) return 0.0;  // removable endpoint limit never sampled
        return bernoulli_polynomial(two_n_plus_1, u) * std::cos(kPi * u) / si;
      },
      0.0, 1.0, spec);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  return sign * std::pow(2.0 * kPi, two_n_plus_1) /
         (2.0 * factorial(two_n_plus_1)) * integral.value;
}

NumericValue phi_star(double z, double s, double a, double mu_order,
                      const QuadratureSpec& spec) {
  PhiStarArgs args{z, s, {a, 0.0}, mu_order};
  args.validate();
  if (mu_order == 0.0 || z == 0.0) {
    return {std::pow(a, -s), 0.0, Method::closed_form};
  }
  NumericValue integral = integrate_semi_infinite(
      [z, s, a, mu_order](double t) {
        // t^{s-1} e^{-a t} assembled in log space so the huge-t nodes of the
        // exp-sinh tail underflow cleanly instead of producing inf * 0
        const double log_power = (s - 1.0) * std::log(t) - a * t;
        if (log_power < -745.0) return 0.0;
        return std::exp(log_power) *
               std::pow(1.0 - z * std::exp(-t), -mu_order);
      },
      s - 1.0, spec);
  const double gamma_s = std::tgamma(s);
  return {integral.value / gamma_s, integral.error_estimate / gamma_s,
          Method::quadrature};
}

NumericValue phi_star_series(double z, double s, double a, double mu_order,
                             const QuadratureSpec& spec) {
  PhiStarArgs args{z, s, {a, 0.0}, mu_order};
  args.validate();
  spec.validate();
  if (mu_order == 0.0 || z == 0.0) {
    return {std::pow(a, -s), 0.0, Method::closed_form};
  }
  if (std::abs(z) >= 0.95) {
    throw DomainError("phi_star_series requires |z| < 0.95");
  }
  // coef_n = Gamma(mu+n)/(Gamma(mu) n!) z^n, built incrementally.
  double coef = 1.0;
  double sum = 0.0, comp = 0.0;  // Kahan
  double last = 0.0;
  constexpr int kMaxTerms = 100000;
  for (int n = 0; n < kMaxTerms; ++n) {
    const double term = coef / std::pow(static_cast<double>(n) + a, s);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    last = std::abs(term);
    // |z| < 1 makes the tail geometric once the binomial growth is beaten
    if (n > 8 && last <= std::max(spec.absolute_tolerance,
                                  0.1 * spec.relative_tolerance * std::abs(sum))) {
      return {sum, last, Method::series};
    }
    coef *= (mu_order + n) / (n + 1.0) * z;
  }
  throw ConvergenceError("phi_star series did not converge",
                         std::complex<double>(sum, 0.0), last);
}

ComplexValue phi_star(const PhiStarArgs& args, const QuadratureSpec& spec) {
  args.validate();
  if (args.a.imag() == 0.0) {
    NumericValue real_value =
        phi_star(args.z, args.s, args.a.real(), args.mu_order, spec);
    return {{real_value.value, 0.0}, real_value.error_estimate,
            real_value.method};
  }
  if (args.mu_order == 0.0 || args.z == 0.0) {
    return {std::pow(args.a, std::complex<double>(-args.s, 0.0)), 0.0,
            Method::closed_form};
  }
  const double z = args.z;
  const double s = args.s;
  const std::complex<double> a = args.a;
  const double mu = args.mu_order;
  ComplexValue integral = integrate_semi_infinite_complex(
      [z, s, a, mu](double t) -> std::complex<double> {
        // (1 - z e^{-t}) is real and positive throughout since z < 1
        const double log_power = (s - 1.0) * std::log(t) - a.real() * t;
        if (log_power < -745.0) return {0.0, 0.0};
        const std::complex<double> phase =
            std::exp(std::complex<double>(0.0, -a.imag() * t));
        return std::exp(log_power) * phase *
               std::pow(1.0 - z * std::exp(-t), -mu);
      },
      s - 1.0, spec);
  const double gamma_s = std::tgamma(s);
  return {integral.value / gamma_s, integral.error_estimate / gamma_s,
          Method::quadrature};
}

}  // namespace gml
