// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/numerics.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

using namespace gml;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("semi-infinite quadrature: exponential and gamma integrands") {
  auto expo = integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0);
  CHECK(expo.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(expo.method == Method::quadrature);

  auto root_sing = integrate_semi_infinite(
      [](double t) { return std::exp(-t) / std::sqrt(t); }, -0.5);
  CHECK(root_sing.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));

  // t e^{-t}/(1+e^{-t})^2 = Gamma(2) * (eta-type integral) = ln 2
  auto eta_like = integrate_semi_infinite(
      [](double t) {
        const double e = std::exp(-t);
        return t * e / ((1.0 + e) * (1.0 + e));
      },
      1.0);
  CHECK(eta_like.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("semi-infinite quadrature reproduces Gamma(s)") {
  for (double s : {0.5, 1.0, 1.5, 2.0, 3.5}) {
    auto result = integrate_semi_infinite(
        [s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); }, s - 1.0);
    CHECK(result.value == doctest::Approx(std::tgamma(s)).epsilon(1e-10));
  }
}

TEST_CASE("semi-infinite quadrature error paths") {
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, -1.5),
                  DomainError);
  CHECK_THROWS_AS(integrate_semi_infinite(
                      [](double t) { return std::numeric_limits<double>::quiet_NaN() * t; },
                      0.0),
                  DomainError);
}

TEST_CASE("finite quadrature basics") {
  auto sine = integrate_finite([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-12));

  auto unit = integrate_finite([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(integrate_finite([](double) { return 0.0; }, 1.0, 0.0),
                  DomainError);
}

TEST_CASE("finite quadrature handles the Bernoulli-cotangent integrand") {
  // B_3(u) cot(pi u) has removable endpoint singularities; the assembled
  // value must agree with zeta(3) from the accelerated eta series.
  auto integral = integrate_finite(
      [](double u) {
        const double si = std::sin(kPi * u);
        if (si == 0.0) return 0.0;
        return bernoulli_polynomial(3, u) * std::cos(kPi * u) / si;
      },
      0.0, 1.0);
  const double zeta3_from_integral =
      std::pow(2.0 * kPi, 3.0) / (2.0 * 6.0) * integral.value;
  NumericValue eta2 = alternating_series_sum([](long j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    return sign / (static_cast<double>(j) * j * j);
  });
  const double zeta3_from_eta = eta2.value / (1.0 - std::pow(2.0, -2.0));
  CHECK(zeta3_from_integral ==
        doctest::Approx(zeta3_from_eta).epsilon(1e-10));
  CHECK(zeta3_from_eta == doctest::Approx(1.2020569031595943).epsilon(1e-12));
}

TEST_CASE("alternating series: convergent cases") {
  NumericValue ln2 = alternating_series_sum([](long j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    return sign / static_cast<double>(j);
  });
  CHECK(ln2.value == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK(ln2.method == Method::series);

  NumericValue eta2 = alternating_series_sum([](long j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    return sign / static_cast<double>(j * j);
  });
  CHECK(eta2.value == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-13));
}

TEST_CASE("alternating series: divergence is detected") {
  CHECK_THROWS_AS(alternating_series_sum([](long j) {
                    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
                    return sign * std::sqrt(static_cast<double>(j));
                  }),
                  DivergenceError);
  // constant magnitude (the n=2 case of the classic expansion) also fails
  CHECK_THROWS_AS(alternating_series_sum(
                      [](long j) { return (j % 2 == 1) ? 1.0 : -1.0; }),
                  DivergenceError);
}

TEST_CASE("series and quadrature agree on the order-2 eta-type values") {
  // Phi*_2(-1, s, 1) = sum_j (-1)^{j-1} j^{1-s}  vs  the defining integral
  for (double s : {1.5, 2.0, 3.0}) {
    NumericValue series = alternating_series_sum([s](long j) {
      const double sign = (j % 2 == 1) ? 1.0 : -1.0;
      return sign * std::pow(static_cast<double>(j), 1.0 - s);
    });
    NumericValue integral = integrate_semi_infinite(
        [s](double t) {
          const double e = std::exp(-t);
          const double log_power = (s - 1.0) * std::log(t) - t;
          if (log_power < -745.0) return 0.0;
          return std::exp(log_power) / ((1.0 + e) * (1.0 + e));
        },
        s - 1.0);
    CHECK(series.value ==
          doctest::Approx(integral.value / std::tgamma(s)).epsilon(1e-9));
  }
}

TEST_CASE("alternating series: terms that vanish early") {
  NumericValue fast = alternating_series_sum([](long j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    return sign * std::pow(static_cast<double>(j), -40.0);
  });
  CHECK(fast.value == doctest::Approx(1.0 - std::pow(2.0, -40.0)).epsilon(1e-14));
}

TEST_CASE("root finding on simple brackets") {
  CHECK(find_root_increasing([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(find_root_increasing([](double x) { return x * x * x - 8.0; }, 0.0, 3.0,
                             1e-12) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK_THROWS_AS(
      find_root_increasing([](double x) { return x + 1.0; }, 0.0, 2.0, 1e-12),
      PreconditionError);
}

TEST_CASE("root finding resolves randomized monotone cubics to bracket width") {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> coef(0.1, 3.0);
  std::uniform_real_distribution<double> root(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double c1 = coef(rng), c3 = coef(rng), x0 = root(rng);
    auto f = [&](double x) {
      const double d = x - x0;
      return c3 * d * d * d + c1 * d;  // strictly increasing
    };
    const double tol = 1e-10;
    const double x = find_root_increasing(f, -4.0, 4.0, tol);
    CHECK(std::abs(x - x0) <= tol);
  }
}

TEST_CASE("Bernoulli numbers match the tabulated values") {
  std::vector<double> b = bernoulli_numbers(8);
  CHECK(b[0] == doctest::Approx(1.0));
  CHECK(b[1] == doctest::Approx(-0.5));
  CHECK(b[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(b[3] == doctest::Approx(0.0));
  CHECK(b[4] == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
  CHECK(b[6] == doctest::Approx(1.0 / 42.0).epsilon(1e-14));
  CHECK_THROWS_AS(bernoulli_numbers(65), RangeError);
  CHECK_THROWS_AS(bernoulli_numbers(-1), DomainError);
}

TEST_CASE("odd Bernoulli numbers past B_1 vanish") {
  std::vector<double> b = bernoulli_numbers(21);
  for (int n = 3; n <= 21; n += 2) {
    // the recurrence produces small rounding residue, not exact zero
    CHECK(std::abs(b[static_cast<std::size_t>(n)]) < 1e-10);
  }
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_polynomial(0, 0.7) == doctest::Approx(1.0));
  CHECK(bernoulli_polynomial(1, 0.0) == doctest::Approx(-0.5));
  CHECK(bernoulli_polynomial(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(bernoulli_polynomial(70, 0.5), RangeError);

  SUBCASE("B_n(0) equals B_n through the same arithmetic path") {
    for (int n = 0; n <= 20; ++n) {
      std::vector<double> b = bernoulli_numbers(n);
      CHECK(bernoulli_polynomial(n, 0.0) == b[static_cast<std::size_t>(n)]);
    }
  }
  SUBCASE("B_n(1) = B_n(0) for n != 1") {
    for (int n = 0; n <= 20; ++n) {
      if (n == 1) continue;
      const double at1 = bernoulli_polynomial(n, 1.0);
      const double at0 = bernoulli_polynomial(n, 0.0);
      CHECK(at1 == doctest::Approx(at0).epsilon(1e-9).scale(
                       std::max(1.0, std::abs(at0))));
    }
  }
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec bad;
  bad.relative_tolerance = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = QuadratureSpec{};
  bad.max_refinement_levels = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(set_default_quadrature_relative_tolerance(0.0), DomainError);
}
