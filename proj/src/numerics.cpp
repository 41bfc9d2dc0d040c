// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/numerics.hpp"

#include "euler_accumulator.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>

namespace gml {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// Integrands peaked away from the node origin (t^{s-1} e^{-t} with large s)
// contribute nothing at the first few nodes; the negligible-contribution
// break must not fire before the scan has reached this depth.
constexpr double kMinScanDepth = 3.5;

std::atomic<double> g_default_relative_tolerance{1e-12};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T>
bool is_finite(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <class T>
std::complex<double> as_complex(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return {v, 0.0};
  } else {
    return v;
  }
}

// One abscissa of the tanh-sinh rule at parameter u (u >= 0 refers to the
// node pair +-u). Positions are carried as distances from the nearer
// endpoint so that nodes double-exponentially close to an endpoint keep full
// precision (exact when the endpoint is 0).
struct TanhSinhNode {
  double distance = 0.0;  // from the nearer endpoint, in (0, span]
  double weight = 0.0;    // already includes the interval half-width
};

TanhSinhNode tanh_sinh_node(double u, double half_width) {
  TanhSinhNode node;
  const double v = 0.5 * kPi * std::sinh(u);
  double sech2;  // sech^2(v)
  if (v > 300.0) {
    sech2 = 4.0 * std::exp(-2.0 * v);
    node.distance = 2.0 * half_width * std::exp(-2.0 * v);
  } else {
    const double ch = std::cosh(v);
    sech2 = 1.0 / (ch * ch);
    node.distance = 2.0 * half_width / (std::exp(2.0 * v) + 1.0);
  }
  node.weight = half_width * 0.5 * kPi * std::cosh(u) * sech2;
  return node;
}

// Level-refined double-exponential quadrature over (lo, hi).
template <class T>
Numeric<T> tanh_sinh(const std::function<T(double)>& f, double lo, double hi,
                     const QuadratureSpec& spec) {
  const double span = hi - lo;
  const double half = 0.5 * span;
  const double u_max = 6.56;  // weights underflow past this

  auto eval = [&](double x) -> T {
    T v = f(x);
    if (!is_finite(v)) {
      throw DomainError("integrand returned a non-finite value");
    }
    return v;
  };

  double h = 1.0;
  T total{};
  // Level 0 includes u = 0; later levels add the odd multiples of h.
  {
    TanhSinhNode centre = tanh_sinh_node(0.0, half);
    total = eval(lo + half) * centre.weight;
    double tail_scale = magnitude(total);
    int negligible = 0;
    for (int k = 1; k * h <= u_max; ++k) {
      TanhSinhNode node = tanh_sinh_node(k * h, half);
      if (node.weight == 0.0 || node.distance == 0.0) break;
      const double x_left = lo + node.distance;
      const double x_right = hi - node.distance;
      T contrib{};
      if (x_left > lo) contrib += eval(x_left) * node.weight;
      if (x_right < hi) contrib += eval(x_right) * node.weight;
      total += contrib;
      tail_scale = std::max(tail_scale, magnitude(total));
      const double thresh =
          std::max(spec.absolute_tolerance,
                   1e-3 * spec.relative_tolerance * tail_scale);
      negligible = (magnitude(contrib) <= thresh) ? negligible + 1 : 0;
      // never break before the scan has passed any off-centre mass
      if (negligible >= 4 && k * h >= kMinScanDepth) break;
    }
  }
  T estimate = total * h;

  for (int level = 1; level <= spec.max_refinement_levels; ++level) {
    h *= 0.5;
    T level_sum{};
    double tail_scale = magnitude(total);
    int negligible = 0;
    for (int j = 0;; ++j) {
      const double u = (2 * j + 1) * h;
      if (u > u_max) break;
      TanhSinhNode node = tanh_sinh_node(u, half);
      if (node.weight == 0.0 || node.distance == 0.0) break;
      const double x_left = lo + node.distance;
      const double x_right = hi - node.distance;
      T contrib{};
      if (x_left > lo) contrib += eval(x_left) * node.weight;
      if (x_right < hi) contrib += eval(x_right) * node.weight;
      level_sum += contrib;
      tail_scale = std::max(tail_scale, magnitude(total + level_sum));
      const double thresh =
          std::max(spec.absolute_tolerance,
                   1e-3 * spec.relative_tolerance * tail_scale);
      negligible = (magnitude(contrib) <= thresh) ? negligible + 1 : 0;
      if (negligible >= 4 && u >= kMinScanDepth) break;
    }
    total += level_sum;
    const T refined = total * h;
    const double diff = magnitude(refined - estimate);
    estimate = refined;
    const double target = std::max(spec.absolute_tolerance,
                                   spec.relative_tolerance * magnitude(refined));
    if (level >= 2 && diff <= target) {
      return {estimate, diff, Method::quadrature};
    }
    if (level == spec.max_refinement_levels) {
      throw ConvergenceError("tanh-sinh quadrature did not converge",
                             as_complex(estimate), diff);
    }
  }
  return {estimate, 0.0, Method::quadrature};  // unreachable
}

// Level-refined exp-sinh quadrature over (a, inf) for exponentially decaying
// integrands. x = a + exp(v), v = (pi/2) sinh u.
template <class T>
Numeric<T> exp_sinh(const std::function<T(double)>& f, double a,
                    const QuadratureSpec& spec) {
  const double u_max = 6.8;

  auto eval = [&](double x) -> T {
    T v = f(x);
    if (!is_finite(v)) {
      throw DomainError("integrand returned a non-finite value");
    }
    return v;
  };

  auto node_contrib = [&](double u) -> T {
    const double v = 0.5 * kPi * std::sinh(u);
    if (v > 700.0) return T{};  // x beyond double range; integrand must vanish
    const double ev = std::exp(v);
    if (ev == 0.0) return T{};
    const double x = a + ev;
    if (x <= a) return T{};
    const double w = 0.5 * kPi * std::cosh(u) * ev;
    if (!std::isfinite(w)) return T{};
    return eval(x) * w;
  };

  double h = 1.0;
  T total = node_contrib(0.0);
  {
    double tail_scale = magnitude(total);
    for (int side = 0; side < 2; ++side) {
      int negligible = 0;
      for (int k = 1; k * h <= u_max; ++k) {
        const double u = (side == 0) ? k * h : -k * h;
        T contrib = node_contrib(u);
        total += contrib;
        tail_scale = std::max(tail_scale, magnitude(total));
        const double thresh =
            std::max(spec.absolute_tolerance,
                     1e-3 * spec.relative_tolerance * tail_scale);
        negligible = (magnitude(contrib) <= thresh) ? negligible + 1 : 0;
        if (negligible >= 4 && k * h >= kMinScanDepth) break;
      }
    }
  }
  T estimate = total * h;

  for (int level = 1; level <= spec.max_refinement_levels; ++level) {
    h *= 0.5;
    T level_sum{};
    double tail_scale = magnitude(total);
    for (int side = 0; side < 2; ++side) {
      int negligible = 0;
      for (int j = 0;; ++j) {
        const double u0 = (2 * j + 1) * h;
        if (u0 > u_max) break;
        const double u = (side == 0) ? u0 : -u0;
        T contrib = node_contrib(u);
        level_sum += contrib;
        tail_scale = std::max(tail_scale, magnitude(total + level_sum));
        const double thresh =
            std::max(spec.absolute_tolerance,
                     1e-3 * spec.relative_tolerance * tail_scale);
        negligible = (magnitude(contrib) <= thresh) ? negligible + 1 : 0;
        if (negligible >= 4 && u0 >= kMinScanDepth) break;
      }
    }
    total += level_sum;
    const T refined = total * h;
    const double diff = magnitude(refined - estimate);
    estimate = refined;
    const double target = std::max(spec.absolute_tolerance,
                                   spec.relative_tolerance * magnitude(refined));
    if (level >= 2 && diff <= target) {
      return {estimate, diff, Method::quadrature};
    }
    if (level == spec.max_refinement_levels) {
      throw ConvergenceError("exp-sinh quadrature did not converge",
                             as_complex(estimate), diff);
    }
  }
  return {estimate, 0.0, Method::quadrature};  // unreachable
}

template <class T>
Numeric<T> semi_infinite_impl(const std::function<T(double)>& f,
                              double endpoint_exponent,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (!(endpoint_exponent > -1.0)) {
    throw DomainError("endpoint exponent must exceed -1 for integrability");
  }

  Numeric<T> near_origin;
  if (endpoint_exponent < 0.0) {
    // t = u^p removes the t^alpha singularity: the transformed integrand is
    // p u^{p(1+alpha)-1} * (f(t) t^{-alpha}) = p * bounded.
    const double p = 1.0 / (1.0 + endpoint_exponent);
    std::function<T(double)> transformed = [&f, p](double u) -> T {
      const double t = std::pow(u, p);
      if (!(t > 0.0) || !std::isfinite(t)) return T{};
      return f(t) * (p * std::pow(u, p - 1.0));
    };
    near_origin = tanh_sinh<T>(transformed, 0.0, 1.0, spec);
  } else {
    near_origin = tanh_sinh<T>(f, 0.0, 1.0, spec);
  }
  Numeric<T> tail = exp_sinh<T>(f, 1.0, spec);
  return {near_origin.value + tail.value,
          near_origin.error_estimate + tail.error_estimate, Method::quadrature};
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::series:
      return "series";
    case Method::quadrature:
      return "quadrature";
    case Method::closed_form:
      return "closed_form";
  }
  return "unknown";
}

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0)) {
    throw DomainError("quadrature tolerances must be strictly positive");
  }
  if (max_refinement_levels < 1) {
    throw DomainError("max_refinement_levels must be >= 1");
  }
}

QuadratureSpec default_quadrature_spec() {
  QuadratureSpec spec;
  spec.relative_tolerance = g_default_relative_tolerance.load();
  return spec;
}

void set_default_quadrature_relative_tolerance(double relative_tolerance) {
  if (!(relative_tolerance > 0.0)) {
    throw DomainError("relative tolerance must be strictly positive");
  }
  g_default_relative_tolerance.store(relative_tolerance);
}

NumericValue integrate_semi_infinite(const std::function<double(double)>& f,
                                     double endpoint_exponent,
                                     const QuadratureSpec& spec) {
  return semi_infinite_impl<double>(f, endpoint_exponent, spec);
}

ComplexValue integrate_semi_infinite_complex(
    const std::function<std::complex<double>(double)>& f,
    double endpoint_exponent, const QuadratureSpec& spec) {
  return semi_infinite_impl<std::complex<double>>(f, endpoint_exponent, spec);
}

NumericValue integrate_finite(const std::function<double(double)>& f, double lo,
                              double hi, const QuadratureSpec& spec) {
  spec.validate();
  if (!(lo < hi)) {
    throw DomainError("integration interval requires lo < hi");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integrate_finite requires finite endpoints");
  }
  return tanh_sinh<double>(f, lo, hi, spec);
}

NumericValue alternating_series_sum(const std::function<double(long)>& term,
                                    const QuadratureSpec& spec) {
  spec.validate();
  constexpr int kScanStart = 64;   // divergence watch begins past this index
  constexpr int kScanWindow = 32;  // consecutive non-decreases that fail
  constexpr int kScanEnd = kScanStart + kScanWindow;
  constexpr long kMaxTerms = 100000;

  std::vector<double> head;
  head.reserve(kScanEnd);
  double raw_sum = 0.0, raw_comp = 0.0;  // Kahan
  double prev_mag = std::numeric_limits<double>::infinity();
  int nondecrease_run = 0;
  int tiny_run = 0;

  for (long j = 1; j <= kScanEnd; ++j) {
    const double t = term(j);
    if (!std::isfinite(t)) {
      throw DomainError("series term is not finite");
    }
    head.push_back(t);
    const double y = t - raw_comp;
    const double s = raw_sum + y;
    raw_comp = (s - raw_sum) - y;
    raw_sum = s;

    const double tiny =
        std::max(spec.absolute_tolerance, 0.01 * kEps * std::abs(raw_sum));
    tiny_run = (std::abs(t) <= tiny) ? tiny_run + 1 : 0;
    if (tiny_run >= 3) {
      return {raw_sum, std::abs(t), Method::series};
    }
    if (j > kScanStart) {
      const bool fails_to_decrease =
          std::abs(t) >= prev_mag && std::abs(t) > spec.absolute_tolerance;
      nondecrease_run = fails_to_decrease ? nondecrease_run + 1 : 0;
      if (nondecrease_run >= kScanWindow) {
        throw DivergenceError(
            "alternating series diverges: term magnitudes stopped decreasing");
      }
    }
    prev_mag = std::abs(t);
  }

  detail::EulerAccumulator acc(64);
  int small_increments = 0;
  double last_increment = 0.0;
  for (long k = 1; k <= kMaxTerms; ++k) {
    const double t =
        (k <= static_cast<long>(head.size())) ? head[k - 1] : term(k);
    if (!std::isfinite(t)) {
      throw DomainError("series term is not finite");
    }
    last_increment = acc.feed(t);
    const double target = std::max(spec.absolute_tolerance,
                                   spec.relative_tolerance * std::abs(acc.sum()));
    small_increments = (std::abs(last_increment) <= target && k >= 6)
                           ? small_increments + 1
                           : 0;
    if (small_increments >= 2) {
      return {acc.sum(), std::abs(last_increment), Method::series};
    }
  }
  throw ConvergenceError("alternating series summation did not converge",
                         std::complex<double>(acc.sum(), 0.0),
                         std::abs(last_increment));
}

double find_root_increasing(const std::function<double(double)>& f, double lo,
                            double hi, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("root tolerance must be strictly positive");
  }
  if (!(lo < hi)) {
    throw PreconditionError("root bracket requires lo < hi");
  }
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (std::isnan(f_lo) || std::isnan(f_hi)) {
    throw DomainError("bracket endpoint evaluated to NaN");
  }
  if (!(f_lo <= 0.0) || !(f_hi >= 0.0)) {
    throw PreconditionError("invalid bracket: need f(lo) <= 0 <= f(hi)");
  }
  for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (std::isnan(f_mid)) {
      throw DomainError("function evaluated to NaN inside the bracket");
    }
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// Exact integer binomials C(n, 0..n) rounded once to double (n <= 65; the
// row-endpoint coefficients stay exactly 1).
std::vector<double> binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  unsigned __int128 c = 1;
  for (int k = 0; k <= n; ++k) {
    row[static_cast<std::size_t>(k)] = static_cast<double>(c);
    if (k < n) {
      c = c * static_cast<unsigned>(n - k) / static_cast<unsigned>(k + 1);
    }
  }
  return row;
}

}  // namespace

std::vector<double> bernoulli_numbers(int n) {
  if (n < 0) {
    throw DomainError("bernoulli_numbers requires n >= 0");
  }
  if (n > 64) {
    throw RangeError("bernoulli_numbers supports n <= 64 in double precision");
  }
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    // sum_{j=0}^{m-1} C(m+1, j) B_j = -(m+1) B_m
    const std::vector<double> binom = binomial_row(m + 1);
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      sum += binom[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
    }
    b[static_cast<std::size_t>(m)] = -sum / static_cast<double>(m + 1);
  }
  return b;
}

double bernoulli_polynomial(int n, double x) {
  if (n < 0) {
    throw DomainError("bernoulli_polynomial requires n >= 0");
  }
  if (n > 64) {
    throw RangeError("bernoulli_polynomial supports n <= 64 in double precision");
  }
  const std::vector<double> b = bernoulli_numbers(n);
  const std::vector<double> binom = binomial_row(n);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    sum += binom[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)] *
           std::pow(x, static_cast<double>(n - k));
  }
  return sum;
}

}  // namespace gml
