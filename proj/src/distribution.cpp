// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/distribution.hpp"

#include <cmath>

#include "gml/specfun.hpp"

namespace gml {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long kSampleChunk = 8192;

Eigen::MatrixXd checked_cholesky(const Eigen::MatrixXd& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() < 1) {
    throw ShapeError("dispersion matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("dispersion matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw RankError("dispersion matrix is not positive definite");
  }
  return llt.matrixL();
}

}  // namespace

GmlDistribution::GmlDistribution(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                                 const GeneratorParams& params)
    : mu_(std::move(mu)),
      sigma_(std::move(sigma)),
      factor_(checked_cholesky(sigma_)),
      params_(params),
      d_n_(norm_const_d(static_cast<int>(mu_.size()), params)),
      radial_(static_cast<int>(mu_.size()), params) {
  if (mu_.size() != sigma_.rows()) {
    throw ShapeError("location and dispersion dimensions differ");
  }
  log_det_sigma_ = 2.0 * factor_.diagonal().array().log().sum();
}

double GmlDistribution::mahalanobis(const Eigen::VectorXd& x) const {
  if (x.size() != mu_.size()) {
    throw ShapeError("point dimension does not match the distribution");
  }
  return factor_.triangularView<Eigen::Lower>()
      .solve(x - mu_)
      .squaredNorm();
}

double GmlDistribution::pdf(const Eigen::VectorXd& x) const {
  return std::exp(log_pdf(x));
}

double GmlDistribution::log_pdf(const Eigen::VectorXd& x) const {
  const double q = mahalanobis(x);
  return std::log(d_n_) - 0.5 * log_det_sigma_ + log_generator_g(q, params_);
}

double GmlDistribution::cov_scale() const {
  const double half_n = 0.5 * dim();
  const double num =
      phi_star(-1.0, half_n + 1.0, params_.b / params_.a, params_.r).value;
  const double den =
      phi_star(-1.0, half_n, params_.b / params_.a, params_.r).value;
  return num / (2.0 * params_.a * den);
}

Eigen::MatrixXd GmlDistribution::cov() const { return cov_scale() * sigma_; }

double GmlDistribution::product_moment(const std::vector<int>& orders) const {
  if (static_cast<int>(orders.size()) != dim()) {
    throw ShapeError("one moment order per coordinate is required");
  }
  long m = 0;
  for (int mi : orders) {
    if (mi < 0) throw DomainError("moment orders must be >= 0");
    m += mi;
  }
  if (m == 0) return 1.0;
  const double half_n = 0.5 * dim();
  const double num =
      phi_star(-1.0, half_n + m, params_.b / params_.a, params_.r).value;
  const double den =
      phi_star(-1.0, half_n, params_.b / params_.a, params_.r).value;
  // ascending factorial (n/2)^{[m]}
  double ascending = 1.0;
  for (long k = 0; k < m; ++k) ascending *= half_n + k;
  double coordinate_product = 1.0;
  for (int mi : orders) {
    // (2 m_i)! / (4^{m_i} m_i!)
    double c = 1.0;
    for (int j = 1; j <= mi; ++j) {
      c *= static_cast<double>(2 * j - 1) / 2.0;  // (2m)!/(4^m m!) = prod (j-1/2)
    }
    coordinate_product *= c;
  }
  const double gamma_ratio =
      std::exp(std::lgamma(half_n + m) - std::lgamma(half_n));
  return std::pow(params_.a, -static_cast<double>(m)) * gamma_ratio * num /
         (ascending * den) * coordinate_product;
}

SampleBatch GmlDistribution::sample(long count, std::uint64_t seed) const {
  if (count < 0) throw DomainError("sample count must be >= 0");
  const int n = dim();
  SampleBatch batch;
  batch.draws.resize(count, n);
  batch.seed = seed;
  batch.count = count;
  for (long start = 0; start < count; start += kSampleChunk) {
    const long stop = std::min(count, start + kSampleChunk);
    RngStream rng(RngStream::derive(seed, static_cast<std::uint64_t>(
                                              start / kSampleChunk)));
    Eigen::VectorXd z(n);
    for (long i = start; i < stop; ++i) {
      const double radius = radial_sample(radial_, rng);
      double norm_sq = 0.0;
      do {
        for (int j = 0; j < n; ++j) z[j] = rng.normal();
        norm_sq = z.squaredNorm();
      } while (norm_sq == 0.0);
      z *= std::sqrt(radius / norm_sq);
      batch.draws.row(i) =
          (mu_ + factor_.triangularView<Eigen::Lower>() * z).transpose();
    }
  }
  return batch;
}

double GmlDistribution::cf_radial_series(double y) const {
  const int n = dim();
  const double half_n = 0.5 * n;
  const double ratio = params_.b / params_.a;
  const double base = phi_star(-1.0, half_n, ratio, params_.r).value;
  // psi(y) = E[Omega_n(R y)]
  //        = sum_k (-y/(4a))^k Phi*_r(-1, n/2+k, b/a) / (k! Phi*_r(-1, n/2, b/a)),
  // the 0F1 sphere series integrated term-by-term against E(R^k).
  double factor = 1.0;  // (-y/(4a))^k / k!
  double sum = 0.0, comp = 0.0;
  double prev_mag = 0.0;
  int decreasing_run = 0;
  constexpr int kMaxTerms = 400;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double phi_k = phi_star(-1.0, half_n + k, ratio, params_.r).value;
    const double term = factor * phi_k / base;
    const double yk = term - comp;
    const double t = sum + yk;
    comp = (t - sum) - yk;
    sum = t;
    const double mag = std::abs(term);
    const double scale = std::max(std::abs(sum), 1e-30);
    if (k > 2 && mag < prev_mag) {
      ++decreasing_run;
      if (mag <= 1e-12 * scale && decreasing_run >= 2) {
        return sum;
      }
    } else if (k > 2) {
      decreasing_run = 0;
    }
    prev_mag = mag;
    factor *= -y / (4.0 * params_.a * (k + 1.0));
  }
  throw ConvergenceError("characteristic-function series did not converge",
                         std::complex<double>(sum, 0.0), prev_mag);
}

double GmlDistribution::cf_radial_quadrature(double y) const {
  const int n = dim();
  const double half_n = 0.5 * n;
  const RadialLaw& law = radial_;
  const GeneratorParams& p = params_;
  // The mixture integrand oscillates through Omega_n; a full 1e-12 relative
  // target is unreachable there and unnecessary (the paths are compared at
  // 1e-8), so this path runs on its own slightly loosened spec.
  QuadratureSpec spec = default_quadrature_spec();
  spec.relative_tolerance = std::max(spec.relative_tolerance, 1e-10);
  spec.absolute_tolerance = std::max(spec.absolute_tolerance, 1e-13);

  auto integrand = [&](double v) {
    // |Omega_n| <= 1, so skip where the radial density has underflowed
    const double log_density = (half_n - 1.0) * std::log(v) +
                               log_generator_g(v, p) -
                               std::log(law.normalizer());
    if (log_density < -700.0) return 0.0;
    return std::exp(log_density) * omega_n(n, v * y);
  };

  // Geometrically growing panels follow the exponential decay of f_R while
  // each panel only sees a handful of Omega_n oscillations.
  double total = 0.0;
  double lo = 0.0;
  double width = 4.0 / p.b;
  const double cap = (720.0 + 5.0 * n) / p.b;
  while (lo < cap) {
    const double hi = std::min(cap, lo + width);
    total += integrate_finite(integrand, lo, hi, spec).value;
    if (log_generator_g(hi, p) - std::log(law.normalizer()) < -720.0) break;
    lo = hi;
    width *= 2.0;
  }
  return total;
}

std::complex<double> GmlDistribution::cf(const Eigen::VectorXd& t) const {
  if (t.size() != mu_.size()) {
    throw ShapeError("frequency vector dimension does not match");
  }
  const double y = t.dot(sigma_ * t);
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, t.dot(mu_)));
  if (y == 0.0) return phase;
  // The largest alternating term is ~exp(y/(4b)); keep it inside the
  // double-precision cancellation budget or go through the mixture integral.
  const bool series_in_budget =
      y <= 100.0 * params_.a && y <= 100.0 * params_.b;
  double modulus;
  try {
    if (series_in_budget) {
      try {
        modulus = cf_radial_series(y);
      } catch (const ConvergenceError&) {
        modulus = cf_radial_quadrature(y);
      }
    } else {
      modulus = cf_radial_quadrature(y);
    }
  } catch (const ConvergenceError&) {
    throw RangeError(
        "characteristic-function quadrature exceeded its node budget");
  }
  std::complex<double> psi = phase * modulus;
  const double mag = std::abs(psi);
  if (mag > 1.0 && mag <= 1.0 + 1e-10) psi /= mag;  // rounding guard
  return psi;
}

double omega_n(int n, double y) {
  if (n < 1) throw DomainError("sphere dimension must be >= 1");
  if (!(y >= 0.0)) throw DomainError("omega_n argument must be >= 0");
  if (y <= 400.0) {
    // 0F1(n/2; -y/4); extended precision keeps the alternating cancellation
    // below 1e-10 absolute over the whole series range.
    long double term = 1.0L;
    long double sum = 0.0L;
    const long double quarter = -static_cast<long double>(y) / 4.0L;
    for (int k = 0; k < 500; ++k) {
      sum += term;
      term *= quarter / ((0.5L * n + k) * (k + 1.0L));
      if (std::abs(static_cast<double>(term)) < 1e-25 && k > 4) break;
    }
    return static_cast<double>(sum);
  }
  if (n == 1) {
    // the theta definition degenerates to the two-point law on {-1, +1}
    return std::cos(std::sqrt(y));
  }
  const double root = std::sqrt(y);
  // |Omega_n| <= 1: near its zeros the integral cancels to ~0 and a pure
  // relative target is unreachable, so give the quadrature an absolute floor.
  QuadratureSpec spec = default_quadrature_spec();
  spec.absolute_tolerance = std::max(spec.absolute_tolerance, 1e-14);
  NumericValue integral = integrate_finite(
      [n, root](double theta) {
        return std::cos(root * std::cos(theta)) *
               std::pow(std::sin(theta), n - 2);
      },
      0.0, kPi, spec);
  const double log_beta =
      std::lgamma(0.5 * (n - 1)) + std::lgamma(0.5) - std::lgamma(0.5 * n);
  return integral.value / std::exp(log_beta);
}

std::complex<double> cf_1d(double t, double mu, double sigma,
                           const GeneratorParams& params) {
  params.validate();
  if (!(sigma > 0.0)) throw DomainError("cf_1d requires sigma > 0");
  if (std::abs(t) * sigma > 1e3) {
    throw RangeError("cf_1d oscillation exceeds the quadrature node budget");
  }
  const double d1 = norm_const_d(1, params);
  NumericValue integral = integrate_semi_infinite(
      [&](double y) {
        const double lg = -0.5 * std::log(y) + log_generator_g(y, params);
        if (lg < -745.0) return 0.0;
        return std::cos(t * sigma * std::sqrt(y)) * std::exp(lg);
      },
      -0.5);
  return d1 * integral.value * std::exp(std::complex<double>(0.0, t * mu));
}

}  // namespace gml
