// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// The n-dimensional law with density
//   f(x) = d_n |Sigma|^{-1/2} g((x-mu)' Sigma^{-1} (x-mu)),
// its exact sampler through the radial representation
//   X = mu + sqrt(R) A u,  A A' = Sigma,  u uniform on the unit sphere,
// moments, and characteristic functions.

#ifndef GML_DISTRIBUTION_HPP
#define GML_DISTRIBUTION_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "gml/generator.hpp"
#include "gml/numerics.hpp"

namespace gml {

/// A batch of draws, one per row, reproducible from the recorded seed.
struct SampleBatch {
  Eigen::MatrixXd draws;  // count x n
  std::uint64_t seed = 0;
  long count = 0;
};

class GmlDistribution {
public:
  /// sigma must be symmetric (to 1e-12 relative) and positive definite.
  GmlDistribution(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                  const GeneratorParams& params);

  int dim() const { return static_cast<int>(mu_.size()); }
  const Eigen::VectorXd& location() const { return mu_; }
  const Eigen::MatrixXd& dispersion() const { return sigma_; }
  const GeneratorParams& params() const { return params_; }
  /// Lower-triangular factor A with A A' = Sigma.
  const Eigen::MatrixXd& factor() const { return factor_; }
  double log_det_sigma() const { return log_det_sigma_; }
  /// The cached normalizing constant d_n.
  double norm_const() const { return d_n_; }
  const RadialLaw& radial() const { return radial_; }

  /// Squared Mahalanobis form (x-mu)' Sigma^{-1} (x-mu).
  double mahalanobis(const Eigen::VectorXd& x) const;

  double pdf(const Eigen::VectorXd& x) const;
  /// log d_n - 0.5 log|Sigma| + log g(q), assembled without forming pdf.
  double log_pdf(const Eigen::VectorXd& x) const;

  Eigen::VectorXd mean() const { return mu_; }
  /// Cov(X) = [Phi*_r(-1, n/2+1, b/a) / (2a Phi*_r(-1, n/2, b/a))] Sigma.
  Eigen::MatrixXd cov() const;
  /// The scalar in front of Sigma above; equals E(R)/n.
  double cov_scale() const;

  /// E(prod_i Y_i^{2 m_i}) for the standardized Y = Sigma^{-1/2}(X - mu).
  double product_moment(const std::vector<int>& orders) const;

  /// Deterministic batch sampling; the stream is split into fixed-size
  /// chunks with derived sub-seeds, so results do not depend on how the
  /// chunks are scheduled.
  SampleBatch sample(long count, std::uint64_t seed) const;

  /// Characteristic function: alternating Phi* series for t' Sigma t <= 100 a,
  /// otherwise (or on series failure) the radial-mixture quadrature
  /// e^{i t'mu} int Omega_n(v t' Sigma t) f_R(v) dv.
  std::complex<double> cf(const Eigen::VectorXd& t) const;

  /// Series CF evaluated at a given quadratic form y = t' Sigma t (the
  /// modulus part of cf; exposed for cross-checks).
  double cf_radial_series(double y) const;
  /// Quadrature CF at y = t' Sigma t through the Omega_n mixture.
  double cf_radial_quadrature(double y) const;

private:
  Eigen::VectorXd mu_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd factor_;
  double log_det_sigma_;
  GeneratorParams params_;
  double d_n_;
  RadialLaw radial_;
};

/// Characteristic function of the uniform law on the unit sphere in R^n,
/// as a function of y = ||t||^2: the 0F1(n/2; -y/4) series for y <= 400,
/// the theta-integral definition beyond (n = 1 degenerates to cos sqrt(y)).
double omega_n(int n, double y);

/// One-dimensional characteristic function
///   psi(t) = d_1 e^{i t mu} int_0^inf cos(t sigma sqrt(y)) e^{-b y}
///            / (sqrt(y) (1 + e^{-a y})^r) dy.
/// |t| sigma > 1e3 is rejected (oscillation beyond the node budget).
std::complex<double> cf_1d(double t, double mu, double sigma,
                           const GeneratorParams& params);

}  // namespace gml

#endif  // GML_DISTRIBUTION_HPP
