// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closure operations on the family: full-rank affine maps stay inside it,
// rank-deficient projections / marginals / conditionals leave it but remain
// elliptical with explicit generators.

#ifndef GML_TRANSFORMS_HPP
#define GML_TRANSFORMS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gml/distribution.hpp"

namespace gml {

/// A general elliptical law Ell_m(mu, Sigma, generator): the closure of the
/// family under projection and conditioning. The normalizer caches
/// int_0^inf t^{m/2-1} generator(t) dt, fixed at construction.
class EllipticalLaw {
public:
  /// If `normalizer` is omitted it is computed by quadrature.
  EllipticalLaw(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                std::function<double(double)> generator,
                std::optional<double> normalizer = std::nullopt);

  int dim() const { return static_cast<int>(mu_.size()); }
  const Eigen::VectorXd& location() const { return mu_; }
  const Eigen::MatrixXd& dispersion() const { return sigma_; }
  const std::function<double(double)>& generator() const { return generator_; }
  double normalizer() const { return normalizer_; }
  const Eigen::MatrixXd& factor() const { return factor_; }

  double mahalanobis(const Eigen::VectorXd& x) const;
  /// Gamma(m/2) pi^{-m/2} / normalizer * |Sigma|^{-1/2} * generator(q(x)).
  double pdf(const Eigen::VectorXd& x) const;

  /// Set when the law is a recognized member of the generating family
  /// (a conditional at x1 = mu1); carries the member's parameters.
  bool in_gml_family() const { return in_family_; }
  const GeneratorParams& family_params() const { return family_params_; }
  void tag_family(const GeneratorParams& params) {
    in_family_ = true;
    family_params_ = params;
  }

private:
  Eigen::VectorXd mu_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd factor_;
  double log_det_sigma_;
  std::function<double(double)> generator_;
  double normalizer_;
  bool in_family_ = false;
  GeneratorParams family_params_{};
};

/// Full-rank affine image Y = B X + b: same generator parameters, location
/// B mu + b, dispersion B Sigma B'. Singular B raises RankError.
GmlDistribution affine_full_rank(const GmlDistribution& dist,
                                 const Eigen::MatrixXd& b_matrix,
                                 const Eigen::VectorXd& b_offset);

/// Rank-deficient projection Y = B X + b (B is m x n, rank m < n): the law
/// carries the (n-m)-fold tail-integrated generator, and its radial variable
/// mixes with an independent Beta(m/2, (n-m)/2) weight. Both stochastic
/// representations are exposed as samplers.
class ProjectedLaw {
public:
  ProjectedLaw(const GmlDistribution& source, Eigen::MatrixXd b_matrix,
               Eigen::VectorXd b_offset);

  const EllipticalLaw& law() const { return law_; }
  const GmlDistribution& source() const { return source_; }

  /// Path 1: push full-dimensional draws through (B, b).
  SampleBatch sample_pushforward(long count, std::uint64_t seed) const;
  /// Path 2: Y = Bmu + b + sqrt(R W) A_Y u^{(m)}, W ~ Beta(m/2, (n-m)/2).
  SampleBatch sample_radial_mixing(long count, std::uint64_t seed) const;

private:
  GmlDistribution source_;
  Eigen::MatrixXd b_matrix_;
  Eigen::VectorXd b_offset_;
  EllipticalLaw law_;
};

ProjectedLaw project(const GmlDistribution& dist,
                     const Eigen::MatrixXd& b_matrix,
                     const Eigen::VectorXd& b_offset);

/// Marginal law of the chosen coordinates (0-based, distinct, proper subset):
/// the projection by the coordinate-selection matrix, computed directly by
/// block extraction.
EllipticalLaw marginalize(const GmlDistribution& dist,
                          const std::vector<int>& indices);

/// Conditional law of the complementary block given X^(1) = x1 on `indices`:
///   mu_{2.1} = mu2 + Sigma21 Sigma11^{-1} (x1 - mu1),
///   Sigma_{22.1} = Sigma22 - Sigma21 Sigma11^{-1} Sigma12,
/// generator t -> g(t + q1). At q1 < 1e-14 the law is tagged in-family.
EllipticalLaw condition(const GmlDistribution& dist,
                        const std::vector<int>& indices,
                        const Eigen::VectorXd& x1);

}  // namespace gml

#endif  // GML_TRANSFORMS_HPP
