// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gml/specfun.hpp"

namespace gml {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::MatrixXd spd_factor(const Eigen::MatrixXd& sigma) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw RankError("dispersion matrix is not positive definite");
  }
  return llt.matrixL();
}

void check_indices(const std::vector<int>& indices, int n) {
  if (indices.empty()) {
    throw IndexError("index set must be nonempty");
  }
  if (static_cast<int>(indices.size()) >= n) {
    throw IndexError("index set must be a proper subset of the coordinates");
  }
  std::set<int> seen;
  for (int i : indices) {
    if (i < 0 || i >= n) {
      throw IndexError("coordinate index out of range");
    }
    if (!seen.insert(i).second) {
      throw IndexError("coordinate indices must be distinct");
    }
  }
}

std::vector<int> complement_of(const std::vector<int>& indices, int n) {
  std::set<int> chosen(indices.begin(), indices.end());
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (!chosen.count(i)) rest.push_back(i);
  }
  return rest;
}

// Normalizer of the k-fold marginal generator:
// int t^{m/2-1} g_(m)(t) dt = Gamma(m/2) Gamma((n-m)/2) a^{-n/2} Phi*_r(-1, n/2, b/a).
double marginal_normalizer(int m, int n, const GeneratorParams& p) {
  const double half_n = 0.5 * n;
  return std::tgamma(0.5 * m) * std::tgamma(0.5 * (n - m)) *
         std::pow(p.a, -half_n) *
         phi_star(-1.0, half_n, p.b / p.a, p.r).value;
}

}  // namespace

EllipticalLaw::EllipticalLaw(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                             std::function<double(double)> generator,
                             std::optional<double> normalizer)
    : mu_(std::move(mu)),
      sigma_(std::move(sigma)),
      factor_(spd_factor(sigma_)),
      generator_(std::move(generator)) {
  if (mu_.size() != sigma_.rows() || sigma_.rows() != sigma_.cols()) {
    throw ShapeError("location/dispersion dimensions are inconsistent");
  }
  log_det_sigma_ = 2.0 * factor_.diagonal().array().log().sum();
  if (normalizer.has_value()) {
    normalizer_ = *normalizer;
  } else {
    const double half_m = 0.5 * dim();
    const auto& gen = generator_;
    normalizer_ = integrate_semi_infinite(
                      [&gen, half_m](double t) {
                        return std::pow(t, half_m - 1.0) * gen(t);
                      },
                      half_m - 1.0)
                      .value;
  }
  if (!(normalizer_ > 0.0) || !std::isfinite(normalizer_)) {
    throw DomainError("elliptical law normalizer must be positive and finite");
  }
}

double EllipticalLaw::mahalanobis(const Eigen::VectorXd& x) const {
  if (x.size() != mu_.size()) {
    throw ShapeError("point dimension does not match the law");
  }
  return factor_.triangularView<Eigen::Lower>().solve(x - mu_).squaredNorm();
}

double EllipticalLaw::pdf(const Eigen::VectorXd& x) const {
  const double q = mahalanobis(x);
  const double half_m = 0.5 * dim();
  const double front = std::tgamma(half_m) * std::pow(kPi, -half_m) /
                       normalizer_ * std::exp(-0.5 * log_det_sigma_);
  return front * generator_(q);
}

GmlDistribution affine_full_rank(const GmlDistribution& dist,
                                 const Eigen::MatrixXd& b_matrix,
                                 const Eigen::VectorXd& b_offset) {
  const int n = dist.dim();
  if (b_matrix.rows() != n || b_matrix.cols() != n || b_offset.size() != n) {
    throw ShapeError("affine map must be n x n with an n-vector offset");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(b_matrix);
  if (!lu.isInvertible()) {
    throw RankError("affine transform matrix is singular");
  }
  return GmlDistribution(b_matrix * dist.location() + b_offset,
                         b_matrix * dist.dispersion() * b_matrix.transpose(),
                         dist.params());
}

ProjectedLaw::ProjectedLaw(const GmlDistribution& source,
                           Eigen::MatrixXd b_matrix, Eigen::VectorXd b_offset)
    : source_(source),
      b_matrix_(std::move(b_matrix)),
      b_offset_(std::move(b_offset)),
      law_(b_matrix_ * source.location() + b_offset_,
           b_matrix_ * source.dispersion() * b_matrix_.transpose(),
           marginal_generator(static_cast<int>(b_matrix_.rows()), source.dim(),
                              source.params()),
           marginal_normalizer(static_cast<int>(b_matrix_.rows()), source.dim(),
                               source.params())) {}

SampleBatch ProjectedLaw::sample_pushforward(long count,
                                             std::uint64_t seed) const {
  SampleBatch full = source_.sample(count, seed);
  SampleBatch out;
  out.seed = seed;
  out.count = count;
  out.draws = (full.draws * b_matrix_.transpose()).rowwise() +
              b_offset_.transpose();
  return out;
}

SampleBatch ProjectedLaw::sample_radial_mixing(long count,
                                               std::uint64_t seed) const {
  const int m = law_.dim();
  const int n = source_.dim();
  const Eigen::MatrixXd factor = law_.factor();
  const Eigen::VectorXd& mu = law_.location();
  SampleBatch out;
  out.seed = seed;
  out.count = count;
  out.draws.resize(count, m);
  constexpr long kChunk = 8192;
  for (long start = 0; start < count; start += kChunk) {
    const long stop = std::min(count, start + kChunk);
    RngStream rng(RngStream::derive(
        seed, 0x9000000000000000ULL + static_cast<std::uint64_t>(start / kChunk)));
    Eigen::VectorXd z(m);
    for (long i = start; i < stop; ++i) {
      const double radius = radial_sample(source_.radial(), rng);
      const double mix = rng.beta(0.5 * m, 0.5 * (n - m));
      double norm_sq = 0.0;
      do {
        for (int j = 0; j < m; ++j) z[j] = rng.normal();
        norm_sq = z.squaredNorm();
      } while (norm_sq == 0.0);
      z *= std::sqrt(radius * mix / norm_sq);
      out.draws.row(i) =
          (mu + factor.triangularView<Eigen::Lower>() * z).transpose();
    }
  }
  return out;
}

ProjectedLaw project(const GmlDistribution& dist,
                     const Eigen::MatrixXd& b_matrix,
                     const Eigen::VectorXd& b_offset) {
  const int n = dist.dim();
  const int m = static_cast<int>(b_matrix.rows());
  if (b_matrix.cols() != n || b_offset.size() != m) {
    throw ShapeError("projection must map n coordinates to m with an m-offset");
  }
  if (m >= n) {
    throw RankError("projection requires m < n (use affine_full_rank otherwise)");
  }
  // pivoted factorization with the usual relative threshold
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b_matrix.transpose());
  qr.setThreshold(1e-10);
  if (qr.rank() < m) {
    throw RankError("projection matrix is rank-deficient");
  }
  return ProjectedLaw(dist, b_matrix, b_offset);
}

EllipticalLaw marginalize(const GmlDistribution& dist,
                          const std::vector<int>& indices) {
  const int n = dist.dim();
  check_indices(indices, n);
  const int m = static_cast<int>(indices.size());
  Eigen::VectorXd mu(m);
  Eigen::MatrixXd sigma(m, m);
  for (int i = 0; i < m; ++i) {
    mu[i] = dist.location()[indices[static_cast<std::size_t>(i)]];
    for (int j = 0; j < m; ++j) {
      sigma(i, j) = dist.dispersion()(indices[static_cast<std::size_t>(i)],
                                      indices[static_cast<std::size_t>(j)]);
    }
  }
  return EllipticalLaw(std::move(mu), std::move(sigma),
                       marginal_generator(m, n, dist.params()),
                       marginal_normalizer(m, n, dist.params()));
}

EllipticalLaw condition(const GmlDistribution& dist,
                        const std::vector<int>& indices,
                        const Eigen::VectorXd& x1) {
  const int n = dist.dim();
  check_indices(indices, n);
  const int m = static_cast<int>(indices.size());
  if (x1.size() != m) {
    throw ShapeError("observed block length must match the index set");
  }
  const std::vector<int> rest = complement_of(indices, n);
  const int k = static_cast<int>(rest.size());

  Eigen::VectorXd mu1(m), mu2(k);
  Eigen::MatrixXd s11(m, m), s12(m, k), s22(k, k);
  for (int i = 0; i < m; ++i) {
    mu1[i] = dist.location()[indices[static_cast<std::size_t>(i)]];
    for (int j = 0; j < m; ++j)
      s11(i, j) = dist.dispersion()(indices[static_cast<std::size_t>(i)],
                                    indices[static_cast<std::size_t>(j)]);
    for (int j = 0; j < k; ++j)
      s12(i, j) = dist.dispersion()(indices[static_cast<std::size_t>(i)],
                                    rest[static_cast<std::size_t>(j)]);
  }
  for (int i = 0; i < k; ++i) {
    mu2[i] = dist.location()[rest[static_cast<std::size_t>(i)]];
    for (int j = 0; j < k; ++j)
      s22(i, j) = dist.dispersion()(rest[static_cast<std::size_t>(i)],
                                    rest[static_cast<std::size_t>(j)]);
  }

  Eigen::LLT<Eigen::MatrixXd> llt11(s11);
  if (llt11.info() != Eigen::Success) {
    throw RankError("observed-block dispersion is not positive definite");
  }
  const Eigen::VectorXd delta = x1 - mu1;
  const Eigen::VectorXd solved = llt11.solve(delta);
  const double q1 = delta.dot(solved);
  const Eigen::VectorXd mu_cond = mu2 + s12.transpose() * solved;
  const Eigen::MatrixXd sigma_cond =
      s22 - s12.transpose() * llt11.solve(s12);

  const GeneratorParams params = dist.params();
  auto generator = [params, q1](double t) {
    return conditional_generator(t, q1, params);
  };
  // int t^{k/2-1} g(t + q1) dt is the (n-k)-margin generator value at q1
  const double nu = 0.5 * k;
  const double normalizer =
      std::exp(-params.b * q1) * std::pow(params.a, -nu) * std::tgamma(nu) *
      phi_star(-std::exp(-params.a * q1), nu, params.b / params.a, params.r)
          .value;
  EllipticalLaw law(mu_cond, sigma_cond, generator, normalizer);
  if (q1 < 1e-14) {
    law.tag_family(params);
  }
  return law;
}

}  // namespace gml
