// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent oracles cross-checking the closed forms: Monte-Carlo moment
// and characteristic-function estimators, direct numeric pdf normalization,
// and Kolmogorov-style sampler distribution tests. Every report is
// reproducible from (seed, parameters) alone.

#ifndef GML_VALIDATION_HPP
#define GML_VALIDATION_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gml/transforms.hpp"

namespace gml {

struct CheckResult {
  std::string name;
  std::complex<double> expected{0.0, 0.0};
  std::complex<double> observed{0.0, 0.0};
  double tolerance = 0.0;
  std::optional<double> standard_error;
  bool passed = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  bool all_passed() const;
  void append(const ValidationReport& other);
};

/// passed <=> |expected - observed| <= max(tolerance, 3 * SE when present).
CheckResult make_check(std::string name, std::complex<double> expected,
                       std::complex<double> observed, double tolerance,
                       std::optional<double> standard_error = std::nullopt);

/// Serialize to the CLI's JSON schema. Timing is wall-clock and may be
/// excluded when byte-identical reports are wanted.
std::string report_to_json(const ValidationReport& report,
                           bool include_timing = true);

/// Empirical mean / covariance / selected product moments of `count` fresh
/// draws against the closed forms, 3-standard-error bands. count >= 10^4.
ValidationReport mc_moment_check(const GmlDistribution& dist, long count,
                                 std::uint64_t seed);

/// Same comparisons over an existing batch of draws (used to re-validate
/// sample files without resampling).
ValidationReport mc_moment_check_on(const GmlDistribution& dist,
                                    const Eigen::MatrixXd& draws,
                                    std::uint64_t seed);

/// Tensorized Gauss-Legendre integration of the pdf over +-10 dispersion
/// radii; expected 1 within 1e-6. Dimensions above 3 are rejected.
ValidationReport pdf_normalization_check(const GmlDistribution& dist);

/// Empirical mean of exp(i t'X) against cf(t) per grid point. count >= 10^5.
ValidationReport cf_mc_check(const GmlDistribution& dist,
                             const std::vector<Eigen::VectorXd>& t_grid,
                             long count, std::uint64_t seed);

/// Kolmogorov sup-distance between the empirical CDF of one sampled
/// component and the numeric CDF of its one-dimensional marginal law;
/// passes below the 1%-level asymptotic bound with 1.5x slack.
ValidationReport marginal_sampler_check(const GmlDistribution& dist,
                                        int component_index, long count,
                                        std::uint64_t seed);

/// The same test against an arbitrary one-dimensional law (the negative
/// control swaps in a law built on the raw n-dimensional generator, which
/// must fail at these sample sizes).
ValidationReport marginal_sampler_check_against(const GmlDistribution& dist,
                                                int component_index, long count,
                                                std::uint64_t seed,
                                                const EllipticalLaw& law_1d);

enum class Suite { constants, moments, cf, marginals, all };

Suite suite_from_name(const std::string& name);  // throws DomainError

/// Run a named bundle of checks. mc_count scales the Monte-Carlo sizes.
ValidationReport run_suite(Suite suite, std::uint64_t seed,
                           long mc_count = 1000000);

}  // namespace gml

#endif  // GML_VALIDATION_HPP
