// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0

#include "gml/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gml/specfun.hpp"
#include "json.hpp"

namespace gml {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_k.
void gauss_legendre(int k, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(k), 0.0);
  weights.assign(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < (k + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const std::size_t lo = static_cast<std::size_t>(i);
    const std::size_t hi = static_cast<std::size_t>(k - 1 - i);
    nodes[lo] = -x;
    nodes[hi] = x;
    weights[lo] = weights[hi] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
  return RngStream::derive(seed, tag);
}

nlohmann::json value_to_json(const std::complex<double>& v) {
  if (v.imag() == 0.0) return v.real();
  return nlohmann::json::array({v.real(), v.imag()});
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  elapsed_seconds += other.elapsed_seconds;
}

CheckResult make_check(std::string name, std::complex<double> expected,
                       std::complex<double> observed, double tolerance,
                       std::optional<double> standard_error) {
  CheckResult check;
  check.name = std::move(name);
  check.expected = expected;
  check.observed = observed;
  check.tolerance = tolerance;
  check.standard_error = standard_error;
  double band = tolerance;
  if (standard_error.has_value()) {
    band = std::max(band, 3.0 * *standard_error);
  }
  check.passed = std::abs(expected - observed) <= band;
  return check;
}

std::string report_to_json(const ValidationReport& report, bool include_timing) {
  nlohmann::json out;
  out["seed"] = report.seed;
  if (include_timing) {
    out["elapsed_seconds"] = report.elapsed_seconds;
  }
  out["all_passed"] = report.all_passed();
  out["checks"] = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json entry;
    entry["name"] = c.name;
    entry["expected"] = value_to_json(c.expected);
    entry["observed"] = value_to_json(c.observed);
    entry["tolerance"] = c.tolerance;
    if (c.standard_error.has_value()) {
      entry["standard_error"] = *c.standard_error;
    }
    entry["passed"] = c.passed;
    out["checks"].push_back(entry);
  }
  return out.dump(2);
}

ValidationReport mc_moment_check(const GmlDistribution& dist, long count,
                                 std::uint64_t seed) {
  if (count < 10000) {
    throw DomainError("moment check needs at least 10^4 draws");
  }
  SampleBatch batch = dist.sample(count, seed);
  return mc_moment_check_on(dist, batch.draws, seed);
}

ValidationReport mc_moment_check_on(const GmlDistribution& dist,
                                    const Eigen::MatrixXd& draws,
                                    std::uint64_t seed) {
  const auto start = Clock::now();
  const int n = dist.dim();
  if (draws.cols() != n) {
    throw ShapeError("draw matrix width does not match the distribution");
  }
  const long count = draws.rows();
  ValidationReport report;
  report.seed = seed;

  const Eigen::VectorXd mean = draws.colwise().mean();
  const Eigen::MatrixXd centered = draws.rowwise() - mean.transpose();
  const Eigen::MatrixXd emp_cov =
      centered.transpose() * centered / static_cast<double>(count - 1);

  for (int i = 0; i < n; ++i) {
    const double se = std::sqrt(emp_cov(i, i) / static_cast<double>(count));
    report.checks.push_back(make_check("mean[" + std::to_string(i) + "]",
                                       dist.location()[i], mean[i], 0.0, se));
  }

  const Eigen::MatrixXd cov = dist.cov();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      // SE of a sample covariance entry from the empirical fourth moments
      double var_prod = 0.0;
      for (long row = 0; row < count; ++row) {
        const double p = centered(row, i) * centered(row, j);
        var_prod += (p - emp_cov(i, j)) * (p - emp_cov(i, j));
      }
      var_prod /= static_cast<double>(count);
      const double se = std::sqrt(var_prod / static_cast<double>(count));
      report.checks.push_back(
          make_check("cov[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     cov(i, j), emp_cov(i, j), 0.0, se));
    }
  }

  // standardized product moments: E(Y_1^2), E(Y_1^2 Y_2^2), E(Y_1^4)
  const Eigen::MatrixXd standardized =
      dist.factor()
          .triangularView<Eigen::Lower>()
          .solve(centered.transpose().colwise() + (mean - dist.location()))
          .transpose();
  std::vector<std::vector<int>> order_sets;
  {
    std::vector<int> e1(static_cast<std::size_t>(n), 0);
    e1[0] = 1;
    order_sets.push_back(e1);
    std::vector<int> e1e1(static_cast<std::size_t>(n), 0);
    e1e1[0] = 2;
    order_sets.push_back(e1e1);
    if (n >= 2) {
      std::vector<int> e12(static_cast<std::size_t>(n), 0);
      e12[0] = 1;
      e12[1] = 1;
      order_sets.push_back(e12);
    }
  }
  for (const auto& orders : order_sets) {
    double sum = 0.0, sum_sq = 0.0;
    for (long row = 0; row < count; ++row) {
      double value = 1.0;
      for (int i = 0; i < n; ++i) {
        for (int rep = 0; rep < 2 * orders[static_cast<std::size_t>(i)]; ++rep) {
          value *= standardized(row, i);
        }
      }
      sum += value;
      sum_sq += value * value;
    }
    const double emp = sum / static_cast<double>(count);
    const double var = sum_sq / static_cast<double>(count) - emp * emp;
    const double se = std::sqrt(std::max(var, 0.0) / static_cast<double>(count));
    std::string name = "product_moment(";
    for (std::size_t i = 0; i < orders.size(); ++i) {
      name += (i ? "," : "") + std::to_string(2 * orders[i]);
    }
    name += ")";
    report.checks.push_back(
        make_check(name, dist.product_moment(orders), emp, 0.0, se));
  }

  report.elapsed_seconds = seconds_since(start);
  return report;
}

ValidationReport pdf_normalization_check(const GmlDistribution& dist) {
  const auto start = Clock::now();
  const int n = dist.dim();
  if (n > 3) {
    throw DomainError(
        "direct pdf normalization is unsupported above dimension 3");
  }
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(16, gl_nodes, gl_weights);
  const int panels = (n == 3) ? 12 : 24;

  // per-dimension panelized nodes over +-10 dispersion radii
  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> weights(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    const double radius = 10.0 * std::sqrt(dist.dispersion()(d, d));
    const double lo = dist.location()[d] - radius;
    const double width = 2.0 * radius / panels;
    for (int p = 0; p < panels; ++p) {
      const double a = lo + p * width;
      for (std::size_t q = 0; q < gl_nodes.size(); ++q) {
        nodes[static_cast<std::size_t>(d)].push_back(
            a + 0.5 * width * (gl_nodes[q] + 1.0));
        weights[static_cast<std::size_t>(d)].push_back(0.5 * width *
                                                       gl_weights[q]);
      }
    }
  }

  double total = 0.0;
  Eigen::VectorXd x(n);
  const std::size_t len = nodes[0].size();
  if (n == 1) {
    for (std::size_t i = 0; i < len; ++i) {
      x[0] = nodes[0][i];
      total += weights[0][i] * dist.pdf(x);
    }
  } else if (n == 2) {
    for (std::size_t i = 0; i < len; ++i) {
      x[0] = nodes[0][i];
      double inner = 0.0;
      for (std::size_t j = 0; j < len; ++j) {
        x[1] = nodes[1][j];
        inner += weights[1][j] * dist.pdf(x);
      }
      total += weights[0][i] * inner;
    }
  } else {
    for (std::size_t i = 0; i < len; ++i) {
      x[0] = nodes[0][i];
      double plane = 0.0;
      for (std::size_t j = 0; j < len; ++j) {
        x[1] = nodes[1][j];
        double line = 0.0;
        for (std::size_t k = 0; k < len; ++k) {
          x[2] = nodes[2][k];
          line += weights[2][k] * dist.pdf(x);
        }
        plane += weights[1][j] * line;
      }
      total += weights[0][i] * plane;
    }
  }

  ValidationReport report;
  report.checks.push_back(make_check("pdf_normalization", 1.0, total, 1e-6));
  report.elapsed_seconds = seconds_since(start);
  return report;
}

ValidationReport cf_mc_check(const GmlDistribution& dist,
                             const std::vector<Eigen::VectorXd>& t_grid,
                             long count, std::uint64_t seed) {
  if (count < 100000) {
    throw DomainError("cf check needs at least 10^5 draws");
  }
  const auto start = Clock::now();
  SampleBatch batch = dist.sample(count, seed);
  ValidationReport report;
  report.seed = seed;
  int index = 0;
  for (const Eigen::VectorXd& t : t_grid) {
    double sum_cos = 0.0, sum_sin = 0.0, sq_cos = 0.0, sq_sin = 0.0;
    if (t.size() != dist.dim()) {
      throw ShapeError("cf grid point dimension mismatch");
    }
    const Eigen::VectorXd phases = batch.draws * t;
    for (long i = 0; i < count; ++i) {
      const double c = std::cos(phases[i]);
      const double s = std::sin(phases[i]);
      sum_cos += c;
      sq_cos += c * c;
      sum_sin += s;
      sq_sin += s * s;
    }
    const double mean_cos = sum_cos / count;
    const double mean_sin = sum_sin / count;
    std::optional<double> se;
    if ((t.array() != 0.0).any()) {
      se = std::sqrt(((sq_cos / count - mean_cos * mean_cos) +
                      (sq_sin / count - mean_sin * mean_sin)) /
                     count);
    }
    report.checks.push_back(make_check(
        "cf[" + std::to_string(index++) + "]", dist.cf(t),
        std::complex<double>(mean_cos, mean_sin), se ? 0.0 : 1e-15, se));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

namespace {

// Numeric CDF of a one-dimensional elliptical law on a uniform grid
// (cumulative Simpson), linearly interpolated.
class NumericCdf {
public:
  NumericCdf(const EllipticalLaw& law, double centre, double half_range,
             int intervals) {
    lo_ = centre - half_range;
    step_ = 2.0 * half_range / intervals;
    cdf_.resize(static_cast<std::size_t>(intervals) + 1, 0.0);
    Eigen::VectorXd x(1);
    std::vector<double> density(static_cast<std::size_t>(intervals) + 1);
    for (std::size_t i = 0; i < density.size(); ++i) {
      x[0] = lo_ + static_cast<double>(i) * step_;
      density[i] = law.pdf(x);
    }
    for (std::size_t i = 1; i < cdf_.size(); ++i) {
      x[0] = lo_ + (static_cast<double>(i) - 0.5) * step_;
      const double mid = law.pdf(x);
      cdf_[i] = cdf_[i - 1] + step_ * (density[i - 1] + 4.0 * mid + density[i]) / 6.0;
    }
    const double total = cdf_.back();
    if (!(total > 0.0)) {
      throw InternalError("numeric CDF mass vanished");
    }
    for (double& v : cdf_) v /= total;
  }

  double operator()(double x) const {
    const double pos = (x - lo_) / step_;
    if (pos <= 0.0) return 0.0;
    if (pos >= static_cast<double>(cdf_.size() - 1)) return 1.0;
    const std::size_t i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return cdf_[i] + frac * (cdf_[i + 1] - cdf_[i]);
  }

private:
  double lo_ = 0.0;
  double step_ = 1.0;
  std::vector<double> cdf_;
};

ValidationReport ks_component_check(const GmlDistribution& dist,
                                    int component_index, long count,
                                    std::uint64_t seed,
                                    const EllipticalLaw& law_1d,
                                    const std::string& label) {
  if (count < 100000) {
    throw DomainError("marginal sampler check needs at least 10^5 draws");
  }
  if (component_index < 0 || component_index >= dist.dim()) {
    throw IndexError("component index out of range");
  }
  const auto start = Clock::now();
  SampleBatch batch = dist.sample(count, seed);
  std::vector<double> values(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(i)] = batch.draws(i, component_index);
  }
  std::sort(values.begin(), values.end());

  const double centre = law_1d.location()[0];
  const double spread = std::sqrt(law_1d.dispersion()(0, 0));
  NumericCdf cdf(law_1d, centre, 14.0 * std::max(spread, 1e-8), 8192);

  double sup_distance = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double model = cdf(values[i]);
    const double ecdf_hi = static_cast<double>(i + 1) / static_cast<double>(count);
    const double ecdf_lo = static_cast<double>(i) / static_cast<double>(count);
    sup_distance = std::max(sup_distance,
                            std::max(ecdf_hi - model, model - ecdf_lo));
  }
  const double threshold = 1.63 / std::sqrt(static_cast<double>(count)) * 1.5;

  ValidationReport report;
  report.seed = seed;
  report.checks.push_back(make_check(label, 0.0, sup_distance, threshold));
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

ValidationReport marginal_sampler_check(const GmlDistribution& dist,
                                        int component_index, long count,
                                        std::uint64_t seed) {
  if (component_index < 0 || component_index >= dist.dim()) {
    throw IndexError("component index out of range");
  }
  EllipticalLaw law_1d = marginalize(dist, {component_index});
  return ks_component_check(
      dist, component_index, count, seed, law_1d,
      "ks_marginal[" + std::to_string(component_index) + "]");
}

ValidationReport marginal_sampler_check_against(const GmlDistribution& dist,
                                                int component_index, long count,
                                                std::uint64_t seed,
                                                const EllipticalLaw& law_1d) {
  return ks_component_check(
      dist, component_index, count, seed, law_1d,
      "ks_custom[" + std::to_string(component_index) + "]");
}

Suite suite_from_name(const std::string& name) {
  if (name == "constants") return Suite::constants;
  if (name == "moments") return Suite::moments;
  if (name == "cf") return Suite::cf;
  if (name == "marginals") return Suite::marginals;
  if (name == "all") return Suite::all;
  throw DomainError("unknown validation suite: " + name);
}

namespace {

ValidationReport constants_suite() {
  const auto start = Clock::now();
  ValidationReport report;
  auto rel_check = [&](std::string name, double expected, double observed,
                       double rel_tol) {
    report.checks.push_back(make_check(std::move(name), expected, observed,
                                       rel_tol * std::abs(expected)));
  };

  rel_check("c_2", 1.0 / kPi, norm_const_c(2), 1e-10);
  rel_check("c_4", 1.0 / (4.0 * kPi * kPi * std::log(2.0)), norm_const_c(4),
            1e-10);
  rel_check("c_6", 1.5 * std::pow(kPi, -5.0), norm_const_c(6), 1e-10);
  rel_check("c_10", 45.0 / 14.0 * std::pow(kPi, -9.0), norm_const_c(10), 1e-10);
  rel_check("c_14", 945.0 / 124.0 * std::pow(kPi, -13.0), norm_const_c(14),
            1e-10);
  rel_check("c_18", 4725.0 / 254.0 * std::pow(kPi, -17.0), norm_const_c(18),
            1e-10);

  const GeneratorParams classic{1.0, 1.0, 2.0};
  for (int n = 1; n <= 18; ++n) {
    rel_check("c_vs_d[" + std::to_string(n) + "]",
              std::pow(2.0, -0.5 * n) * norm_const_d(n, classic),
              norm_const_c(n), 1e-10);
  }

  rel_check("phi(-1,1,1)", 0.5, phi_star(-1.0, 1.0, 1.0, 2.0).value, 1e-10);
  rel_check("phi(-1,2,1)", std::log(2.0), phi_star(-1.0, 2.0, 1.0, 2.0).value,
            1e-10);
  // Phi*_2(-1, n/2, 1) = 2^{-n/2} (2^{n/2} - 4) zeta(n/2 - 1), n >= 3, n != 4
  for (int n : {6, 8, 10, 12}) {
    const double half_n = 0.5 * n;
    rel_check("phi_gap_zeta[" + std::to_string(n) + "]",
              std::pow(2.0, -half_n) * (std::pow(2.0, half_n) - 4.0) *
                  riemann_zeta(half_n - 1.0),
              phi_star(-1.0, half_n, 1.0, 2.0).value, 1e-9);
  }

  for (int n : {6, 8, 10, 14, 18}) {
    rel_check("c_bernoulli[" + std::to_string(n) + "]", norm_const_c(n),
              norm_const_c_bernoulli(n), 1e-8);
  }

  // the j^{1-n/2} eta-series route for the classic constant
  for (int n : {6, 8, 10}) {
    const double s = 0.5 * n - 1.0;
    const double eta =
        alternating_series_sum([s](long j) {
          const double sign = (j % 2 == 1) ? 1.0 : -1.0;
          return sign * std::pow(static_cast<double>(j), -s);
        }).value;
    rel_check("c_eta_series[" + std::to_string(n) + "]", norm_const_c(n),
              std::pow(2.0 * kPi, -0.5 * n) / eta, 1e-8);
  }

  // quadrature/series dual route for phi_star on a small fixed grid
  int grid_index = 0;
  for (double z : {-0.6, 0.4}) {
    for (double s : {0.8, 2.5}) {
      for (double mu : {1.0, 3.5}) {
        rel_check("phi_dual[" + std::to_string(grid_index++) + "]",
                  phi_star_series(z, s, 1.3, mu).value,
                  phi_star(z, s, 1.3, mu).value, 1e-9);
      }
    }
  }

  ValidationReport timed;
  timed.checks = std::move(report.checks);
  timed.elapsed_seconds = seconds_since(start);
  return timed;
}

ValidationReport moments_suite(std::uint64_t seed, long mc_count) {
  const auto start = Clock::now();
  ValidationReport report;
  report.seed = seed;

  // E(R) = 2 ln 2 for the classic two-dimensional law, two routes
  RadialLaw classic_radial(2, GeneratorParams{1.0, 1.0, 2.0});
  report.checks.push_back(make_check("ER_closed_form", 2.0 * std::log(2.0),
                                     radial_moment(1.0, classic_radial),
                                     1e-10 * 2.0 * std::log(2.0)));
  const double er_quadrature =
      integrate_semi_infinite(
          [&](double v) {
            const double lg = std::log(v) + log_generator_g(
                                                v, classic_radial.params());
            if (lg < -745.0) return 0.0;
            return std::exp(lg) / classic_radial.normalizer();
          },
          1.0)
          .value;
  report.checks.push_back(make_check("ER_quadrature", 2.0 * std::log(2.0),
                                     er_quadrature,
                                     1e-10 * 2.0 * std::log(2.0)));

  Eigen::MatrixXd sigma2(2, 2);
  sigma2 << 1.0, 0.3, 0.3, 0.8;
  GmlDistribution classic(Eigen::VectorXd::Zero(2), sigma2,
                          GeneratorParams{1.0, 1.0, 2.0});
  report.append(mc_moment_check(classic, mc_count, sub_seed(seed, 1)));

  Eigen::VectorXd mu3(3);
  mu3 << 0.5, -1.0, 0.25;
  Eigen::MatrixXd sigma3(3, 3);
  sigma3 << 1.0, 0.2, -0.1, 0.2, 1.5, 0.4, -0.1, 0.4, 0.9;
  GmlDistribution normal(mu3, sigma3, GeneratorParams{1.0, 0.5, 0.0});
  report.append(mc_moment_check(normal, mc_count, sub_seed(seed, 2)));

  report.elapsed_seconds = seconds_since(start);
  return report;
}

ValidationReport cf_suite(std::uint64_t seed, long mc_count) {
  const auto start = Clock::now();
  ValidationReport report;
  report.seed = seed;

  GmlDistribution classic(Eigen::VectorXd::Zero(2),
                          Eigen::MatrixXd::Identity(2, 2),
                          GeneratorParams{1.0, 1.0, 2.0});
  std::vector<Eigen::VectorXd> grid;
  for (double scale : {0.5, 1.0, 2.0}) {
    Eigen::VectorXd t(2);
    t << scale, 0.0;
    grid.push_back(t);
    Eigen::VectorXd diag(2);
    diag << 0.6 * scale, -0.8 * scale;
    grid.push_back(diag);
  }
  report.append(cf_mc_check(classic, grid, std::max(mc_count, 100000L),
                            sub_seed(seed, 3)));

  for (double y : {0.25, 1.0, 4.0, 10.0, 25.0, 50.0}) {
    report.checks.push_back(make_check(
        "cf_two_path[y=" + std::to_string(y) + "]",
        classic.cf_radial_series(y), classic.cf_radial_quadrature(y), 1e-8));
  }

  GmlDistribution normal(Eigen::VectorXd::Zero(2),
                         Eigen::MatrixXd::Identity(2, 2),
                         GeneratorParams{1.0, 0.5, 0.0});
  for (double scale : {0.5, 1.5, 3.0}) {
    Eigen::VectorXd t(2);
    t << scale, -0.5 * scale;
    const double y = t.squaredNorm();
    report.checks.push_back(make_check("cf_normal[y=" + std::to_string(y) + "]",
                                       std::exp(-0.5 * y),
                                       normal.cf(t).real(), 1e-8));
  }

  report.elapsed_seconds = seconds_since(start);
  return report;
}

ValidationReport marginals_suite(std::uint64_t seed, long mc_count) {
  const auto start = Clock::now();
  ValidationReport report;
  report.seed = seed;

  Eigen::VectorXd mu(3);
  mu << 0.0, 1.0, -0.5;
  Eigen::MatrixXd sigma(3, 3);
  sigma << 1.0, 0.3, 0.0, 0.3, 1.2, -0.2, 0.0, -0.2, 0.8;
  GmlDistribution classic(mu, sigma, GeneratorParams{1.0, 1.0, 2.0});
  report.append(
      marginal_sampler_check(classic, 0, mc_count, sub_seed(seed, 4)));

  GmlDistribution normal(mu, sigma, GeneratorParams{1.0, 0.5, 0.0});
  report.append(marginal_sampler_check(normal, 1, mc_count, sub_seed(seed, 5)));

  // negative control: the raw n-dimensional profile is NOT the marginal
  const GeneratorParams params = classic.params();
  EllipticalLaw wrong(mu.head(1), sigma.topLeftCorner(1, 1),
                      [params](double t) { return generator_g(t, params); });
  ValidationReport control = marginal_sampler_check_against(
      classic, 0, mc_count, sub_seed(seed, 4), wrong);
  const bool detected = !control.checks.at(0).passed;
  report.checks.push_back(make_check("negative_control_detected", 1.0,
                                     detected ? 1.0 : 0.0, 0.5));
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace

ValidationReport run_suite(Suite suite, std::uint64_t seed, long mc_count) {
  const auto start = Clock::now();
  ValidationReport report;
  report.seed = seed;
  switch (suite) {
    case Suite::constants:
      report.append(constants_suite());
      break;
    case Suite::moments:
      report.append(moments_suite(seed, mc_count));
      break;
    case Suite::cf:
      report.append(cf_suite(seed, mc_count));
      break;
    case Suite::marginals:
      report.append(marginals_suite(seed, mc_count));
      break;
    case Suite::all:
      report.append(constants_suite());
      report.append(moments_suite(seed, mc_count));
      report.append(cf_suite(seed, mc_count));
      report.append(marginals_suite(seed, mc_count));
      break;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace gml
