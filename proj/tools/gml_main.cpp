// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: normalizing constants, density grids, sampling,
// moments, characteristic functions, and validation reports, all in
// machine-readable CSV (with a single #-prefixed JSON metadata line) or JSON.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gml/distribution.hpp"
#include "gml/specfun.hpp"
#include "gml/transforms.hpp"
#include "gml/validation.hpp"
#include "json.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  return values;
}

struct DistSpec {
  int n = 2;
  double a = 1.0;
  double b = 1.0;
  double r = 2.0;
  std::string mu_text;
  std::string sigma_text = "identity";

  gml::GeneratorParams params() const { return {a, b, r}; }

  Eigen::VectorXd mu() const {
    if (mu_text.empty()) return Eigen::VectorXd::Zero(n);
    const std::vector<double> values = parse_csv_doubles(mu_text);
    if (static_cast<int>(values.size()) != n) {
      throw gml::ShapeError("--mu must list exactly n values");
    }
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) out[i] = values[static_cast<std::size_t>(i)];
    return out;
  }

  Eigen::MatrixXd sigma() const {
    if (sigma_text == "identity") return Eigen::MatrixXd::Identity(n, n);
    const std::vector<double> values = parse_csv_doubles(sigma_text);
    if (static_cast<int>(values.size()) != n * n) {
      throw gml::ShapeError("--sigma must list n*n values (row-major) or 'identity'");
    }
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) = values[static_cast<std::size_t>(i * n + j)];
    const double scale = std::max(1.0, out.cwiseAbs().maxCoeff());
    if ((out - out.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw gml::DomainError("--sigma must be symmetric");
    }
    return out;
  }

  gml::GmlDistribution build() const {
    return gml::GmlDistribution(mu(), sigma(), params());
  }

  nlohmann::json metadata(std::optional<std::uint64_t> seed = std::nullopt) const {
    nlohmann::json meta;
    meta["version"] = kVersion;
    meta["n"] = n;
    meta["a"] = a;
    meta["b"] = b;
    meta["r"] = r;
    std::vector<double> mu_values(static_cast<std::size_t>(n));
    Eigen::VectorXd location = mu();
    for (int i = 0; i < n; ++i) mu_values[static_cast<std::size_t>(i)] = location[i];
    meta["mu"] = mu_values;
    Eigen::MatrixXd dispersion = sigma();
    std::vector<double> sigma_values;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sigma_values.push_back(dispersion(i, j));
    meta["sigma"] = sigma_values;
    if (seed.has_value()) meta["seed"] = *seed;
    return meta;
  }
};

class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw gml::Error("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

void emit_table(const nlohmann::json& metadata,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows,
                const std::string& format, const std::string& out_path) {
  OutputTarget target(out_path);
  std::ostream& os = target.stream();
  if (format == "json") {
    nlohmann::json doc;
    doc["metadata"] = metadata;
    doc["columns"] = columns;
    doc["rows"] = rows;
    os << doc.dump(2) << "\n";
    return;
  }
  os << "# " << metadata.dump() << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    os << (i ? "," : "") << columns[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_double(row[i]);
    }
    os << "\n";
  }
}

int cmd_constants(int n_max, const std::string& format,
                  const std::string& out_path) {
  if (n_max < 1 || n_max > 18) {
    throw gml::RangeError("--n-max must lie in [1, 18]");
  }
  const gml::GeneratorParams classic{1.0, 1.0, 2.0};
  nlohmann::json metadata;
  metadata["version"] = kVersion;
  metadata["table"] = "normalizing-constants";
  OutputTarget target(out_path);
  std::ostream& os = target.stream();

  std::vector<nlohmann::json> json_rows;
  std::ostringstream csv;
  csv << "n,c_n,d_n,method\n";
  for (int n = 1; n <= n_max; ++n) {
    const double c = gml::norm_const_c(n);
    const double d = gml::norm_const_d(n, classic);
    std::string method;
    if (n == 2 || n == 4) {
      method = "closed_form";
    } else if (n == 1) {
      method = "phi_star_quadrature";
    } else {
      method = "zeta_eta_series";
    }
    csv << n << "," << format_double(c) << "," << format_double(d) << ","
        << method << "\n";
    nlohmann::json row;
    row["n"] = n;
    row["c_n"] = c;
    row["d_n"] = d;
    row["method"] = method;
    json_rows.push_back(row);
  }
  if (format == "json") {
    nlohmann::json doc;
    doc["metadata"] = metadata;
    doc["rows"] = json_rows;
    os << doc.dump(2) << "\n";
  } else {
    os << "# " << metadata.dump() << "\n" << csv.str();
  }
  return 0;
}

int cmd_pdf_grid(const DistSpec& spec, double range, int resolution,
                 bool preset, const std::string& format,
                 const std::string& out_path) {
  if (resolution < 2) {
    throw gml::DomainError("--resolution must be at least 2");
  }
  if (!(range > 0.0)) {
    throw gml::DomainError("--range must be positive");
  }
  std::vector<double> r_values;
  if (preset) {
    r_values = {0.5, 1.0, 2.0, 5.0, 10.0};
  } else {
    r_values = {spec.r};
  }
  DistSpec grid_spec = spec;
  grid_spec.n = 2;
  if (preset) {
    grid_spec.a = 1.0;
    grid_spec.b = 1.0;
    grid_spec.mu_text.clear();
    grid_spec.sigma_text = "identity";
  }

  nlohmann::json metadata = grid_spec.metadata();
  metadata["range"] = range;
  metadata["resolution"] = resolution;
  if (preset) metadata["preset"] = "figure-r-sweep";

  std::vector<std::string> columns;
  if (preset) columns.push_back("r");
  columns.insert(columns.end(), {"x1", "x2", "pdf"});

  std::vector<std::vector<double>> rows;
  const double step = 2.0 * range / (resolution - 1);
  // coordinates as signed offsets from the centre so the grid mirrors exactly
  const double half_index = 0.5 * (resolution - 1);
  for (double r_value : r_values) {
    DistSpec current = grid_spec;
    current.r = r_value;
    gml::GmlDistribution dist = current.build();
    Eigen::VectorXd x(2);
    for (int i = 0; i < resolution; ++i) {
      x[0] = (i - half_index) * step;
      for (int j = 0; j < resolution; ++j) {
        x[1] = (j - half_index) * step;
        const double density = dist.pdf(x);
        if (preset) {
          rows.push_back({r_value, x[0], x[1], density});
        } else {
          rows.push_back({x[0], x[1], density});
        }
      }
    }
  }
  emit_table(metadata, columns, rows, format, out_path);
  return 0;
}

int cmd_sample(const DistSpec& spec, long count, std::uint64_t seed,
               const std::string& format, const std::string& out_path) {
  if (count < 0) {
    throw gml::DomainError("--count must be >= 0");
  }
  gml::GmlDistribution dist = spec.build();
  gml::SampleBatch batch = dist.sample(count, seed);
  std::vector<std::string> columns;
  for (int i = 0; i < spec.n; ++i) columns.push_back("x" + std::to_string(i + 1));
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    std::vector<double> row(static_cast<std::size_t>(spec.n));
    for (int j = 0; j < spec.n; ++j) row[static_cast<std::size_t>(j)] = batch.draws(i, j);
    rows.push_back(std::move(row));
  }
  emit_table(spec.metadata(seed), columns, rows, format, out_path);
  return 0;
}

int cmd_moments(const DistSpec& spec, const std::string& format,
                const std::string& out_path) {
  gml::GmlDistribution dist = spec.build();
  nlohmann::json metadata = spec.metadata();
  metadata["cov_scale"] = dist.cov_scale();

  std::vector<std::string> columns = {"kind", "i", "j", "value"};
  std::vector<std::vector<double>> rows;
  // kind codes: 0 mean, 1 cov, 2 E(R^l) with l in column i, 3 product moment
  for (int i = 0; i < spec.n; ++i) {
    rows.push_back({0.0, static_cast<double>(i), 0.0, dist.mean()[i]});
  }
  const Eigen::MatrixXd cov = dist.cov();
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j)
      rows.push_back({1.0, static_cast<double>(i), static_cast<double>(j),
                      cov(i, j)});
  for (double l : {1.0, 2.0}) {
    rows.push_back({2.0, l, 0.0, gml::radial_moment(l, dist.radial())});
  }
  std::vector<int> orders(static_cast<std::size_t>(spec.n), 0);
  orders[0] = 1;
  rows.push_back({3.0, 2.0, 0.0, dist.product_moment(orders)});
  orders[0] = 2;
  rows.push_back({3.0, 4.0, 0.0, dist.product_moment(orders)});
  if (spec.n >= 2) {
    orders[0] = 1;
    orders[1] = 1;
    rows.push_back({3.0, 2.0, 2.0, dist.product_moment(orders)});
  }
  emit_table(metadata, columns, rows, format, out_path);
  return 0;
}

int cmd_cf(const DistSpec& spec, const std::vector<std::string>& t_texts,
           int axis, double range, int resolution, const std::string& format,
           const std::string& out_path) {
  gml::GmlDistribution dist = spec.build();
  std::vector<Eigen::VectorXd> grid;
  if (!t_texts.empty()) {
    for (const std::string& text : t_texts) {
      const std::vector<double> values = parse_csv_doubles(text);
      if (static_cast<int>(values.size()) != spec.n) {
        throw gml::ShapeError("--t must list exactly n components");
      }
      Eigen::VectorXd t(spec.n);
      for (int i = 0; i < spec.n; ++i) t[i] = values[static_cast<std::size_t>(i)];
      grid.push_back(t);
    }
  } else {
    if (axis < 0 || axis >= spec.n) {
      throw gml::IndexError("--axis out of range");
    }
    if (resolution < 2) {
      throw gml::DomainError("--resolution must be at least 2");
    }
    const double step = 2.0 * range / (resolution - 1);
    const double half_index = 0.5 * (resolution - 1);
    for (int i = 0; i < resolution; ++i) {
      Eigen::VectorXd t = Eigen::VectorXd::Zero(spec.n);
      t[axis] = (i - half_index) * step;
      grid.push_back(t);
    }
  }

  std::vector<std::string> columns;
  for (int i = 0; i < spec.n; ++i) columns.push_back("t" + std::to_string(i + 1));
  columns.insert(columns.end(), {"re", "im", "abs"});
  std::vector<std::vector<double>> rows;
  for (const Eigen::VectorXd& t : grid) {
    const std::complex<double> value = dist.cf(t);
    std::vector<double> row;
    for (int i = 0; i < spec.n; ++i) row.push_back(t[i]);
    row.push_back(value.real());
    row.push_back(value.imag());
    row.push_back(std::abs(value));
    rows.push_back(std::move(row));
  }
  emit_table(spec.metadata(), columns, rows, format, out_path);
  return 0;
}

// Re-ingest a sample file produced by `sample` (CSV with the JSON metadata
// header) and run the moment comparisons against the recorded parameters.
int validate_samples_file(const std::string& path, const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    throw gml::Error("cannot open samples file: " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line.size() < 2 || line[0] != '#') {
    throw gml::Error("samples file lacks the metadata header line");
  }
  const nlohmann::json meta = nlohmann::json::parse(line.substr(1));
  DistSpec spec;
  spec.n = meta.at("n").get<int>();
  spec.a = meta.at("a").get<double>();
  spec.b = meta.at("b").get<double>();
  spec.r = meta.at("r").get<double>();
  {
    std::ostringstream mu_text;
    const auto mu = meta.at("mu");
    for (std::size_t i = 0; i < mu.size(); ++i) {
      mu_text << (i ? "," : "") << format_double(mu[i].get<double>());
    }
    spec.mu_text = mu_text.str();
    std::ostringstream sigma_text;
    const auto sigma = meta.at("sigma");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      sigma_text << (i ? "," : "") << format_double(sigma[i].get<double>());
    }
    spec.sigma_text = sigma_text.str();
  }
  const std::uint64_t seed = meta.value("seed", 0ULL);

  std::getline(in, line);  // column names
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(parse_csv_doubles(line));
  }
  Eigen::MatrixXd draws(static_cast<long>(rows.size()), spec.n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != spec.n) {
      throw gml::ShapeError("sample row width does not match the header");
    }
    for (int j = 0; j < spec.n; ++j) draws(static_cast<long>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }

  gml::GmlDistribution dist = spec.build();
  gml::ValidationReport report = gml::mc_moment_check_on(dist, draws, seed);
  report.seed = seed;
  OutputTarget target(out_path);
  target.stream() << gml::report_to_json(report) << "\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_validate(const std::string& suite_name, std::uint64_t seed, long count,
                 const std::string& samples_path, const std::string& out_path) {
  if (!samples_path.empty()) {
    return validate_samples_file(samples_path, out_path);
  }
  const gml::Suite suite = gml::suite_from_name(suite_name);
  gml::ValidationReport report = gml::run_suite(suite, seed, count);
  OutputTarget target(out_path);
  target.stream() << gml::report_to_json(report) << "\n";
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol_text = std::getenv("GML_QUAD_TOL")) {
    try {
      gml::set_default_quadrature_relative_tolerance(std::stod(tol_text));
    } catch (const std::exception&) {
      std::cerr << "invalid GML_QUAD_TOL value: " << tol_text << "\n";
      return 2;
    }
  }

  CLI::App app{"generalized elliptically symmetric logistic distributions"};
  app.require_subcommand(1);

  DistSpec spec;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 20260810;
  long count = 1000;
  double range = 8.0;
  int resolution = 101;

  auto add_dist_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", spec.n, "dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--a", spec.a, "generator parameter a > 0");
    cmd->add_option("--b", spec.b, "generator parameter b > 0");
    cmd->add_option("--r", spec.r, "generator parameter r >= 0");
    cmd->add_option("--mu", spec.mu_text, "location, comma-separated (default zeros)");
    cmd->add_option("--sigma", spec.sigma_text,
                    "dispersion, row-major comma-separated or 'identity'");
  };
  auto add_io_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  auto* constants = app.add_subcommand("constants", "normalizing-constant table");
  int n_max = 18;
  constants->add_option("--n-max", n_max, "largest dimension");
  add_io_options(constants);

  auto* pdf_grid = app.add_subcommand("pdf-grid", "density values on a square grid");
  bool preset = false;
  add_dist_options(pdf_grid);
  pdf_grid->add_option("--range", range, "half-width of the grid");
  pdf_grid->add_option("--resolution", resolution, "points per axis");
  pdf_grid->add_flag("--preset", preset,
                     "emit the r = 0.5, 1, 2, 5, 10 sweep (n=2, a=b=1)");
  add_io_options(pdf_grid);

  auto* sample = app.add_subcommand("sample", "draw from the distribution");
  add_dist_options(sample);
  sample->add_option("--count", count, "number of draws");
  sample->add_option("--seed", seed, "rng seed");
  add_io_options(sample);

  auto* moments = app.add_subcommand("moments", "closed-form moments");
  add_dist_options(moments);
  add_io_options(moments);

  auto* cf = app.add_subcommand("cf", "characteristic function values");
  std::vector<std::string> t_texts;
  int axis = 0;
  add_dist_options(cf);
  cf->add_option("--t", t_texts, "frequency vector, comma-separated (repeatable)");
  cf->add_option("--axis", axis, "grid axis when --t is not given");
  cf->add_option("--range", range, "grid half-width");
  cf->add_option("--resolution", resolution, "grid points");
  add_io_options(cf);

  auto* validate = app.add_subcommand("validate", "run validation suites");
  std::string suite_name = "all";
  std::string samples_path;
  validate->add_option("--suite", suite_name,
                       "constants | moments | cf | marginals | all");
  validate->add_option("--seed", seed, "rng seed");
  validate->add_option("--count", count, "Monte-Carlo draw count")
      ->default_val(1000000);
  validate->add_option("--samples", samples_path,
                       "re-validate an existing sample CSV instead");
  validate->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (constants->parsed()) return cmd_constants(n_max, format, out_path);
    if (pdf_grid->parsed())
      return cmd_pdf_grid(spec, range, resolution, preset, format, out_path);
    if (sample->parsed()) return cmd_sample(spec, count, seed, format, out_path);
    if (moments->parsed()) return cmd_moments(spec, format, out_path);
    if (cf->parsed())
      return cmd_cf(spec, t_texts, axis, range, resolution, format, out_path);
    if (validate->parsed())
      return cmd_validate(suite_name, seed, count, samples_path, out_path);
  } catch (const gml::ConvergenceError& e) {
    std::cerr << "numeric non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const gml::DivergenceError& e) {
    std::cerr << "numeric divergence: " << e.what() << "\n";
    return 3;
  } catch (const gml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
