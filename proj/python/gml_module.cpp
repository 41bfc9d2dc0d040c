// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the core operations.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gml/distribution.hpp"
#include "gml/specfun.hpp"
#include "gml/transforms.hpp"
#include "gml/validation.hpp"

namespace py = pybind11;
using namespace gml;

namespace {

py::dict report_to_dict(const ValidationReport& report) {
  py::dict out;
  out["seed"] = report.seed;
  out["elapsed_seconds"] = report.elapsed_seconds;
  out["all_passed"] = report.all_passed();
  py::list checks;
  for (const CheckResult& c : report.checks) {
    py::dict entry;
    entry["name"] = c.name;
    entry["expected"] = c.expected;
    entry["observed"] = c.observed;
    entry["tolerance"] = c.tolerance;
    if (c.standard_error.has_value()) {
      entry["standard_error"] = *c.standard_error;
    }
    entry["passed"] = c.passed;
    checks.append(entry);
  }
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(gml, m) {
  m.doc() =
      "Elliptically symmetric logistic-type distributions: densities, exact "
      "sampling, transforms, moments and characteristic functions";

  py::register_exception<DivergenceError>(m, "DivergenceError");
  py::register_exception<ConvergenceError>(m, "ConvergenceError");

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init([](double a, double b, double r) {
             GeneratorParams p{a, b, r};
             p.validate();
             return p;
           }),
           py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("r") = 2.0)
      .def_readonly("a", &GeneratorParams::a)
      .def_readonly("b", &GeneratorParams::b)
      .def_readonly("r", &GeneratorParams::r)
      .def("__repr__", [](const GeneratorParams& p) {
        return "GeneratorParams(a=" + std::to_string(p.a) +
               ", b=" + std::to_string(p.b) + ", r=" + std::to_string(p.r) + ")";
      });

  m.def("generator_g", &generator_g, py::arg("u"), py::arg("params"),
        "density generator exp(-b u)/(1+exp(-a u))^r");
  m.def("log_generator_g", &log_generator_g, py::arg("u"), py::arg("params"));
  m.def(
      "norm_const_d",
      [](int n, const GeneratorParams& p) { return norm_const_d(n, p); },
      py::arg("n"), py::arg("params"));
  m.def(
      "norm_const_c", [](int n) { return norm_const_c(n); }, py::arg("n"));
  m.def(
      "norm_const_c_bernoulli", [](int n) { return norm_const_c_bernoulli(n); },
      py::arg("n"));

  m.def(
      "riemann_zeta", [](double s) { return riemann_zeta(s); }, py::arg("s"));
  m.def("zeta_even", &zeta_even, py::arg("two_n"));
  m.def(
      "zeta_odd_integral", [](int k) { return zeta_odd_integral(k); },
      py::arg("two_n_plus_1"));
  m.def(
      "phi_star",
      [](double z, double s, std::complex<double> a, double mu) {
        if (a.imag() == 0.0) {
          return std::complex<double>(phi_star(z, s, a.real(), mu).value, 0.0);
        }
        PhiStarArgs args{z, s, a, mu};
        return phi_star(args).value;
      },
      py::arg("z"), py::arg("s"), py::arg("a"), py::arg("mu"),
      "generalized Hurwitz-Lerch Zeta (integral-representation quadrature)");
  m.def(
      "phi_star_series",
      [](double z, double s, double a, double mu) {
        return phi_star_series(z, s, a, mu).value;
      },
      py::arg("z"), py::arg("s"), py::arg("a"), py::arg("mu"));
  m.def("bernoulli_numbers", &bernoulli_numbers, py::arg("n"));
  m.def("bernoulli_polynomial", &bernoulli_polynomial, py::arg("n"), py::arg("x"));
  m.def("omega_n", &omega_n, py::arg("n"), py::arg("y"),
        "characteristic function of the uniform law on the n-sphere at ||t||^2 = y");
  m.def("cf_1d", &cf_1d, py::arg("t"), py::arg("mu"), py::arg("sigma"),
        py::arg("params"));

  py::class_<RadialLaw>(m, "RadialLaw")
      .def(py::init<int, const GeneratorParams&>(), py::arg("dim"),
           py::arg("params"))
      .def_property_readonly("dim", &RadialLaw::dim)
      .def_property_readonly("normalizer", &RadialLaw::normalizer)
      .def("density", [](const RadialLaw& law, double v) {
        return radial_density(v, law);
      })
      .def("cdf",
           [](const RadialLaw& law, double x) { return radial_cdf(x, law); })
      .def("quantile",
           [](const RadialLaw& law, double p) { return radial_quantile(p, law); })
      .def("moment",
           [](const RadialLaw& law, double l) { return radial_moment(l, law); })
      .def(
          "sample",
          [](const RadialLaw& law, long count, std::uint64_t seed) {
            RngStream rng(seed);
            Eigen::VectorXd out(count);
            for (long i = 0; i < count; ++i) out[i] = radial_sample(law, rng);
            return out;
          },
          py::arg("count"), py::arg("seed"));

  py::class_<SampleBatch>(m, "SampleBatch")
      .def_readonly("draws", &SampleBatch::draws)
      .def_readonly("seed", &SampleBatch::seed)
      .def_readonly("count", &SampleBatch::count);

  py::class_<GmlDistribution>(m, "GmlDistribution")
      .def(py::init<Eigen::VectorXd, Eigen::MatrixXd, const GeneratorParams&>(),
           py::arg("mu"), py::arg("sigma"), py::arg("params"))
      .def_property_readonly("dim", &GmlDistribution::dim)
      .def_property_readonly("location", &GmlDistribution::location)
      .def_property_readonly("dispersion", &GmlDistribution::dispersion)
      .def_property_readonly("params", &GmlDistribution::params)
      .def_property_readonly("norm_const", &GmlDistribution::norm_const)
      .def_property_readonly("radial", &GmlDistribution::radial)
      .def("pdf", &GmlDistribution::pdf, py::arg("x"))
      .def("log_pdf", &GmlDistribution::log_pdf, py::arg("x"))
      .def("mahalanobis", &GmlDistribution::mahalanobis, py::arg("x"))
      .def("mean", &GmlDistribution::mean)
      .def("cov", &GmlDistribution::cov)
      .def("cov_scale", &GmlDistribution::cov_scale)
      .def("product_moment", &GmlDistribution::product_moment, py::arg("orders"))
      .def(
          "sample",
          [](const GmlDistribution& dist, long count, std::uint64_t seed) {
            return dist.sample(count, seed).draws;
          },
          py::arg("count"), py::arg("seed"))
      .def("cf", &GmlDistribution::cf, py::arg("t"));

  py::class_<EllipticalLaw>(m, "EllipticalLaw")
      .def_property_readonly("dim", &EllipticalLaw::dim)
      .def_property_readonly("location", &EllipticalLaw::location)
      .def_property_readonly("dispersion", &EllipticalLaw::dispersion)
      .def_property_readonly("normalizer", &EllipticalLaw::normalizer)
      .def_property_readonly("in_gml_family", &EllipticalLaw::in_gml_family)
      .def("pdf", &EllipticalLaw::pdf, py::arg("x"))
      .def("generator",
           [](const EllipticalLaw& law, double t) { return law.generator()(t); })
      .def("mahalanobis", &EllipticalLaw::mahalanobis, py::arg("x"));

  py::class_<ProjectedLaw>(m, "ProjectedLaw")
      .def_property_readonly("law", &ProjectedLaw::law)
      .def(
          "sample_pushforward",
          [](const ProjectedLaw& p, long count, std::uint64_t seed) {
            return p.sample_pushforward(count, seed).draws;
          },
          py::arg("count"), py::arg("seed"))
      .def(
          "sample_radial_mixing",
          [](const ProjectedLaw& p, long count, std::uint64_t seed) {
            return p.sample_radial_mixing(count, seed).draws;
          },
          py::arg("count"), py::arg("seed"));

  m.def("affine_full_rank", &affine_full_rank, py::arg("dist"), py::arg("B"),
        py::arg("b"));
  m.def("project", &project, py::arg("dist"), py::arg("B"), py::arg("b"));
  m.def("marginalize", &marginalize, py::arg("dist"), py::arg("indices"));
  m.def("condition", &condition, py::arg("dist"), py::arg("indices"),
        py::arg("x1"));

  m.def(
      "mc_moment_check",
      [](const GmlDistribution& dist, long count, std::uint64_t seed) {
        return report_to_dict(mc_moment_check(dist, count, seed));
      },
      py::arg("dist"), py::arg("count"), py::arg("seed"));
  m.def(
      "mc_moment_check_on",
      [](const GmlDistribution& dist, const Eigen::MatrixXd& draws,
         std::uint64_t seed) {
        return report_to_dict(mc_moment_check_on(dist, draws, seed));
      },
      py::arg("dist"), py::arg("draws"), py::arg("seed"),
      "moment comparisons over an existing batch of draws");
  m.def(
      "pdf_normalization_check",
      [](const GmlDistribution& dist) {
        return report_to_dict(pdf_normalization_check(dist));
      },
      py::arg("dist"));
  m.def(
      "cf_mc_check",
      [](const GmlDistribution& dist, const std::vector<Eigen::VectorXd>& grid,
         long count, std::uint64_t seed) {
        return report_to_dict(cf_mc_check(dist, grid, count, seed));
      },
      py::arg("dist"), py::arg("t_grid"), py::arg("count"), py::arg("seed"));
  m.def(
      "marginal_sampler_check",
      [](const GmlDistribution& dist, int index, long count, std::uint64_t seed) {
        return report_to_dict(marginal_sampler_check(dist, index, count, seed));
      },
      py::arg("dist"), py::arg("component_index"), py::arg("count"),
      py::arg("seed"));
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, long mc_count) {
        return report_to_dict(run_suite(suite_from_name(name), seed, mc_count));
      },
      py::arg("suite"), py::arg("seed") = 20260810,
      py::arg("mc_count") = 1000000);

  m.attr("__version__") = "0.1.0";
}
