#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rwci/allocation.hpp"
#include "rwci/errors.hpp"
#include "rwci/gaussian_vector.hpp"
#include "rwci/gray_wyner.hpp"
#include "rwci/oracle.hpp"
#include "rwci/scalar_core.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

rwci::JointGaussianCov make_cov(const Eigen::MatrixXd& kx, const Eigen::MatrixXd& ky,
                                const Eigen::MatrixXd& kxy) {
  return rwci::JointGaussianCov::from_blocks(kx, ky, kxy);
}

py::dict report_to_dict(const rwci::oracle::Report& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    checks.append(py::dict("name"_a = c.name, "oracle"_a = c.oracle,
                           "closed_form"_a = c.closed_form, "tolerance"_a = c.tolerance,
                           "passed"_a = c.passed));
  }
  py::dict details;
  for (const auto& d : r.details) details[py::str(d.name)] = d.value;
  return py::dict("verifier"_a = r.verifier, "instance"_a = r.instance,
                  "passed"_a = r.passed(), "checks"_a = checks, "details"_a = details);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relaxed Wyner common information for Gaussian sources (values in nats)";

  py::register_exception<rwci::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<rwci::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  // Scalar closed forms.
  m.def("c_of_rho", [](double rho) { return rwci::c_of_rho(rwci::Correlation(rho)); }, "rho"_a);
  m.def("i_of_rho", [](double rho) { return rwci::i_of_rho(rwci::Correlation(rho)); }, "rho"_a);
  m.def("g_of_gamma", &rwci::g_of_gamma, "x"_a);
  m.def("f_of_beta", &rwci::f_of_beta, "beta"_a);
  m.def(
      "wyner_ci_scalar",
      [](double rho, double gamma) {
        return rwci::wyner_ci_scalar(rwci::Correlation(rho), rwci::GammaBudget(gamma));
      },
      "rho"_a, "gamma"_a);
  m.def(
      "achievability_params",
      [](double rho, double gamma) {
        const auto p = rwci::achievability_params(rwci::Correlation(rho), rwci::GammaBudget(gamma));
        return py::dict("alpha_noise"_a = p.alpha_noise, "sigma2_w"_a = p.sigma2_w,
                        "rate_nats"_a = p.rate_nats, "leakage_nats"_a = p.leakage_nats);
      },
      "rho"_a, "gamma"_a);
  m.def(
      "dual_objective_g_mu",
      [](double rho, double gamma, double mu) {
        return rwci::dual_objective_g_mu(rwci::Correlation(rho), rwci::GammaBudget(gamma),
                                         rwci::DualVariable(mu));
      },
      "rho"_a, "gamma"_a, "mu"_a);
  m.def(
      "mu_star", [](double gamma) { return rwci::mu_star(rwci::GammaBudget(gamma)); },
      "gamma"_a);

  // Allocation.
  py::class_<rwci::Allocation>(m, "Allocation")
      .def_readonly("gammas", &rwci::Allocation::gammas)
      .def_readonly("water_level_beta", &rwci::Allocation::water_level_beta)
      .def_readonly("total_value", &rwci::Allocation::total_value)
      .def_readonly("saturated", &rwci::Allocation::saturated)
      .def_readonly("slack", &rwci::Allocation::slack);

  m.def(
      "waterfill",
      [](std::vector<double> spectrum, double gamma) {
        return rwci::waterfill(rwci::CanonicalSpectrum(std::move(spectrum)),
                               rwci::GammaBudget(gamma));
      },
      "spectrum"_a, "gamma"_a);
  m.def(
      "breakpoints",
      [](std::vector<double> spectrum) {
        return rwci::breakpoints(rwci::CanonicalSpectrum(std::move(spectrum)));
      },
      "spectrum"_a);
  m.def(
      "evaluate_allocation",
      [](std::vector<double> spectrum, const std::vector<double>& gammas) {
        // The spectrum is sorted descending; gammas follow that order.
        return rwci::evaluate_allocation(rwci::CanonicalSpectrum(std::move(spectrum)), gammas);
      },
      "spectrum"_a, "gammas"_a);

  // Gaussian vectors.
  m.def("pinv_sqrt", &rwci::pinv_sqrt, "m"_a);
  m.def(
      "validate_cov",
      [](const Eigen::MatrixXd& kx, const Eigen::MatrixXd& ky, const Eigen::MatrixXd& kxy) {
        const auto c = rwci::validate_cov(make_cov(kx, ky, kxy));
        return py::make_tuple(c.kx, c.ky, c.kxy);
      },
      "kx"_a, "ky"_a, "kxy"_a);
  m.def(
      "canonical_correlations",
      [](const Eigen::MatrixXd& kx, const Eigen::MatrixXd& ky, const Eigen::MatrixXd& kxy) {
        return rwci::canonical_correlations(make_cov(kx, ky, kxy)).values();
      },
      "kx"_a, "ky"_a, "kxy"_a);
  m.def(
      "wyner_ci_vector",
      [](const Eigen::MatrixXd& kx, const Eigen::MatrixXd& ky, const Eigen::MatrixXd& kxy,
         double gamma) {
        const auto r = rwci::wyner_ci_vector(make_cov(kx, ky, kxy), rwci::GammaBudget(gamma));
        return py::dict("value"_a = r.value, "spectrum"_a = r.spectrum.values(),
                        "allocation"_a = r.allocation);
      },
      "kx"_a, "ky"_a, "kxy"_a, "gamma"_a);

  // Gray-Wyner.
  m.def(
      "common_rate",
      [](double sigma2, double rho, double delta, double alpha) {
        const auto p = rwci::common_rate(sigma2, rwci::Correlation(rho), delta, alpha);
        return py::make_tuple(p.r0, std::string(rwci::to_string(p.regime)));
      },
      "sigma2"_a, "rho"_a, "delta"_a, "alpha"_a,
      "Returns (r0 in nats, regime name).");
  m.def(
      "ell_of_nu",
      [](double rho, double delta, double alpha, double nu) {
        return rwci::ell_of_nu(rwci::Correlation(rho), delta, alpha, rwci::NuDual(nu));
      },
      "rho"_a, "delta"_a, "alpha"_a, "nu"_a);
  m.def(
      "nu_star",
      [](double rho, double delta, double alpha) {
        return rwci::nu_star(rwci::Correlation(rho), delta, alpha).value();
      },
      "rho"_a, "delta"_a, "alpha"_a);

  // Oracles.
  auto oracle = m.def_submodule("oracle", "Brute-force verifiers; each returns a report dict");
  oracle.def(
      "verify_scalar_achievability",
      [](double rho, double gamma, std::size_t grid) {
        return report_to_dict(rwci::oracle::verify_scalar_achievability(rho, gamma, grid));
      },
      "rho"_a, "gamma"_a, "grid_size"_a = 100000);
  oracle.def(
      "verify_waterfill_grid",
      [](std::vector<double> spectrum, double gamma, double step) {
        return report_to_dict(rwci::oracle::verify_waterfill_grid(
            rwci::CanonicalSpectrum(std::move(spectrum)), gamma, step));
      },
      "spectrum"_a, "gamma"_a, "step"_a = 1e-3);
  oracle.def(
      "verify_lemma3_grid",
      [](double rho, double lambda, std::size_t grid) {
        return report_to_dict(rwci::oracle::verify_lemma3_grid(rho, lambda, grid));
      },
      "rho"_a, "lam"_a, "grid"_a = 500);
  oracle.def(
      "verify_graywyner_dual",
      [](double rho, double delta, double alpha) {
        return report_to_dict(rwci::oracle::verify_graywyner_dual(rho, delta, alpha));
      },
      "rho"_a, "delta"_a, "alpha"_a);
  oracle.def(
      "dsbs_construction_check",
      [](double a0) { return report_to_dict(rwci::oracle::dsbs_construction_check(a0)); }, "a0"_a);
  oracle.def(
      "erasure_construction_check",
      [](double gamma) { return report_to_dict(rwci::oracle::erasure_construction_check(gamma)); },
      "gamma"_a);
}
