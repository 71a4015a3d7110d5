#include "rwci/scalar_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rwci/errors.hpp"

namespace rwci {

namespace {

// Below this the expansion sqrt(1 - e^{-2x}) ~ sqrt(2x) is exact in double.
constexpr double kTinyGamma = 1e-300;

// sqrt(1 - e^{-2x}): the noise correlation whose mutual information is x.
double inverse_mutual_information(double x) {
  if (x < kTinyGamma) return std::sqrt(2.0 * x);
  return std::sqrt(-std::expm1(-2.0 * x));
}

}  // namespace

Correlation::Correlation(double rho) : rho_(rho) {
  if (std::isnan(rho) || std::abs(rho) > 1.0 + kClampBand) {
    throw InputError("correlation must lie in [-1, 1], got " + std::to_string(rho));
  }
  rho_ = std::clamp(rho, -1.0, 1.0);
}

double Correlation::magnitude() const { return std::abs(rho_); }

GammaBudget::GammaBudget(double gamma) : gamma_(gamma) {
  if (std::isnan(gamma) || gamma < 0.0) {
    throw InputError("gamma must be nonnegative, got " + std::to_string(gamma));
  }
}

DualVariable::DualVariable(double mu) : mu_(mu) {
  if (std::isnan(mu) || mu <= 1.0) {
    throw InputError("dual variable mu must exceed 1, got " + std::to_string(mu));
  }
}

double c_of_rho(Correlation rho) {
  const double r = rho.magnitude();
  if (r == 1.0) return kInfinity;
  return std::atanh(r);
}

double i_of_rho(Correlation rho) {
  const double r = rho.magnitude();
  if (r == 1.0) return kInfinity;
  return -0.5 * std::log1p(-r * r);
}

double g_of_gamma(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw InputError("g is defined for x >= 0, got " + std::to_string(x));
  }
  if (x == kInfinity) return kInfinity;
  // 1/2 ln((1+s)/(1-s)) with 1-s^2 = e^{-2x} rearranges to x + ln(1+s),
  // which avoids forming 1-s near saturation.
  const double s = inverse_mutual_information(x);
  return x + std::log1p(s);
}

double f_of_beta(double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw InputError("f is defined for beta >= 0, got " + std::to_string(beta));
  }
  // ln cosh(beta), split to keep relative accuracy near 0 and avoid overflow.
  if (beta <= 1.0) {
    const double sh = std::sinh(0.5 * beta);
    return std::log1p(2.0 * sh * sh);
  }
  return beta + std::log1p(std::exp(-2.0 * beta)) - std::numbers::ln2;
}

double wyner_ci_scalar(Correlation rho, GammaBudget gamma) {
  const double c = c_of_rho(rho);
  const double g = g_of_gamma(gamma.value());
  if (c == kInfinity) return g == kInfinity ? 0.0 : kInfinity;
  return std::max(c - g, 0.0);
}

AchievabilityParams achievability_params(Correlation rho, GammaBudget gamma) {
  const double r = rho.magnitude();
  if (r == 1.0) {
    throw InputError("achievability construction needs |rho| < 1");
  }
  const double saturation = i_of_rho(rho);
  const double budget = gamma.value();
  if (budget > saturation * (1.0 + 1e-12)) {
    throw InputError("gamma " + std::to_string(budget) +
                     " exceeds I(rho) = " + std::to_string(saturation));
  }
  AchievabilityParams p;
  p.alpha_noise = std::min(inverse_mutual_information(budget), r);
  p.sigma2_w = std::clamp((r - p.alpha_noise) / (1.0 - p.alpha_noise), 0.0, r);
  p.rate_nats = std::max(
      0.0, 0.5 * std::log((1.0 + r) * (1.0 - p.alpha_noise) /
                          ((1.0 - r) * (1.0 + p.alpha_noise))));
  p.leakage_nats = budget;
  return p;
}

double dual_objective_g_mu(Correlation rho, GammaBudget gamma, DualVariable mu) {
  const double r = rho.value();
  if (!(r > 0.0 && r < 1.0)) {
    throw InputError("dual objective requires 0 < rho < 1");
  }
  const double m = mu.value();
  const double g = gamma.value();
  const double two_pi_e_sq = std::pow(2.0 * std::numbers::pi * std::numbers::e, 2);
  return 0.5 * std::log(two_pi_e_sq * (1.0 - r * r)) - m * g +
         0.5 * m * std::log(m * m / (m * m - 1.0)) -
         0.5 * std::log(two_pi_e_sq * (1.0 - r) * (1.0 - r) * (m + 1.0) / (m - 1.0));
}

double mu_star(GammaBudget gamma) {
  if (gamma.value() == 0.0) return kInfinity;
  return 1.0 / inverse_mutual_information(gamma.value());
}

}  // namespace rwci
