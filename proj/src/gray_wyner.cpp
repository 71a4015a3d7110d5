#include "rwci/gray_wyner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rwci/errors.hpp"

namespace rwci {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InputError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
  }
}

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw InputError(std::string(name) + " must be nonnegative and finite, got " +
                     std::to_string(v));
  }
}

}  // namespace

std::string_view to_string(GrayWynerRegime regime) {
  switch (regime) {
    case GrayWynerRegime::kBlend:
      return "BLEND";
    case GrayWynerRegime::kSaturatedNu:
      return "SATURATED_NU";
    case GrayWynerRegime::kInfeasibleZero:
      return "INFEASIBLE_ZERO";
  }
  return "UNKNOWN";
}

NuDual::NuDual(double nu) : nu_(nu) {
  if (!(nu > 0.5 && nu <= 1.0)) {
    throw InputError("nu must lie in (1/2, 1], got " + std::to_string(nu));
  }
}

GrayWynerPoint common_rate(double sigma2, Correlation rho, double delta, double alpha_private) {
  require_positive(sigma2, "sigma2");
  require_positive(delta, "delta");
  require_nonnegative(alpha_private, "alpha");

  GrayWynerPoint p;
  p.sigma2 = sigma2;
  p.rho = rho.magnitude();
  p.delta = delta;
  p.alpha_private = alpha_private;

  // Everything below depends on the normalized distortion only, which makes
  // common_rate(s, rho, D, a) and common_rate(1, rho, D/s, a) bit-identical.
  const double r = p.rho;
  const double d = (delta / sigma2) * std::exp(alpha_private);
  if (d > 1.0) {
    p.regime = GrayWynerRegime::kInfeasibleZero;
    p.r0 = 0.0;
  } else if (d >= 1.0 - r) {
    p.regime = GrayWynerRegime::kBlend;
    p.r0 = std::max(0.0, 0.5 * std::log((1.0 + r) / (2.0 * d + r - 1.0)));
  } else {
    p.regime = GrayWynerRegime::kSaturatedNu;
    p.r0 = std::max(0.0, 0.5 * std::log((1.0 - r * r) / (d * d)));
  }
  return p;
}

double ell_of_nu(Correlation rho, double delta, double alpha_private, NuDual nu) {
  require_positive(delta, "delta");
  require_nonnegative(alpha_private, "alpha");
  const double r = rho.magnitude();
  const double v = nu.value();
  const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
  const double two_pi_e_sq = two_pi_e * two_pi_e;
  return 0.5 * std::log(two_pi_e_sq * (1.0 - r * r)) - v * alpha_private -
         v * std::log(two_pi_e * delta) + 0.5 * v * std::log(v * v / (2.0 * v - 1.0)) -
         0.5 * (1.0 - v) * std::log(two_pi_e_sq * (1.0 - r) * (1.0 - r) / (2.0 * v - 1.0));
}

NuDual nu_star(Correlation rho, double delta, double alpha_private) {
  require_positive(delta, "delta");
  require_nonnegative(alpha_private, "alpha");
  const double r = rho.magnitude();
  const double d = delta * std::exp(alpha_private);
  if (d > 1.0 || d < 1.0 - r) {
    throw InputError("nu_star is defined only for 1 - rho <= Delta e^alpha <= 1 (got " +
                     std::to_string(d) + ")");
  }
  return NuDual(std::min(1.0, d / (2.0 * d - 1.0 + r)));
}

}  // namespace rwci
