#pragma once

// Minimal common rate of the Gaussian Gray-Wyner network under a symmetric
// mean-squared-error constraint and a cap on the private rate sum.

#include <string_view>

#include "rwci/scalar_core.hpp"

namespace rwci {

enum class GrayWynerRegime {
  kBlend,           // 1 - rho <= Delta e^alpha / sigma^2 <= 1, interior dual optimum
  kSaturatedNu,     // Delta e^alpha / sigma^2 < 1 - rho, dual optimum at nu = 1
  kInfeasibleZero,  // Delta e^alpha / sigma^2 > 1, common rate clamps to 0
};

std::string_view to_string(GrayWynerRegime regime);

struct GrayWynerPoint {
  double sigma2 = 1.0;
  double rho = 0.0;  // |rho| as used in the formulas
  double delta = 0.0;
  double alpha_private = 0.0;
  double r0 = 0.0;  // nats
  GrayWynerRegime regime = GrayWynerRegime::kInfeasibleZero;
};

/// Dual variable of the private-rate constraint, in (1/2, 1].
class NuDual {
 public:
  explicit NuDual(double nu);
  double value() const { return nu_; }

 private:
  double nu_;
};

/// R_{Delta,alpha}. Negative rho is replaced by |rho| (flipping one source
/// is lossless under MSE). Throws InputError for sigma2 <= 0, delta <= 0 or
/// alpha_private < 0.
GrayWynerPoint common_rate(double sigma2, Correlation rho, double delta, double alpha_private);

/// Dual function l(nu) for unit-variance sources (pass delta / sigma2).
/// A lower bound on the common rate whenever nu >= 1/(1+|rho|).
double ell_of_nu(Correlation rho, double delta, double alpha_private, NuDual nu);

/// Stationary point Delta e^alpha / (2 Delta e^alpha - 1 + rho) of l, for
/// unit-variance sources. Throws InputError outside the blend regime.
NuDual nu_star(Correlation rho, double delta, double alpha_private);

}  // namespace rwci
