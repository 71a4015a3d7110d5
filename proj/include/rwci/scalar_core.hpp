#pragma once

// Closed-form relaxed Wyner common information for a pair of jointly
// Gaussian scalars. All quantities are in nats.

#include <limits>

namespace rwci {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Correlation coefficient of a bivariate Gaussian.
///
/// Values within 1e-9 outside [-1, 1] are clamped (upstream SVD noise);
/// anything further out, or NaN, throws InputError.
class Correlation {
 public:
  static constexpr double kClampBand = 1e-9;

  explicit Correlation(double rho);

  double value() const { return rho_; }
  double magnitude() const;

 private:
  double rho_;
};

/// Upper bound on the conditional mutual information I(X;Y|W).
class GammaBudget {
 public:
  explicit GammaBudget(double gamma);
  double value() const { return gamma_; }

 private:
  double gamma_;
};

/// Lagrange multiplier of the scalar lower bound; must exceed one.
/// +infinity is accepted.
class DualVariable {
 public:
  explicit DualVariable(double mu);
  double value() const { return mu_; }

 private:
  double mu_;
};

/// The Gaussian construction X = sW + sqrt(1-s^2) N_X, Y = sW + sqrt(1-s^2) N_Y
/// with corr(N_X, N_Y) = alpha_noise and s^2 = sigma2_w.
struct AchievabilityParams {
  double alpha_noise = 0.0;
  double sigma2_w = 0.0;
  double rate_nats = 0.0;     // I(X,Y;W)
  double leakage_nats = 0.0;  // I(X;Y|W)
};

/// Wyner common information C(rho) = 1/2 ln((1+|rho|)/(1-|rho|)).
/// Infinite at |rho| = 1.
double c_of_rho(Correlation rho);

/// Mutual information I(rho) = 1/2 ln(1/(1-rho^2)). Infinite at |rho| = 1.
double i_of_rho(Correlation rho);

/// g(x) = C(I^{-1}(x)): the common information saved by spending x nats of
/// leakage. Strictly concave and increasing, g(0) = 0.
double g_of_gamma(double x);

/// f = g^{-1}, i.e. f(beta) = ln cosh(beta). Strictly convex and increasing.
double f_of_beta(double beta);

/// C_gamma(X;Y) = (C(rho) - g(gamma))^+.
/// Infinite when |rho| = 1 and gamma is finite.
double wyner_ci_scalar(Correlation rho, GammaBudget gamma);

/// Parameters of the Gaussian auxiliary attaining C_gamma. Uses |rho|
/// (flipping the sign of Y is a relabeling). Requires |rho| < 1 and
/// gamma <= I(rho); otherwise throws InputError.
AchievabilityParams achievability_params(Correlation rho, GammaBudget gamma);

/// Lagrangian lower bound on C_gamma for multiplier mu. Valid as a bound
/// when mu >= 1/rho; requires 0 < rho < 1.
double dual_objective_g_mu(Correlation rho, GammaBudget gamma, DualVariable mu);

/// Stationary point 1/sqrt(1-e^{-2 gamma}) of the dual objective.
/// Infinite at gamma = 0; rounds to exactly 1 for large gamma, which is why
/// this returns a plain double rather than a DualVariable.
double mu_star(GammaBudget gamma);

}  // namespace rwci
