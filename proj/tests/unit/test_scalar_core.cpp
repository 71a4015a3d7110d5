#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rwci/errors.hpp"
#include "rwci/scalar_core.hpp"

using namespace rwci;

namespace {

double C(double rho, double gamma) { return wyner_ci_scalar(Correlation(rho), GammaBudget(gamma)); }

// Inverts f by bisection; independent of the closed form of g.
double g_by_bisection(double x) {
  double lo = 0.0, hi = 50.0;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f_of_beta(mid) < x ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Product form of the scalar closed form, used to cross-check (c - g)^+.
double product_form(double rho, double gamma) {
  const double a = std::sqrt(1.0 - std::exp(-2.0 * gamma));
  const double r = std::abs(rho);
  const double arg = (1.0 + r) / (1.0 - r) * (1.0 - a) / (1.0 + a);
  return arg > 1.0 ? 0.5 * std::log(arg) : 0.0;
}

}  // namespace

TEST_CASE("Correlation clamps within the band and rejects beyond it") {
  CHECK(Correlation(1.0 + 5e-10).value() == 1.0);
  CHECK(Correlation(-1.0 - 5e-10).value() == -1.0);
  CHECK(Correlation(-0.3).magnitude() == doctest::Approx(0.3));
  CHECK_THROWS_AS(Correlation(1.0 + 1e-8), InputError);
  CHECK_THROWS_AS(Correlation(std::nan("")), InputError);
  CHECK_THROWS_AS(GammaBudget(-1e-15), InputError);
  CHECK_THROWS_AS(DualVariable(1.0), InputError);
}

TEST_CASE("c_of_rho") {
  CHECK(c_of_rho(Correlation(0.0)) == 0.0);
  CHECK(c_of_rho(Correlation(0.5)) == doctest::Approx(std::log(std::sqrt(3.0))).epsilon(1e-15));
  CHECK(std::abs(c_of_rho(Correlation(0.5)) - 0.549306144) < 1e-9);
  // 1/2 ln(1.9/0.1) evaluated at 40 digits for the double nearest 0.9.
  CHECK(std::abs(c_of_rho(Correlation(0.9)) - 1.472219489583220346870095) < 1e-15);
  CHECK(c_of_rho(Correlation(-0.9)) == c_of_rho(Correlation(0.9)));
  CHECK(c_of_rho(Correlation(1.0)) == kInfinity);
}

TEST_CASE("i_of_rho") {
  CHECK(i_of_rho(Correlation(0.0)) == 0.0);
  CHECK(std::abs(i_of_rho(Correlation(0.5)) - std::log(2.0 / std::sqrt(3.0))) < 1e-15);
  CHECK(std::abs(i_of_rho(Correlation(0.5)) - 0.143841036) < 1e-9);
  CHECK(std::abs(i_of_rho(Correlation(0.99)) - 1.958517773625844728473316) < 1e-14);
  CHECK(i_of_rho(Correlation(-1.0)) == kInfinity);
}

TEST_CASE("g and f are an inverse pair") {
  CHECK(g_of_gamma(0.0) == 0.0);
  CHECK(f_of_beta(0.0) == 0.0);
  CHECK(std::abs(g_of_gamma(i_of_rho(Correlation(0.5))) - c_of_rho(Correlation(0.5))) < 1e-15);
  CHECK(std::abs(f_of_beta(c_of_rho(Correlation(0.5))) - i_of_rho(Correlation(0.5))) < 1e-15);
  CHECK(std::abs(g_of_gamma(0.1) - g_by_bisection(0.1)) < 1e-12);
  CHECK(std::abs(g_of_gamma(0.1) - 0.454703085140535426604784) < 1e-15);
  for (double x : {0.01, 0.1, 1.0}) CHECK(std::abs(f_of_beta(g_of_gamma(x)) - x) < 1e-12);

  SUBCASE("grids") {
    for (int k = 0; k <= 400; ++k) {
      const double x = 1e-6 + 10.0 * k / 400.0;
      CHECK(std::abs(f_of_beta(g_of_gamma(x)) - x) < 1e-12 * std::max(1.0, x));
      CHECK(std::abs(g_of_gamma(f_of_beta(x)) - x) < 1e-12 * std::max(1.0, x));
    }
  }
  SUBCASE("tiny budgets keep relative accuracy") {
    for (double x : {1e-310, 1e-300, 1e-200, 1e-40}) {
      const double expected = std::sqrt(2.0 * x);  // g(x) ~ sqrt(2x) near 0
      CHECK(std::abs(g_of_gamma(x) - expected) <= 1e-12 * expected);
    }
  }
  SUBCASE("shape: increasing, g concave, f convex") {
    double prev_g = -1.0;
    for (int k = 1; k < 200; ++k) {
      const double x = 0.02 * k, h = 0.01;
      CHECK(g_of_gamma(x) > prev_g);
      prev_g = g_of_gamma(x);
      CHECK(g_of_gamma(x - h) + g_of_gamma(x + h) < 2.0 * g_of_gamma(x));
      CHECK(f_of_beta(x - h) + f_of_beta(x + h) > 2.0 * f_of_beta(x));
    }
  }
  CHECK_THROWS_AS(g_of_gamma(-1.0), InputError);
  CHECK_THROWS_AS(f_of_beta(-1.0), InputError);
  CHECK(std::isfinite(f_of_beta(800.0)));
}

TEST_CASE("wyner_ci_scalar reproduces the rho = 1/2 curve") {
  CHECK(std::abs(C(0.5, 0.0) - 0.549306144) < 1e-9);
  CHECK(std::abs(C(0.5, 0.05) - 0.230436676827826) < 1e-5);
  CHECK(std::abs(C(0.5, 0.1) - 0.094603059) < 1e-5);
  CHECK(std::abs(C(0.5, 0.1) - 0.094603059193519419093) < 1e-15);
  CHECK(std::abs(C(0.5, 0.143) - 0.00168420104572345) < 1e-5);
  CHECK(C(0.5, 0.143841037) == 0.0);
  CHECK(C(0.5, 10.0) == 0.0);
  CHECK(C(1.0, 3.0) == kInfinity);
  CHECK(C(1.0, kInfinity) == 0.0);
}

TEST_CASE("achievability_params") {
  SUBCASE("gamma = 0 is Wyner's construction") {
    const auto p = achievability_params(Correlation(0.5), GammaBudget(0.0));
    CHECK(p.alpha_noise == 0.0);
    CHECK(p.sigma2_w == doctest::Approx(0.5));
    CHECK(std::abs(p.rate_nats - 0.549306144) < 1e-9);
    CHECK(p.leakage_nats == 0.0);
  }
  SUBCASE("saturation endpoint") {
    const auto p = achievability_params(Correlation(0.5), GammaBudget(i_of_rho(Correlation(0.5))));
    CHECK(std::abs(p.alpha_noise - 0.5) < 1e-12);
    CHECK(p.sigma2_w < 1e-12);
    CHECK(p.rate_nats < 1e-12);
  }
  SUBCASE("rate matches the closed form") {
    const auto p = achievability_params(Correlation(0.8), GammaBudget(0.05));
    CHECK(std::abs(p.rate_nats - C(0.8, 0.05)) < 1e-12);
    CHECK(p.leakage_nats == 0.05);
    CHECK(p.sigma2_w == doctest::Approx((0.8 - p.alpha_noise) / (1.0 - p.alpha_noise)));
    // Conditional correlation of the noise is the one with mutual information gamma.
    CHECK(std::abs(i_of_rho(Correlation(p.alpha_noise)) - 0.05) < 1e-12);
  }
  SUBCASE("negative rho uses |rho|") {
    const auto p = achievability_params(Correlation(-0.8), GammaBudget(0.05));
    CHECK(std::abs(p.rate_nats - C(0.8, 0.05)) < 1e-12);
  }
  CHECK_THROWS_AS(achievability_params(Correlation(0.5), GammaBudget(0.2)), InputError);
  CHECK_THROWS_AS(achievability_params(Correlation(1.0), GammaBudget(0.2)), InputError);
}

TEST_CASE("Lagrangian dual of the scalar problem") {
  const Correlation rho(0.5);
  SUBCASE("equality at mu*") {
    const GammaBudget gamma(0.05);
    const double star = mu_star(gamma);
    REQUIRE(star >= 1.0 / 0.5);
    CHECK(std::abs(dual_objective_g_mu(rho, gamma, DualVariable(star)) - C(0.5, 0.05)) < 1e-10);
  }
  SUBCASE("concavity: second difference matches -1/(mu(mu^2-1))") {
    const GammaBudget gamma(0.05);
    const double h = 1e-4;
    for (double mu : {1.5, 2.0, 5.0}) {
      const auto g = [&](double m) { return dual_objective_g_mu(rho, gamma, DualVariable(m)); };
      const double second = (g(mu + h) - 2.0 * g(mu) + g(mu - h)) / (h * h);
      CHECK(second < 0.0);
      CHECK(second == doctest::Approx(-1.0 / (mu * (mu * mu - 1.0))).epsilon(1e-4));
    }
  }
  SUBCASE("mu* is stationary") {
    const GammaBudget gamma(0.1);
    const double mu = mu_star(gamma);
    const double h = 1e-6;
    const auto g = [&](double m) { return dual_objective_g_mu(rho, gamma, DualVariable(m)); };
    CHECK(std::abs((g(mu + h) - g(mu - h)) / (2.0 * h)) < 1e-8);
  }
  SUBCASE("mu* limits") {
    CHECK(mu_star(GammaBudget(0.0)) == kInfinity);
    CHECK(mu_star(GammaBudget(40.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(mu_star(GammaBudget(i_of_rho(rho))) - 2.0) < 1e-12);
  }
  SUBCASE("weak duality over random admissible triples") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
      const double r = 0.05 + 0.9 * u(rng);
      const GammaBudget gamma(2.0 * i_of_rho(Correlation(r)) * u(rng));
      const DualVariable mu((1.0 / r) * (1.0 + 5.0 * u(rng)));
      CHECK(dual_objective_g_mu(Correlation(r), gamma, mu) <= C(r, gamma.value()) + 1e-12);
    }
  }
  CHECK_THROWS_AS(dual_objective_g_mu(Correlation(0.0), GammaBudget(0.1), DualVariable(2.0)),
                  InputError);
}

TEST_CASE("scalar properties over random instances") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double rho = 2.0 * u(rng) - 1.0;
    const double sat = i_of_rho(Correlation(rho));
    const double g1 = 1.2 * sat * u(rng);
    const double g2 = 1.2 * sat * u(rng);
    const double lo = std::min(g1, g2), hi = std::max(g1, g2);
    CAPTURE(rho);
    CAPTURE(lo);
    CAPTURE(hi);

    CHECK(C(rho, lo) == C(-rho, lo));
    CHECK(C(rho, lo) >= C(rho, hi));
    CHECK(C(rho, 0.5 * (lo + hi)) <= 0.5 * (C(rho, lo) + C(rho, hi)) + 1e-12);
    CHECK(C(rho, lo) >= std::max(sat - lo, 0.0) - 1e-15);
    CHECK(C(rho, lo) == std::max(c_of_rho(Correlation(rho)) - g_of_gamma(lo), 0.0));
    // The product form loses digits forming 1 - alpha, hence the looser bound.
    CHECK(std::abs(C(rho, lo) - product_form(rho, lo)) <= 1e-12 * std::max(1.0, C(rho, lo)));
    if (std::abs(rho) > 0.0 && lo <= sat) {
      const auto p = achievability_params(Correlation(rho), GammaBudget(lo));
      CHECK(std::abs(p.rate_nats - C(rho, lo)) < 1e-12);
    }
  }
}

TEST_CASE("wyner_ci_scalar against 40-digit references") {
  // rho is the double nearest the literal; references from mpmath at 40 digits.
  const struct {
    double rho, gamma, value;
  } cases[] = {
      {0.5, 0.1, 0.09460305919351941909283863},
      {0.5, 0.05, 0.2304366768278262235235926},
      {0.9, 0.3, 0.6583750888712966530645077},
      {0.99, 1.0, 0.989197958209168478790418},
      {0.2, 0.001, 0.1580037405716165196527796},
      {0.75, 0.4, 0.01787979448573069481982136},
      {0.999, 2.5, 0.6087427456866465328459386},
      {0.3, 1e-8, 0.3093781828466386915069413},
  };
  for (const auto& c : cases) {
    CAPTURE(c.rho);
    CAPTURE(c.gamma);
    CHECK(std::abs(C(c.rho, c.gamma) - c.value) <= 1e-15 * std::max(1.0, c.value));
  }
}

TEST_CASE("endpoint identities") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  for (int k = 0; k < 50; ++k) {
    const double rho = u(rng);
    const double r = std::abs(rho);
    CHECK(std::abs(C(rho, 0.0) - 0.5 * std::log((1 + r) / (1 - r))) < 1e-12);
    CHECK(C(rho, 0.5 * std::log(1.0 / (1.0 - rho * rho))) < 1e-12);
  }
}
