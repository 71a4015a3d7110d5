#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "rwci/errors.hpp"
#include "rwci/gray_wyner.hpp"
#include "rwci/oracle.hpp"
#include "rwci/scalar_core.hpp"

namespace rwci::oracle {

namespace {

constexpr double kTwoPiESq = (2.0 * std::numbers::pi * std::numbers::e) *
                             (2.0 * std::numbers::pi * std::numbers::e);

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

// Mutual informations of the Gaussian construction
//   X = s W + sqrt(1-s^2) N_X,  Y = s W + sqrt(1-s^2) N_Y,
// W ~ N(0,1), corr(N_X, N_Y) = alpha, s^2 = (rho-alpha)/(1-alpha),
// evaluated from log-determinants of the joint covariance of (W, X, Y).
struct ConstructionInfo {
  double rate = 0.0;         // I(X,Y;W)
  double leakage = 0.0;      // I(X;Y|W)
  double correlation = 0.0;  // corr(X, Y) of the construction
};

ConstructionInfo gaussian_construction(double rho, double alpha) {
  const double s2 = std::max(0.0, (rho - alpha) / (1.0 - alpha));
  const double s = std::sqrt(s2);
  const double cxy = s2 + (1.0 - s2) * alpha;
  Eigen::Matrix3d k;  // order: W, X, Y
  k << 1.0, s, s,
       s, 1.0, cxy,
       s, cxy, 1.0;
  const double det_wxy = k.determinant();
  const double det_xy = k.bottomRightCorner<2, 2>().determinant();
  const double det_wx = k.topLeftCorner<2, 2>().determinant();
  Eigen::Matrix2d kwy;
  kwy << 1.0, s, s, 1.0;
  const double det_wy = kwy.determinant();

  ConstructionInfo info;
  info.rate = 0.5 * std::log(det_xy / det_wxy);  // det K_W = 1
  info.leakage = 0.5 * std::log(det_wx * det_wy / det_wxy);
  info.correlation = cxy;
  return info;
}

// Product form of the scalar closed form, kept separate from scalar_core.
double scalar_value_product_form(double rho, double gamma) {
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double a = std::sqrt(1.0 - std::exp(-2.0 * gamma));
  const double arg = (1.0 + rho) * (1.0 - a) / ((1.0 - rho) * (1.0 + a));
  return arg > 1.0 ? 0.5 * std::log(arg) : 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------

Report verify_scalar_achievability(double rho, double gamma, std::size_t grid_size) {
  if (!(rho > 0.0 && rho < 1.0)) throw InputError("achievability sweep needs 0 < rho < 1");
  const double saturation = 0.5 * std::log(1.0 / (1.0 - rho * rho));
  if (!(gamma >= 0.0 && gamma <= saturation * (1.0 + 1e-12))) {
    throw InputError("achievability sweep needs 0 <= gamma <= I(rho)");
  }
  if (grid_size < 2) throw InputError("grid_size must be at least 2");

  Report r{"scalar_achievability",
           describe({{"rho", rho}, {"gamma", gamma}, {"grid", double(grid_size)}}), {}, {}};

  // Leakage is computed from determinants, so allow a few ulps when
  // comparing against the budget.
  const double feasibility_slack = 1e-14;
  double best_rate = std::numeric_limits<double>::infinity();
  double best_alpha = 0.0;
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double alpha = rho * double(k) / double(grid_size - 1);
    const auto info = gaussian_construction(rho, alpha);
    if (info.leakage <= gamma + feasibility_slack && info.rate < best_rate) {
      best_rate = info.rate;
      best_alpha = alpha;
    }
  }

  const double closed = wyner_ci_scalar(Correlation(rho), GammaBudget(gamma));
  // The rate decreases with slope at most 1/(1-rho^2) in alpha; one grid
  // step of slack bounds the discretization gap, capped at 1e-4.
  const double step = rho / double(grid_size - 1);
  const double grid_tolerance = std::max(1e-4, 2.0 * step / (1.0 - rho * rho));
  r.check("grid_min_not_below_closed_form", best_rate, closed, 1e-12, Comparison::kAtLeast);
  r.check("grid_min_within_resolution", best_rate, closed, grid_tolerance, Comparison::kAtMost);

  const double alpha_star = std::sqrt(-std::expm1(-2.0 * gamma));
  const auto at_star = gaussian_construction(rho, std::min(alpha_star, rho));
  r.check("chosen_alpha_leakage", at_star.leakage, gamma, 1e-12);
  r.check("chosen_alpha_rate", std::max(at_star.rate, 0.0), closed, 1e-12);
  r.check("construction_correlation", at_star.correlation, rho, 1e-12);
  r.detail("grid_best_alpha", best_alpha);
  r.detail("chosen_alpha", alpha_star);
  return r;
}

// ---------------------------------------------------------------------------

Report verify_waterfill_grid(const CanonicalSpectrum& spectrum, double gamma, double step) {
  const std::size_t n = spectrum.size();
  if (n < 1 || n > 3) throw InputError("waterfill grid oracle supports 1 to 3 components");
  if (!(step > 0.0)) throw InputError("grid step must be positive");
  if (!(gamma >= 0.0)) throw InputError("gamma must be nonnegative");

  std::ostringstream inst;
  inst.precision(17);
  inst << "spectrum=[";
  for (std::size_t i = 0; i < n; ++i) inst << (i ? "," : "") << spectrum[i];
  inst << "] gamma=" << gamma << " step=" << step;
  Report r{"waterfill_grid", inst.str(), {}, {}};

  const auto& rho = spectrum.values();
  std::vector<double> best(n, 0.0);
  double best_value = std::numeric_limits<double>::infinity();
  const auto consider = [&](const std::vector<double>& g) {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) v += scalar_value_product_form(rho[i], g[i]);
    if (v < best_value) {
      best_value = v;
      best = g;
    }
  };

  const auto steps = static_cast<std::size_t>(std::floor(gamma / step + 1e-9));
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = gamma;
    consider(g);
  } else if (n == 2) {
    for (std::size_t k = 0; k <= steps; ++k) {
      g[0] = std::min(gamma, double(k) * step);
      g[1] = gamma - g[0];
      consider(g);
    }
  } else {
    for (std::size_t k1 = 0; k1 <= steps; ++k1) {
      g[0] = std::min(gamma, double(k1) * step);
      for (std::size_t k2 = 0; k1 + k2 <= steps; ++k2) {
        g[1] = std::min(gamma - g[0], double(k2) * step);
        g[2] = std::max(0.0, gamma - g[0] - g[1]);
        consider(g);
      }
    }
  }

  const auto alloc = waterfill(spectrum, GammaBudget(gamma));
  r.check("grid_min_vs_waterfill", best_value, alloc.total_value, 10.0 * step);
  r.check("waterfill_not_above_grid", alloc.total_value, best_value, 1e-12, Comparison::kAtMost);
  for (std::size_t i = 0; i < n; ++i) r.detail("grid_gamma_" + std::to_string(i), best[i]);
  for (std::size_t i = 0; i < n; ++i) {
    r.detail("waterfill_gamma_" + std::to_string(i), alloc.gammas[i]);
  }
  return r;
}

// ---------------------------------------------------------------------------

bool in_constrained_set(ConstrainedCovPoint p, double rho) {
  if (!(p.sigma2 > 0.0 && p.sigma2 <= 1.0) || !(p.q > -1.0 && p.q < 1.0)) return false;
  if (p.q <= rho) return p.sigma2 * (1.0 - p.q) <= 1.0 - rho;
  return p.sigma2 * (1.0 + p.q) <= 1.0 + rho;
}

double lemma3_objective(double lambda, ConstrainedCovPoint p) {
  const double s4 = p.sigma2 * p.sigma2;
  return 0.5 * std::log(kTwoPiESq * s4) -
         0.5 * (1.0 + lambda) * std::log(kTwoPiESq * s4 * (1.0 - p.q * p.q));
}

double lemma3_closed_form(double rho, double lambda) {
  return 0.5 * std::log(1.0 / (1.0 - lambda * lambda)) -
         0.5 * lambda *
             std::log(kTwoPiESq * (1.0 - rho) * (1.0 - rho) * (1.0 + lambda) / (1.0 - lambda));
}

Report verify_lemma3_grid(double rho, double lambda, std::size_t grid) {
  if (!(rho > 0.0 && rho < 1.0)) throw InputError("lemma3 grid needs 0 < rho < 1");
  if (!(lambda > 0.0)) throw InputError("lemma3 grid needs lambda > 0");
  if (lambda > rho) throw InputError("lemma3 bound requires lambda <= rho");
  if (grid < 2) throw InputError("grid must have at least 2 points per axis");

  Report r{"lemma3_grid", describe({{"rho", rho}, {"lambda", lambda}, {"grid", double(grid)}}),
           {}, {}};

  // Columns are cell centres in q over (-1, 1); each column is sampled on a
  // uniform grid in (0, sigma2_max(q)], so the last row lies on the boundary
  // of the constraint set. Cell distances are measured in these coordinates,
  // (q, sigma2 / sigma2_max(q)), where the grid is uniform.
  const auto cap = [rho](double q) {
    return std::min(1.0, q <= rho ? (1.0 - rho) / (1.0 - q) : (1.0 + rho) / (1.0 + q));
  };
  const double dq = 2.0 / double(grid);
  const double dfrac = 1.0 / double(grid);
  double best = std::numeric_limits<double>::infinity();
  ConstrainedCovPoint best_point;
  for (std::size_t j = 0; j < grid; ++j) {
    const double q = -1.0 + (double(j) + 0.5) * dq;
    const double row_step = cap(q) / double(grid);
    for (std::size_t i = 0; i < grid; ++i) {
      ConstrainedCovPoint p{row_step * double(i + 1), q};
      // Guard the boundary row against rounding just outside the set.
      if (!in_constrained_set(p, rho)) p.sigma2 = std::nextafter(p.sigma2, 0.0);
      if (!in_constrained_set(p, rho)) continue;
      const double v = lemma3_objective(lambda, p);
      if (v < best) {
        best = v;
        best_point = p;
      }
    }
  }

  const double closed = lemma3_closed_form(rho, lambda);
  const ConstrainedCovPoint kkt{(1.0 - rho) / (1.0 - lambda), lambda};
  r.check("grid_min_above_bound", best, closed, 1e-3, Comparison::kAtLeast);
  r.check("grid_min_near_bound", best, closed, 1e-3, Comparison::kAtMost);
  r.check("minimizer_q", best_point.q, kkt.q, 2.0 * dq);
  r.check("minimizer_sigma2_fraction", best_point.sigma2 / cap(best_point.q),
          kkt.sigma2 / cap(kkt.q), 2.0 * dfrac);
  r.check("kkt_value_matches_bound", lemma3_objective(lambda, kkt), closed, 1e-12);
  // h(lambda) = f(KKT point) - f(lambda, 1, rho) <= 0 for lambda <= rho.
  r.check("kkt_beats_corner", lemma3_objective(lambda, kkt),
          lemma3_objective(lambda, {1.0, rho}), 1e-12, Comparison::kAtMost);
  r.detail("grid_min", best);
  r.detail("grid_sigma2", best_point.sigma2);
  r.detail("grid_q", best_point.q);
  r.detail("sigma2_distance", std::abs(best_point.sigma2 - kkt.sigma2));
  return r;
}

// ---------------------------------------------------------------------------

Report verify_graywyner_dual(double rho, double delta, double alpha_private) {
  const Correlation corr(rho);
  const auto point = common_rate(1.0, corr, delta, alpha_private);
  Report r{"graywyner_dual",
           describe({{"rho", rho}, {"delta", delta}, {"alpha", alpha_private}}) + " regime=" +
               std::string(to_string(point.regime)),
           {}, {}};

  const auto ell = [&](double nu) { return ell_of_nu(corr, delta, alpha_private, NuDual(nu)); };

  // Golden-section search for the maximum of the concave dual.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.5 + 1e-9;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = ell(x1);
  double f2 = ell(x2);
  for (int iter = 0; iter < 200; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = ell(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = ell(x1);
    }
  }
  double arg = f1 >= f2 ? x1 : x2;
  double best = std::max(f1, f2);
  // The maximizer may sit on the closed end nu = 1.
  if (const double at_one = ell(1.0); at_one >= best) {
    best = at_one;
    arg = 1.0;
  }

  if (point.regime == GrayWynerRegime::kInfeasibleZero) {
    r.check("common_rate_is_zero", point.r0, 0.0, 0.0);
    r.check("dual_max_nonpositive", best, 0.0, 1e-12, Comparison::kAtMost);
  } else {
    r.check("dual_max_vs_common_rate", best, point.r0, 1e-8);
  }
  r.detail("argmax_nu", arg);
  r.detail("common_rate", point.r0);
  return r;
}

// ---------------------------------------------------------------------------

Report verify_scalar_duality(std::uint64_t seed, std::size_t count) {
  Report r{"scalar_duality",
           describe({{"seed", double(seed)}, {"count", double(count)}}), {}, {}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rho_dist(0.05, 0.95);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double worst_gap = -std::numeric_limits<double>::infinity();
  double worst_stationary = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double rho = rho_dist(rng);
    const Correlation corr(rho);
    const double sat = i_of_rho(corr);
    const GammaBudget gamma(1.5 * sat * unit(rng));
    const double closed = wyner_ci_scalar(corr, gamma);

    // Admissible multipliers: mu >= max(1/rho, 1) (1/rho > 1 here).
    const double mu = (1.0 / rho) * (1.0 + 4.0 * unit(rng));
    const double bound = dual_objective_g_mu(corr, gamma, DualVariable(mu));
    worst_gap = std::max(worst_gap, bound - closed);

    if (gamma.value() > 0.0 && gamma.value() <= sat) {
      const double star = mu_star(gamma);
      if (star >= 1.0 / rho) {
        worst_stationary = std::max(
            worst_stationary,
            std::abs(dual_objective_g_mu(corr, gamma, DualVariable(star)) - closed));
      }
    }
  }
  r.check("weak_duality_max_gap", worst_gap, 0.0, 1e-12, Comparison::kAtMost);
  r.check("stationary_point_gap", worst_stationary, 0.0, 1e-10);
  return r;
}

}  // namespace rwci::oracle
