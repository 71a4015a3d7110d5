#include "rwci/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "rwci/errors.hpp"

namespace rwci {

namespace {

constexpr double kBisectionTolerance = 1e-12;
constexpr int kMaxBisections = 200;

// h(beta) = sum_i min{f(beta), I(rho_i)}: the budget consumed at water level beta.
double consumed_budget(double beta, std::span<const double> saturation) {
  const double fb = f_of_beta(beta);
  double total = 0.0;
  for (double cap : saturation) total += std::min(fb, cap);
  return total;
}

}  // namespace

CanonicalSpectrum::CanonicalSpectrum(std::vector<double> rhos) : rhos_(std::move(rhos)) {
  for (double r : rhos_) {
    if (std::isnan(r) || r < 0.0 || r > 1.0) {
      throw InputError("canonical correlation outside [0, 1]: " + std::to_string(r));
    }
  }
  std::sort(rhos_.begin(), rhos_.end(), std::greater<>());
}

CanonicalSpectrum CanonicalSpectrum::padded_to(std::size_t n) const {
  auto rhos = rhos_;
  if (rhos.size() < n) rhos.resize(n, 0.0);
  return CanonicalSpectrum(std::move(rhos));
}

Allocation waterfill(const CanonicalSpectrum& spectrum, GammaBudget gamma) {
  const std::size_t n = spectrum.size();
  const double budget = gamma.value();

  std::vector<double> common(n), saturation(n);
  double total_saturation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    common[i] = c_of_rho(Correlation(spectrum[i]));
    saturation[i] = i_of_rho(Correlation(spectrum[i]));
    total_saturation += saturation[i];
  }

  Allocation a;
  a.gammas.assign(n, 0.0);
  a.saturated.assign(n, false);

  if (budget >= total_saturation) {
    // Every component saturates; the surplus buys nothing.
    a.gammas = saturation;
    a.saturated.assign(n, true);
    a.water_level_beta = n > 0 ? common.front() : 0.0;
    a.total_value = 0.0;
    a.slack = budget - total_saturation;
    return a;
  }

  double beta = 0.0;
  if (budget > 0.0) {
    double lo = 0.0;
    double hi = common.front();
    if (hi == kInfinity) {
      // A perfectly correlated component never saturates, so h is unbounded.
      hi = 1.0;
      while (consumed_budget(hi, saturation) < budget) hi *= 2.0;
    }
    beta = 0.5 * (lo + hi);
    for (int iter = 0; iter < kMaxBisections; ++iter) {
      beta = 0.5 * (lo + hi);
      const double h = consumed_budget(beta, saturation);
      if (std::abs(h - budget) <= kBisectionTolerance) break;
      if (beta == lo || beta == hi) break;
      (h < budget ? lo : hi) = beta;
    }
  }

  a.water_level_beta = beta;
  const double level = f_of_beta(beta);
  for (std::size_t i = 0; i < n; ++i) {
    a.saturated[i] = level >= saturation[i];
    a.gammas[i] = std::min(level, saturation[i]);
    if (common[i] > beta) a.total_value += common[i] - beta;
  }
  return a;
}

std::vector<double> breakpoints(const CanonicalSpectrum& spectrum) {
  const std::size_t n = spectrum.size();
  std::vector<double> out;
  out.reserve(n);
  double tail = 0.0;  // sum of I(rho_i) over components weaker than k
  for (std::size_t k = n; k-- > 0;) {
    const double ik = i_of_rho(Correlation(spectrum[k]));
    out.push_back(static_cast<double>(k + 1) * ik + tail);
    tail += ik;
  }
  return out;
}

double evaluate_allocation(const CanonicalSpectrum& spectrum, std::span<const double> gammas) {
  if (gammas.size() != spectrum.size()) {
    throw InputError("allocation has " + std::to_string(gammas.size()) +
                     " entries for a spectrum of length " + std::to_string(spectrum.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    total += wyner_ci_scalar(Correlation(spectrum[i]), GammaBudget(gammas[i]));
  }
  return total;
}

}  // namespace rwci
