#pragma once

// Reverse water-filling of a leakage budget across independent Gaussian
// component pairs.

#include <span>
#include <vector>

#include "rwci/scalar_core.hpp"

namespace rwci {

/// Canonical correlations sorted in descending order, each in [0, 1].
class CanonicalSpectrum {
 public:
  CanonicalSpectrum() = default;

  /// Throws InputError if any value is outside [0, 1] or NaN. Unsorted
  /// input is sorted.
  explicit CanonicalSpectrum(std::vector<double> rhos);

  const std::vector<double>& values() const { return rhos_; }
  std::size_t size() const { return rhos_.size(); }
  double operator[](std::size_t i) const { return rhos_[i]; }

  /// Appends zeros (independent components) up to length n.
  CanonicalSpectrum padded_to(std::size_t n) const;

 private:
  std::vector<double> rhos_;
};

struct Allocation {
  std::vector<double> gammas;       // per-component leakage budgets, nats
  double water_level_beta = 0.0;    // common g(gamma_i) of unsaturated components
  double total_value = 0.0;         // C_gamma of the whole vector, nats
  std::vector<bool> saturated;      // gamma_i == I(rho_i)
  double slack = 0.0;               // budget left over once every component saturates
};

/// Optimal split of gamma: find beta* with sum_i min{f(beta*), I(rho_i)} = gamma
/// by bisection, then total = sum_i (C(rho_i) - beta*)^+.
Allocation waterfill(const CanonicalSpectrum& spectrum, GammaBudget gamma);

/// Total budgets at which each component saturates, ordered from the weakest
/// component (saturates first) to the strongest.
std::vector<double> breakpoints(const CanonicalSpectrum& spectrum);

/// sum_i C_{gamma_i}(rho_i) for an arbitrary split.
double evaluate_allocation(const CanonicalSpectrum& spectrum, std::span<const double> gammas);

}  // namespace rwci
