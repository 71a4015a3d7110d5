#pragma once

// Brute-force and constructive verifiers for the closed forms. Each
// verifier recomputes its quantity along an independent route (grid
// search, golden-section search, covariance determinants, exact pmf
// arithmetic) and reports it next to the closed-form value.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rwci/allocation.hpp"

namespace rwci::oracle {

enum class Comparison {
  kEqual,    // |oracle - closed_form| <= tolerance
  kAtLeast,  // oracle >= closed_form - tolerance
  kAtMost,   // oracle <= closed_form + tolerance
};

struct Check {
  std::string name;
  double oracle = 0.0;
  double closed_form = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::kEqual;
  bool passed = false;
};

struct Detail {
  std::string name;
  double value = 0.0;
};

struct Report {
  std::string verifier;
  std::string instance;
  std::vector<Check> checks;
  std::vector<Detail> details;

  bool passed() const;
  void check(std::string name, double oracle, double closed_form, double tolerance,
             Comparison comparison = Comparison::kEqual);
  void detail(std::string name, double value);
};

// ---------------------------------------------------------------------------
// Finite joint distributions

enum Variable : unsigned { kW = 1u, kX = 2u, kY = 4u };
using VariableSet = unsigned;  // bitwise OR of Variable

/// Probability table p(w, x, y) over finite alphabets.
class DiscreteJoint {
 public:
  /// Throws InputError on negative entries, a size mismatch, or total mass
  /// differing from 1 by more than 1e-12.
  DiscreteJoint(std::array<std::size_t, 3> shape, std::vector<double> pmf);

  double operator()(std::size_t w, std::size_t x, std::size_t y) const;
  const std::array<std::size_t, 3>& shape() const { return shape_; }

  /// Entropy (nats) of the marginal over the given variables.
  double entropy(VariableSet vars) const;

 private:
  std::array<std::size_t, 3> shape_;
  std::vector<double> pmf_;
};

/// I(A;B|C) with A, B, C disjoint variable sets (C may be empty).
struct InformationQuery {
  VariableSet a = 0;
  VariableSet b = 0;
  VariableSet given = 0;
};

double discrete_mutual_information(const DiscreteJoint& pmf, InformationQuery query);

// ---------------------------------------------------------------------------
// Verifiers

/// Sweeps the noise correlation of the Gaussian construction over
/// grid_size points in [0, rho]; rates and leakages come from covariance
/// determinants of the constructed (W, X, Y).
Report verify_scalar_achievability(double rho, double gamma, std::size_t grid_size);

/// Exhaustive search of the simplex sum gamma_i = gamma (1 to 3 components)
/// compared against waterfill.
Report verify_waterfill_grid(const CanonicalSpectrum& spectrum, double gamma, double step);

/// A point (sigma^2, q) of the reparametrized covariance constraint set.
struct ConstrainedCovPoint {
  double sigma2 = 1.0;
  double q = 0.0;
};

bool in_constrained_set(ConstrainedCovPoint p, double rho);

/// Objective 1/2 ln((2 pi e)^2 sigma^4) - (1+lambda)/2 ln((2 pi e)^2 sigma^4 (1-q^2)).
double lemma3_objective(double lambda, ConstrainedCovPoint p);

/// Lower bound 1/2 ln(1/(1-lambda^2)) - lambda/2 ln((2 pi e)^2 (1-rho)^2 (1+lambda)/(1-lambda)).
double lemma3_closed_form(double rho, double lambda);

/// Grid minimization of lemma3_objective over the constraint set, with
/// grid x grid points. Requires 0 < lambda <= rho < 1.
Report verify_lemma3_grid(double rho, double lambda, std::size_t grid);

/// Golden-section maximization of the Gray-Wyner dual over nu in
/// (1/2 + 1e-9, 1], unit-variance sources.
Report verify_graywyner_dual(double rho, double delta, double alpha_private);

/// Binary common variable for the doubly symmetric binary source with
/// disagreement probability a0 in (0, 1/2].
Report dsbs_construction_check(double a0);

/// Erasure auxiliary for X = Y = Z, Z uniform binary, 0 <= gamma <= ln 2.
Report erasure_construction_check(double gamma);

/// Random sweep of the scalar Lagrangian bound: weak duality for admissible
/// multipliers and equality at the stationary point.
Report verify_scalar_duality(std::uint64_t seed, std::size_t count);

}  // namespace rwci::oracle
