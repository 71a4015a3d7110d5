#pragma once

// Relaxed Wyner common information between jointly Gaussian vectors,
// reduced to independent scalar pairs through canonical correlations.

#include <Eigen/Dense>

#include "rwci/allocation.hpp"
#include "rwci/scalar_core.hpp"

namespace rwci {

/// Covariance blocks of the stacked vector (X, Y).
struct JointGaussianCov {
  Eigen::MatrixXd kx;   // dx x dx
  Eigen::MatrixXd ky;   // dy x dy
  Eigen::MatrixXd kxy;  // dx x dy

  static JointGaussianCov from_blocks(Eigen::MatrixXd kx, Eigen::MatrixXd ky, Eigen::MatrixXd kxy);

  /// Splits a (dx+dy) square matrix after the first dim_x rows/columns.
  /// The lower-left block is dropped; symmetry is checked by validate_cov.
  static JointGaussianCov from_joint(const Eigen::MatrixXd& joint, Eigen::Index dim_x);

  Eigen::Index dim_x() const { return kx.rows(); }
  Eigen::Index dim_y() const { return ky.rows(); }
  Eigen::MatrixXd stacked() const;
};

inline constexpr double kSymmetryTolerance = 1e-9;  // relative Frobenius
inline constexpr double kPsdTolerance = 1e-9;       // relative to largest eigenvalue
inline constexpr double kRankTolerance = 1e-10;     // relative to largest eigenvalue
inline constexpr double kSpectrumTolerance = 1e-6;  // allowed excess over 1

/// Checks finiteness, block shapes, symmetry of kx and ky, and positive
/// semi-definiteness of the stacked matrix. Throws InputError for shape or
/// finiteness problems and NumericalError (naming the eigenvalue) otherwise.
JointGaussianCov validate_cov(const JointGaussianCov& cov);

/// Pseudo-inverse square root V diag(d) V^T, d_i = 1/sqrt(lambda_i) for
/// lambda_i > kRankTolerance * lambda_max and 0 otherwise.
Eigen::MatrixXd pinv_sqrt(const Eigen::MatrixXd& m);

/// Singular values of pinv_sqrt(kx) kxy pinv_sqrt(ky), zero-padded to
/// max(dx, dy) and clamped to [0, 1].
CanonicalSpectrum canonical_correlations(const JointGaussianCov& cov);

struct VectorResult {
  double value = 0.0;
  CanonicalSpectrum spectrum;
  Allocation allocation;
};

VectorResult wyner_ci_vector(const JointGaussianCov& cov, GammaBudget gamma);

}  // namespace rwci
