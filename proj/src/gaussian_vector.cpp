#include "rwci/gaussian_vector.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "rwci/errors.hpp"

namespace rwci {

namespace {

void require_symmetric(const Eigen::MatrixXd& m, const char* name) {
  const double scale = std::max(m.norm(), 1e-300);
  const double asym = (m - m.transpose()).norm();
  if (asym > kSymmetryTolerance * scale) {
    std::ostringstream msg;
    msg << name << " is not symmetric: ||M - M^T||_F = " << asym
        << " exceeds " << kSymmetryTolerance << " * ||M||_F";
    throw NumericalError(msg.str());
  }
}

void require_psd(const Eigen::VectorXd& eigenvalues, const char* name) {
  if (eigenvalues.size() == 0) return;
  const double top = std::max(eigenvalues.maxCoeff(), 0.0);
  const double bottom = eigenvalues.minCoeff();
  if (bottom < -kPsdTolerance * top || (top == 0.0 && bottom < 0.0)) {
    std::ostringstream msg;
    msg << name << " is not positive semi-definite: eigenvalue " << bottom
        << " (largest " << top << ")";
    throw NumericalError(msg.str());
  }
}

}  // namespace

JointGaussianCov JointGaussianCov::from_blocks(Eigen::MatrixXd kx, Eigen::MatrixXd ky,
                                               Eigen::MatrixXd kxy) {
  if (kx.rows() != kx.cols() || ky.rows() != ky.cols()) {
    throw InputError("kx and ky must be square");
  }
  if (kxy.rows() != kx.rows() || kxy.cols() != ky.rows()) {
    std::ostringstream msg;
    msg << "kxy is " << kxy.rows() << "x" << kxy.cols() << ", expected " << kx.rows() << "x"
        << ky.rows();
    throw InputError(msg.str());
  }
  return {std::move(kx), std::move(ky), std::move(kxy)};
}

JointGaussianCov JointGaussianCov::from_joint(const Eigen::MatrixXd& joint, Eigen::Index dim_x) {
  if (joint.rows() != joint.cols()) throw InputError("joint covariance must be square");
  if (dim_x < 1 || dim_x >= joint.rows()) {
    throw InputError("dim_x must be in [1, " + std::to_string(joint.rows() - 1) + "]");
  }
  // The stacked matrix must be symmetric as a whole, so check the
  // off-diagonal blocks against each other before dropping one.
  require_symmetric(joint, "joint covariance");
  const Eigen::Index dy = joint.rows() - dim_x;
  return from_blocks(joint.topLeftCorner(dim_x, dim_x), joint.bottomRightCorner(dy, dy),
                     joint.topRightCorner(dim_x, dy));
}

Eigen::MatrixXd JointGaussianCov::stacked() const {
  const Eigen::Index dx = dim_x();
  const Eigen::Index dy = dim_y();
  Eigen::MatrixXd joint(dx + dy, dx + dy);
  joint.topLeftCorner(dx, dx) = kx;
  joint.topRightCorner(dx, dy) = kxy;
  joint.bottomLeftCorner(dy, dx) = kxy.transpose();
  joint.bottomRightCorner(dy, dy) = ky;
  return joint;
}

JointGaussianCov validate_cov(const JointGaussianCov& cov) {
  if (cov.dim_x() == 0 || cov.dim_y() == 0) throw InputError("empty covariance block");
  auto checked = JointGaussianCov::from_blocks(cov.kx, cov.ky, cov.kxy);
  if (!checked.kx.allFinite() || !checked.ky.allFinite() || !checked.kxy.allFinite()) {
    throw InputError("covariance contains non-finite entries");
  }
  require_symmetric(checked.kx, "kx");
  require_symmetric(checked.ky, "ky");
  // Symmetrize away the tolerated noise so the eigen solvers see exact input.
  checked.kx = 0.5 * (checked.kx + checked.kx.transpose());
  checked.ky = 0.5 * (checked.ky + checked.ky.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(checked.stacked(), Eigen::EigenvaluesOnly);
  require_psd(eig.eigenvalues(), "stacked covariance");
  return checked;
}

Eigen::MatrixXd pinv_sqrt(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InputError("pinv_sqrt needs a square matrix");
  if (!m.allFinite()) throw InputError("pinv_sqrt input contains non-finite entries");
  if (m.size() == 0) return m;
  require_symmetric(m, "matrix");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (m + m.transpose()));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  require_psd(lambda, "matrix");

  const double cutoff = kRankTolerance * lambda.maxCoeff();
  Eigen::VectorXd d(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    d[i] = (lambda[i] > cutoff && lambda[i] > 0.0) ? 1.0 / std::sqrt(lambda[i]) : 0.0;
  }
  const Eigen::MatrixXd& v = eig.eigenvectors();
  return v * d.asDiagonal() * v.transpose();
}

CanonicalSpectrum canonical_correlations(const JointGaussianCov& cov) {
  const auto valid = validate_cov(cov);
  const Eigen::MatrixXd normalized = pinv_sqrt(valid.kx) * valid.kxy * pinv_sqrt(valid.ky);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(normalized);
  const Eigen::VectorXd& sv = svd.singularValues();

  std::vector<double> rhos;
  rhos.reserve(static_cast<std::size_t>(std::max(valid.dim_x(), valid.dim_y())));
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > 1.0 + kSpectrumTolerance) {
      std::ostringstream msg;
      msg << "canonical correlation " << sv[i] << " exceeds 1; covariance is inconsistent";
      throw NumericalError(msg.str());
    }
    rhos.push_back(std::clamp(sv[i], 0.0, 1.0));
  }
  return CanonicalSpectrum(std::move(rhos))
      .padded_to(static_cast<std::size_t>(std::max(valid.dim_x(), valid.dim_y())));
}

VectorResult wyner_ci_vector(const JointGaussianCov& cov, GammaBudget gamma) {
  VectorResult out;
  out.spectrum = canonical_correlations(cov);
  out.allocation = waterfill(out.spectrum, gamma);
  out.value = out.allocation.total_value;
  return out;
}

}  // namespace rwci
