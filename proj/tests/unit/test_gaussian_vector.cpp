#include <cmath>
#include <random>

#include "doctest.h"
#include "rwci/errors.hpp"
#include "rwci/gaussian_vector.hpp"

using namespace rwci;
using Eigen::MatrixXd;

namespace {

MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = n(rng);
  return m;
}

// A^T A split into blocks: always a valid joint covariance.
JointGaussianCov random_cov(std::mt19937_64& rng, Eigen::Index dx, Eigen::Index dy) {
  const MatrixXd a = random_matrix(rng, dx + dy + 2, dx + dy);
  return JointGaussianCov::from_joint(a.transpose() * a, dx);
}

JointGaussianCov unit_pair(double rho) {
  return JointGaussianCov::from_blocks(MatrixXd::Identity(1, 1), MatrixXd::Identity(1, 1),
                                       MatrixXd::Constant(1, 1, rho));
}

}  // namespace

TEST_CASE("validate_cov accepts valid and rejects invalid covariances") {
  const MatrixXd i2 = MatrixXd::Identity(2, 2);
  CHECK_NOTHROW(validate_cov(JointGaussianCov::from_blocks(i2, i2, MatrixXd::Zero(2, 2))));

  std::mt19937_64 rng(7);
  CHECK_NOTHROW(validate_cov(random_cov(rng, 2, 2)));

  try {
    validate_cov(unit_pair(2.0));
    FAIL("indefinite covariance accepted");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("-1") != std::string::npos);
  }

  MatrixXd asym = i2;
  asym(0, 1) = 0.3;
  CHECK_THROWS_AS(validate_cov(JointGaussianCov::from_blocks(asym, i2, MatrixXd::Zero(2, 2))),
                  NumericalError);

  MatrixXd bad = i2;
  bad(1, 1) = std::nan("");
  CHECK_THROWS_AS(validate_cov(JointGaussianCov::from_blocks(bad, i2, MatrixXd::Zero(2, 2))),
                  InputError);
  CHECK_THROWS_AS(validate_cov(JointGaussianCov::from_blocks(i2, i2, MatrixXd::Zero(3, 2))),
                  InputError);
}

TEST_CASE("pinv_sqrt") {
  const MatrixXd i3 = MatrixXd::Identity(3, 3);
  CHECK((pinv_sqrt(i3) - i3).norm() < 1e-14);

  MatrixXd d = MatrixXd::Zero(2, 2);
  d(0, 0) = 4.0;
  MatrixXd expected = MatrixXd::Zero(2, 2);
  expected(0, 0) = 0.5;
  CHECK((pinv_sqrt(d) - expected).norm() < 1e-14);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixXd a = random_matrix(rng, 4, 4);
    const MatrixXd full = a.transpose() * a + 0.1 * MatrixXd::Identity(4, 4);
    const MatrixXd p = pinv_sqrt(full);
    CHECK((p * full * p - MatrixXd::Identity(4, 4)).norm() < 1e-8);

    // Rank 2 in 3 dimensions: p m p is the projector onto range(m).
    const MatrixXd b = random_matrix(rng, 2, 3);
    const MatrixXd m = b.transpose() * b;
    const MatrixXd q = pinv_sqrt(m);
    const MatrixXd projector = b.transpose() * (b * b.transpose()).inverse() * b;
    CHECK((q * m * q - projector).norm() < 1e-8);
  }
}

TEST_CASE("canonical correlation examples") {
  {
    const auto s = canonical_correlations(unit_pair(-0.6));
    REQUIRE(s.size() == 1);
    CHECK(std::abs(s[0] - 0.6) < 1e-14);
  }
  {
    MatrixXd kxy = MatrixXd::Zero(2, 2);
    kxy(0, 0) = 0.2;
    kxy(1, 1) = 0.9;
    const auto s = canonical_correlations(
        JointGaussianCov::from_blocks(MatrixXd::Identity(2, 2), MatrixXd::Identity(2, 2), kxy));
    REQUIRE(s.size() == 2);
    CHECK(std::abs(s[0] - 0.9) < 1e-14);
    CHECK(std::abs(s[1] - 0.2) < 1e-14);
  }
  {
    const auto s = canonical_correlations(JointGaussianCov::from_blocks(
        MatrixXd::Identity(2, 2), MatrixXd::Identity(2, 2), MatrixXd::Constant(2, 2, 0.5)));
    REQUIRE(s.size() == 2);
    CHECK(std::abs(s[0] - 1.0) < 1e-12);
    CHECK(std::abs(s[1]) < 1e-12);
  }
  {
    // dx = 3, dy = 1: padded to three components.
    MatrixXd kxy = MatrixXd::Zero(3, 1);
    kxy(1, 0) = 0.4;
    const auto s = canonical_correlations(
        JointGaussianCov::from_blocks(MatrixXd::Identity(3, 3), MatrixXd::Identity(1, 1), kxy));
    REQUIRE(s.size() == 3);
    CHECK(std::abs(s[0] - 0.4) < 1e-14);
    CHECK(s[1] == 0.0);
    CHECK(s[2] == 0.0);
  }
}

TEST_CASE("canonical correlations are invariant under invertible linear maps") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cov = random_cov(rng, 3, 2);
    MatrixXd a = random_matrix(rng, 3, 3) + 3.0 * MatrixXd::Identity(3, 3);
    MatrixXd b = random_matrix(rng, 2, 2) + 3.0 * MatrixXd::Identity(2, 2);
    const auto moved = JointGaussianCov::from_blocks(a * cov.kx * a.transpose(),
                                                     b * cov.ky * b.transpose(),
                                                     a * cov.kxy * b.transpose());
    const auto s1 = canonical_correlations(cov);
    const auto s2 = canonical_correlations(moved);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(std::abs(s1[i] - s2[i]) < 1e-8);
  }
}

TEST_CASE("spectra of random valid covariances stay within [0, 1]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    // Thin factors give near-singular joints, where correlations approach 1.
    const Eigen::Index dx = 1 + trial % 3, dy = 1 + (trial / 3) % 3;
    const MatrixXd f = random_matrix(rng, 1 + trial % 4, dx + dy);
    const auto cov = JointGaussianCov::from_joint(f.transpose() * f, dx);
    const auto s = canonical_correlations(validate_cov(cov));
    CHECK(s.size() == std::size_t(std::max(dx, dy)));
    for (double r : s.values()) {
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
    }
  }
}

TEST_CASE("wyner_ci_vector") {
  CHECK(std::abs(wyner_ci_vector(unit_pair(0.5), GammaBudget(0.1)).value - 0.094603059) < 1e-9);

  const MatrixXd i2 = MatrixXd::Identity(2, 2);
  CHECK(wyner_ci_vector(JointGaussianCov::from_blocks(i2, i2, MatrixXd::Zero(2, 2)),
                        GammaBudget(0.3))
            .value == 0.0);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cov = random_cov(rng, 2, 3);
    const auto r0 = wyner_ci_vector(cov, GammaBudget(0.0));
    double wyner = 0.0;
    for (double r : r0.spectrum.values()) wyner += c_of_rho(Correlation(r));
    CHECK(std::abs(r0.value - wyner) < 1e-10 * std::max(1.0, wyner));

    // An independent unit-variance coordinate appended to X changes nothing.
    const double gamma = 0.05 * trial;
    MatrixXd kx = MatrixXd::Identity(3, 3);
    kx.topLeftCorner(2, 2) = cov.kx;
    MatrixXd kxy = MatrixXd::Zero(3, 3);
    kxy.topRows(2) = cov.kxy;
    const auto padded = JointGaussianCov::from_blocks(kx, cov.ky, kxy);
    CHECK(std::abs(wyner_ci_vector(padded, GammaBudget(gamma)).value -
                   wyner_ci_vector(cov, GammaBudget(gamma)).value) < 1e-10);
  }
}

TEST_CASE("rank-deficient kx reduces to the equivalent smaller problem") {
  MatrixXd joint(3, 3);
  joint << 1.0, 1.0, 0.6,
           1.0, 1.0, 0.6,
           0.6, 0.6, 1.0;
  const auto cov = JointGaussianCov::from_joint(joint, 2);
  const auto r = wyner_ci_vector(validate_cov(cov), GammaBudget(0.1));
  CHECK(std::isfinite(r.value));
  CHECK(std::abs(r.value - wyner_ci_scalar(Correlation(0.6), GammaBudget(0.1))) < 1e-10);
}

TEST_CASE("a unit canonical correlation gives an infinite value") {
  const auto r = wyner_ci_vector(unit_pair(1.0), GammaBudget(0.5));
  CHECK(r.value == kInfinity);
}
