#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

using namespace se3conv;

TEST_CASE("degree 0 harmonic is the constant 1/(2 sqrt(pi))") {
  const auto y = eval_real_spherical_harmonics(0, Vec3(0, 0, 1));
  CHECK(y.size() == 1);
  CHECK(y[0] == doctest::Approx(0.28209479177387814).epsilon(1e-15));
}

TEST_CASE("degree 1 harmonics are the scaled coordinates") {
  const double s = std::sqrt(3.0 / (4.0 * std::numbers::pi));
  const Vec3 x(0.3, -0.5, 0.7);
  const auto y = eval_real_spherical_harmonics(1, x);
  // order -1 ~ y, 0 ~ z, 1 ~ x
  CHECK(y[0] == doctest::Approx(s * x.y()).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(s * x.z()).epsilon(1e-14));
  CHECK(y[2] == doctest::Approx(s * x.x()).epsilon(1e-14));
}

TEST_CASE("small d for l = 1 matches the standard table") {
  const double b = 0.83;
  const auto d = wigner_small_d(1, b);
  CHECK(d(mi(1, 1), mi(1, 1)) == doctest::Approx((1 + std::cos(b)) / 2).epsilon(1e-14));
  CHECK(d(mi(1, 1), mi(1, 0)) == doctest::Approx(-std::sin(b) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(d(mi(1, 1), mi(1, -1)) == doctest::Approx((1 - std::cos(b)) / 2).epsilon(1e-14));
  CHECK(d(mi(1, 0), mi(1, 0)) == doctest::Approx(std::cos(b)).epsilon(1e-14));
}

TEST_CASE("transition matrices are unitary") {
  for (int l = 0; l <= 6; ++l) {
    const auto c = transition_matrix(l);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(2 * l + 1, 2 * l + 1);
    CHECK((c * c.adjoint() - eye).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("steerability and representation property") {
  std::mt19937_64 rng(2);
  for (int l = 0; l <= 6; ++l) {
    for (int t = 0; t < 10; ++t) {
      const Rotation a = testutil::random_rotation(rng), b = testutil::random_rotation(rng);
      const Vec3 x = testutil::random_vec(rng);
      CHECK((eval_real_spherical_harmonics(l, a * x) - wigner_D_real(l, a) * eval_real_spherical_harmonics(l, x))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
      CHECK((wigner_D_real(l, a * b) - wigner_D_real(l, a) * wigner_D_real(l, b)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("real Wigner blocks at the identity and about z") {
  for (int l = 0; l <= 4; ++l) {
    CHECK((wigner_D_real(l, Rotation()) - Eigen::MatrixXd::Identity(2 * l + 1, 2 * l + 1)).cwiseAbs().maxCoeff() < 1e-14);
  }
  // About z, the order +-m pair rotates by angle m.
  const auto d = wigner_D_real(2, Rotation::about_z(0.4));
  CHECK(std::abs(d(mi(2, 0), mi(2, 0)) - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(d(mi(2, 2), mi(2, 2))) - std::cos(0.8)) < 1e-14);
}

TEST_CASE("degree range is checked") {
  CHECK_THROWS_AS(eval_real_spherical_harmonics(17, Vec3(1, 0, 0)), IndexOutOfRange);
  CHECK_THROWS_AS(wigner_D_real(-1, Rotation()), IndexOutOfRange);
  CHECK_NOTHROW(wigner_D_real(16, Rotation::about_y(0.3)));
}

TEST_CASE("harmonics are homogeneous of degree l") {
  const Vec3 x(0.2, 0.4, -0.1);
  for (int l = 0; l <= 5; ++l) {
    CHECK((eval_real_spherical_harmonics(l, 3.0 * x) - std::pow(3.0, l) * eval_real_spherical_harmonics(l, x))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  CHECK(eval_real_spherical_harmonics(2, Vec3::Zero()).cwiseAbs().maxCoeff() == 0.0);
}
