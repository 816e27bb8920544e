#include <doctest.h>

#include "helpers.hpp"
#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

using namespace se3conv;

// Exact symbolic values, frozen.
TEST_CASE("reference coefficients") {
  CHECK(cg_scalar({1, 1, 0, 1, -1, 0}) == doctest::Approx(0.5773502691896257).epsilon(1e-14));
  CHECK(cg_scalar({2, 1, 2, 1, 0, 1}) == doctest::Approx(0.408248290463863).epsilon(1e-14));
  CHECK(cg_scalar({3, 2, 4, -1, 2, 1}) == doctest::Approx(-0.5345224838248488).epsilon(1e-14));
  CHECK(cg_scalar({1, 1, 2, 0, 0, 0}) == doctest::Approx(0.816496580927726).epsilon(1e-14));
  CHECK(cg_scalar({2, 2, 3, -2, 1, -1}) == doctest::Approx(-0.5477225575051661).epsilon(1e-14));
  CHECK(cg_scalar({3, 3, 5, 3, -2, 1}) == doctest::Approx(0.2439750182371333).epsilon(1e-14));
  CHECK(cg_scalar({1, 2, 1, 1, -1, 0}) == doctest::Approx(0.5477225575051661).epsilon(1e-14));
  CHECK(cg_scalar({1, 1, 1, 0, 0, 0}) == 0.0);
  CHECK(cg_scalar({1, 1, 2, 1, 0, 0}) == 0.0);
}

TEST_CASE("triangle rule") {
  CHECK(triangle_ok(1, 2, 3));
  CHECK_FALSE(triangle_ok(1, 1, 3));
  CHECK_THROWS_AS(cg_tensor_real(1, 1, 3), TriangleViolation);
  CHECK_THROWS_AS(cg_scalar({0, 0, 1, 0, 0, 0}), TriangleViolation);
  CHECK_THROWS_AS(cg_scalar({1, 1, 1, 2, 0, 0}), IndexOutOfRange);
}

TEST_CASE("real tensors are orthonormal and intertwine") {
  std::mt19937_64 rng(3);
  const Rotation r = testutil::random_rotation(rng);
  for (int l = 0; l <= 3; ++l) {
    for (int lp = 0; lp <= 3; ++lp) {
      const int n = (2 * l + 1) * (2 * lp + 1);
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
      Eigen::MatrixXd kron(n, n);
      const auto a = wigner_D_real(l, r), b = wigner_D_real(lp, r);
      for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) kron.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
      }
      for (int L = std::abs(l - lp); L <= l + lp; ++L) {
        const auto& q = cg_tensor_real(l, lp, L)->flat();
        CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(2 * L + 1, 2 * L + 1)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((wigner_D_real(L, r) * q.transpose() - q.transpose() * kron).cwiseAbs().maxCoeff() < 1e-10);
        sum += q * q.transpose();
      }
      CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("cache returns the same tensor") {
  const auto a = cg_tensor_real(2, 1, 2);
  const auto b = cg_tensor_real(2, 1, 2);
  CHECK(a.get() == b.get());
  CHECK((a->flat() - build_cg_tensor_real(2, 1, 2).flat()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("projection of an outer product of harmonics") {
  // Q^{L,(l,l')} (Y_l(x) Y_l'(x)^T) is steerable of degree L.
  std::mt19937_64 rng(4);
  const Vec3 x = testutil::random_vec(rng);
  const Rotation r = testutil::random_rotation(rng);
  const Eigen::MatrixXd a = eval_real_spherical_harmonics(2, x) * eval_real_spherical_harmonics(1, x).transpose();
  const Eigen::MatrixXd ar =
      eval_real_spherical_harmonics(2, r * x) * eval_real_spherical_harmonics(1, r * x).transpose();
  for (int L = 1; L <= 3; ++L) {
    CHECK((project_composite(L, 2, 1, ar) - wigner_D_real(L, r) * project_composite(L, 2, 1, a)).cwiseAbs().maxCoeff() < 1e-12);
  }
}
