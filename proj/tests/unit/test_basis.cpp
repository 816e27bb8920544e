#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/steerable_basis.hpp"

using namespace se3conv;

TEST_CASE("zernike radial coefficients") {
  const auto c0 = zernike_radial_coeffs(0, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == doctest::Approx(1.0));
  const auto c2 = zernike_radial_coeffs(2, 0);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == doctest::Approx(-2.2912878474779204).epsilon(1e-14));
  CHECK(c2[1] == doctest::Approx(3.8188130791298667).epsilon(1e-14));
  CHECK_THROWS_AS(zernike_radial_coeffs(3, 0), BadZernikeIndex);
  CHECK_THROWS_AS(zernike_radial_coeffs(1, 2), BadZernikeIndex);
}

TEST_CASE("gaussian shell placement and origin values") {
  const auto spec = gaussian_basis({3, 2}, 2.0);
  CHECK(spec.profiles[0][0].rho == doctest::Approx(0.0));
  CHECK(spec.profiles[0][2].rho == doctest::Approx(2.0));
  CHECK(spec.profiles[0][1].sigma == doctest::Approx(1.0));
  const auto single = gaussian_basis({1}, 1.0);
  CHECK(single.profiles[0][0].sigma == doctest::Approx(0.5));
  // Degree 0 keeps its value at the origin, higher degrees vanish.
  CHECK(eval_kernel(spec, 0, 0, Vec3::Zero())[0] == doctest::Approx(0.28209479177387814));
  CHECK(eval_kernel(spec, 1, 0, Vec3::Zero()).cwiseAbs().maxCoeff() == 0.0);
  // Zero outside the support.
  CHECK(eval_kernel(spec, 0, 1, Vec3(2.5, 0, 0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kernel steerability") {
  std::mt19937_64 rng(5);
  for (const auto& spec : {gaussian_basis({2, 2, 2}, 1.0), zernike_basis({2, 2, 2}, 1.0)}) {
    for (int t = 0; t < 10; ++t) {
      const Rotation r = testutil::random_rotation(rng);
      const Vec3 x = testutil::random_vec(rng, 0.3);
      for (int l = 0; l <= 2; ++l) {
        for (int k = 0; k < 2; ++k) {
          CHECK((eval_kernel(spec, l, k, r * x) - wigner_D_real(l, r) * eval_kernel(spec, l, k, x)).cwiseAbs().maxCoeff() <
                1e-12);
        }
      }
    }
  }
}

TEST_CASE("basis spec validation") {
  auto spec = zernike_basis({1, 1}, 1.0);
  CHECK_NOTHROW(spec.validate());
  CHECK_THROWS_AS(eval_kernel(spec, 2, 0, Vec3(0.1, 0, 0)), IndexOutOfRange);
  CHECK_THROWS_AS(eval_kernel(spec, 0, 1, Vec3(0.1, 0, 0)), IndexOutOfRange);
  spec.profiles[1][0].n = 2;
  CHECK_THROWS(spec.validate());
  CHECK(spec.radial_counts() == std::vector<int>{1, 1});
}
