#include <doctest.h>

#include "helpers.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/so3_sampling.hpp"
#include "se3conv/wigner_transform.hpp"

using namespace se3conv;

TEST_CASE("constant field is a constant signal and survives ReLU") {
  FeatureField f = FeatureField::uniform(1, 2, 1);
  f.at(0, 0, 0, 0, 0) = 1.5;
  const auto grid = exact_euler_grid(3);
  const auto s = inverse_wt(f, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) CHECK(s.at(0, k, 0) == doctest::Approx(1.5));
  CHECK(max_abs_diff(relu_activation(f, grid), f) < 1e-13);
  CHECK(max_abs_diff(relu_activation(f, icosahedral_group()), f) < 1e-13);
}

TEST_CASE("zero maps to zero") {
  const FeatureField z = FeatureField::uniform(2, 2, 2);
  CHECK(max_abs(relu_activation(z, icosahedral_group())) == 0.0);
}

TEST_CASE("inverse transform is the trace pairing") {
  std::mt19937_64 rng(11);
  const Rotation r0 = testutil::random_rotation(rng);
  FeatureField f = FeatureField::uniform(1, 1, 1);
  f.set_matrix(1, 0, 0, wigner_D_real(1, r0).transpose());
  const auto set = fps_rotations(8, 0);
  const auto s = inverse_wt(f, set);
  for (std::size_t k = 0; k < set.size(); ++k) {
    const double tr = (wigner_D_real(1, r0).transpose() * wigner_D_real(1, set.rotations[k]).transpose()).trace();
    CHECK(s.at(0, k, 0) == doctest::Approx(tr).epsilon(1e-12));
  }
}

TEST_CASE("round trip on an exact grid and lossy on the group") {
  std::mt19937_64 rng(12);
  const auto f = testutil::random_field(rng, 2, 3, 1);
  CHECK(max_abs_diff(forward_wt(inverse_wt(f, exact_euler_grid(7)), 3), f) < 1e-9);
  const auto err = reconstruction_error(f, icosahedral_group());
  REQUIRE(err.size() == 4);
  CHECK(err[0] < 1e-12);
  CHECK(err[3] > 1e-3);
}

TEST_CASE("group equivariance of WT-ReLU") {
  std::mt19937_64 rng(13);
  const auto f = testutil::random_field(rng, 1, 3, 2);
  const auto g = icosahedral_group();
  const auto base = relu_activation(f, g);
  for (std::size_t k = 0; k < g.size(); k += 7) {
    CHECK(max_abs_diff(relu_activation(rotate_coefficients(f, g.rotations[k]), g), rotate_coefficients(base, g.rotations[k])) <
          1e-10);
  }
}
