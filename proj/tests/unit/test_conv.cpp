#include <doctest.h>

#include "helpers.hpp"
#include "se3conv/conv.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/oracle.hpp"

using namespace se3conv;

namespace {

TFNWeights random_tfn(std::mt19937_64& rng, int cin, int cout, const std::vector<int>& radial, int lmax_out) {
  std::normal_distribution<double> n;
  TFNWeights v(cin, cout, radial, lmax_out);
  for (const auto& [key, _] : v.blocks()) {
    const auto [l, lp, L] = key;
    for (double& x : v.block(l, lp, L)) x = n(rng);
  }
  for (double& b : v.bias()) b = n(rng);
  return v;
}

}  // namespace

TEST_CASE("zero field gives bias only") {
  std::mt19937_64 rng(6);
  const auto cloud = testutil::random_cloud(rng, 4);
  const auto spec = gaussian_basis({2, 1}, 1.0);
  auto v = random_tfn(rng, 2, 3, spec.radial_counts(), 2);
  const FeatureField zero = FeatureField::uniform(4, 1, 2);
  const FeatureField out = tfn_layer(cloud, zero, v, spec);
  CHECK(out.max_degree() == 2);
  for (std::size_t p = 0; p < 4; ++p) CHECK(out.at(0, p, 0, 0, 1) == v.bias()[1]);
  v.bias().assign(3, 0.0);
  CHECK(max_abs(tfn_layer(cloud, zero, v, spec)) == 0.0);
}

TEST_CASE("truncation and exclude_self") {
  std::mt19937_64 rng(7);
  const auto cloud = testutil::random_cloud(rng, 5);
  const auto f = testutil::random_field(rng, 5, 2, 1);
  const auto spec = zernike_basis({1, 1}, 1.0);
  const auto v = random_tfn(rng, 1, 1, spec.radial_counts(), 3);
  const FeatureField full = tfn_layer(cloud, f, v, spec);
  LayerOptions o;
  o.truncate = 1;
  const FeatureField cut = tfn_layer(cloud, f, v, spec, o);
  CHECK(cut.max_degree() == 1);
  for (int l = 0; l <= 1; ++l) {
    for (std::size_t i = 0; i < cut.data(l).size(); ++i) CHECK(cut.data(l)[i] == full.data(l)[i]);
  }
  // A single point with exclude_self only keeps the bias.
  LayerOptions ex;
  ex.exclude_self = true;
  const FeatureField one = tfn_layer({Vec3::Zero()}, testutil::random_field(rng, 1, 1, 1), v, spec, ex);
  CHECK(one.at(0, 0, 0, 0, 0) == v.bias()[0]);
}

TEST_CASE("shape errors") {
  std::mt19937_64 rng(8);
  const auto cloud = testutil::random_cloud(rng, 3);
  const auto spec = gaussian_basis({1}, 1.0);
  const auto v = random_tfn(rng, 2, 1, spec.radial_counts(), 1);
  CHECK_THROWS_AS(tfn_layer(cloud, testutil::random_field(rng, 3, 1, 1), v, spec), ShapeMismatch);
  CHECK_THROWS_AS(tfn_layer(cloud, testutil::random_field(rng, 4, 1, 2), v, spec), ShapeMismatch);
  CHECK_THROWS_AS(tfn_layer(cloud, testutil::random_field(rng, 3, 1, 2), v, gaussian_basis({2}, 1.0)), ShapeMismatch);
  FeatureField mixed(3, {1, 2});
  CHECK_THROWS_AS(mixed.uniform_channels(), ShapeMismatch);
  CHECK_THROWS_AS(so3_component(testutil::random_field(rng, 1, 2, 1), {Eigen::MatrixXd::Ones(1, 1)}), BandLimitMismatch);
}

TEST_CASE("equivalence through iota on a small instance") {
  std::mt19937_64 rng(9);
  const auto cloud = testutil::random_cloud(rng, 4);
  const auto f = testutil::random_field(rng, 4, 2, 2);
  const auto spec = gaussian_basis({2, 1, 1}, 1.0);
  const auto v = random_tfn(rng, 2, 2, spec.radial_counts(), 3);
  CHECK(max_abs_diff(tfn_layer(cloud, f, v, spec), se3_conv_layer(cloud, f, iota_inv(v), spec)) < 1e-11);
  CHECK(max_abs_diff(iota(iota_inv(v)), v) < 1e-12);
}

TEST_CASE("layer is translation invariant and rotation equivariant") {
  std::mt19937_64 rng(10);
  const auto cloud = testutil::random_cloud(rng, 6);
  const auto f = testutil::random_field(rng, 6, 1, 1);
  const auto spec = zernike_basis({2, 1}, 1.0);
  const auto v = random_tfn(rng, 1, 2, spec.radial_counts(), 2);
  const LayerClosure layer = [&](const PointCloud& c, const FeatureField& x) { return tfn_layer(c, x, v, spec); };
  CHECK(equivariance_check("tfn", layer, cloud, f, 5, 1e-10, 1).pass);
}
