#include <doctest.h>

#include "helpers.hpp"
#include "se3conv/multiview.hpp"
#include "se3conv/oracle.hpp"

using namespace se3conv;

TEST_CASE("identity slice equals the plain network") {
  std::mt19937_64 rng(15);
  const auto cloud = testutil::random_cloud(rng, 5, 1.0);
  Eigen::MatrixXd values = Eigen::MatrixXd::Random(5, 1);
  ScalarStack stack;
  stack.relu = true;
  ScalarConvLayer layer;
  layer.kernels.push_back([](const Vec3& t) { return std::exp(-t.squaredNorm()) * (1.0 + t.x()); });
  layer.weights = Tensor3(2, 1, 1);
  layer.weights.v = {0.7, -1.1};
  layer.bias = {0.1, 0.2};
  stack.layers.push_back(layer);
  const Eigen::MatrixXd a = r3xi_slice(cloud, values, stack, Rotation());
  const Eigen::MatrixXd b = plain_cnn(cloud, values, stack);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-15);
  const Rotation r = testutil::random_rotation(rng);
  PointCloud rotated;
  for (const auto& x : cloud) rotated.push_back(r * x);
  const Eigen::MatrixXd c = plain_cnn(rotated, values, stack);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK((multiview_eval(cloud, values, stack, r, i) - c.row(i).transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}
