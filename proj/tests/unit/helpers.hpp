#pragma once

#include <random>

#include <Eigen/Geometry>

#include "se3conv/feature_field.hpp"
#include "se3conv/rotation.hpp"

namespace testutil {

inline se3conv::Rotation random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  return se3conv::Rotation::from_matrix(q.toRotationMatrix());
}

inline se3conv::Vec3 random_vec(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n;
  return scale * se3conv::Vec3(n(rng), n(rng), n(rng));
}

inline se3conv::FeatureField random_field(std::mt19937_64& rng, std::size_t n, int lmax, int c) {
  std::normal_distribution<double> nd;
  auto f = se3conv::FeatureField::uniform(n, lmax, c);
  for (int l = 0; l <= lmax; ++l) {
    for (double& v : f.data(l)) v = nd(rng);
  }
  return f;
}

inline se3conv::PointCloud random_cloud(std::mt19937_64& rng, std::size_t n, double scale = 0.3) {
  se3conv::PointCloud c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_vec(rng, scale));
  return c;
}

}  // namespace testutil
