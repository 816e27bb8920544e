#pragma once

#include <vector>

#include <Eigen/Dense>

#include "se3conv/conv.hpp"

namespace se3conv {

// One R3 x I layer on scalar channels: out_i = sum_{k,c} A(i,k,c) sum_q
// f_c(X_q) kappa_k(H^-1 (x - X_q)) + b_i, with H fixed per slice.
struct ScalarConvLayer {
  std::vector<ScalarKernel> kernels;
  Tensor3 weights;  // [out][kernel][in]
  std::vector<double> bias;
};

struct ScalarStack {
  std::vector<ScalarConvLayer> layers;
  bool relu = true;  // applied between layers, not after the last
};

// The stack applied to the lifted field f(x, H) = f(x) on the slice H.
// values: N x C; returns N x out.
Eigen::MatrixXd r3xi_slice(const PointCloud& cloud, const Eigen::MatrixXd& values, const ScalarStack& stack,
                           const Rotation& h);

// CNN_{R3 x I}(f)(R^-1 x, R^-1) at x = R X_i, i.e. the slice H = R^-1 read at
// X_i. Equals the plain CNN run on the rotated cloud, read at point i.
Eigen::VectorXd multiview_eval(const PointCloud& cloud, const Eigen::MatrixXd& values, const ScalarStack& stack,
                               const Rotation& r, std::size_t index);

}  // namespace se3conv
