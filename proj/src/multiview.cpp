#include "se3conv/multiview.hpp"

#include <algorithm>

#include "se3conv/errors.hpp"

namespace se3conv {

Eigen::MatrixXd r3xi_slice(const PointCloud& cloud, const Eigen::MatrixXd& values, const ScalarStack& stack,
                           const Rotation& h) {
  validate_cloud(cloud);
  if (static_cast<std::size_t>(values.rows()) != cloud.size()) throw SizeMismatch("values must have one row per point");
  const Mat3 hinv = h.matrix().transpose();
  Eigen::MatrixXd x = values;
  for (std::size_t li = 0; li < stack.layers.size(); ++li) {
    const ScalarConvLayer& layer = stack.layers[li];
    const int K = static_cast<int>(layer.kernels.size());
    if (layer.weights.d1 != K || layer.weights.d2 != x.cols() || static_cast<int>(layer.bias.size()) != layer.weights.d0) {
      throw ShapeMismatch("scalar layer weights do not match kernels and channels");
    }
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(x.rows(), layer.weights.d0);
    for (std::size_t p = 0; p < cloud.size(); ++p) {
      // conv[k][c] = sum_q x(q, c) kappa_k(H^-1 (X_p - X_q))
      Eigen::MatrixXd conv = Eigen::MatrixXd::Zero(K, x.cols());
      for (std::size_t q = 0; q < cloud.size(); ++q) {
        const Vec3 t = hinv * (cloud[p] - cloud[q]);
        for (int k = 0; k < K; ++k) conv.row(k) += layer.kernels[k](t) * x.row(q);
      }
      for (int i = 0; i < layer.weights.d0; ++i) {
        double s = layer.bias[i];
        for (int k = 0; k < K; ++k) {
          for (int c = 0; c < x.cols(); ++c) s += layer.weights(i, k, c) * conv(k, c);
        }
        y(p, i) = s;
      }
    }
    if (stack.relu && li + 1 < stack.layers.size()) y = y.cwiseMax(0.0);
    x = std::move(y);
  }
  return x;
}

Eigen::VectorXd multiview_eval(const PointCloud& cloud, const Eigen::MatrixXd& values, const ScalarStack& stack,
                               const Rotation& r, std::size_t index) {
  if (index >= cloud.size()) throw IndexOutOfRange("point index outside the cloud");
  return r3xi_slice(cloud, values, stack, r.inverse()).row(index).transpose();
}

}  // namespace se3conv
