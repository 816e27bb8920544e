#include "se3conv/feature_field.hpp"

#include <cmath>
#include <string>

#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

namespace se3conv {

void validate_cloud(const PointCloud& cloud) {
  if (cloud.empty()) throw ShapeMismatch("point cloud is empty");
  for (const auto& x : cloud) {
    if (!x.allFinite()) throw ShapeMismatch("point cloud has non-finite coordinates");
  }
}

FeatureField::FeatureField(std::size_t n_points, std::vector<int> channels)
    : n_(n_points), channels_(std::move(channels)) {
  if (channels_.empty()) throw ShapeMismatch("feature field needs at least degree 0");
  check_degree(max_degree());
  for (std::size_t l = 0; l < channels_.size(); ++l) {
    if (channels_[l] < 0) throw ShapeMismatch("negative channel count");
    const std::size_t n = 2 * l + 1;
    blocks_.emplace_back(n_ * n * n * channels_[l], 0.0);
  }
}

FeatureField FeatureField::uniform(std::size_t n_points, int max_degree, int channels) {
  return FeatureField(n_points, std::vector<int>(max_degree + 1, channels));
}

int FeatureField::uniform_channels() const {
  for (int c : channels_) {
    if (c != channels_[0]) throw ShapeMismatch("layers need the same channel count at every degree");
  }
  return channels_[0];
}

Eigen::MatrixXd FeatureField::matrix(int l, std::size_t p, int c) const {
  const int n = 2 * l + 1;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = at(l, p, i, j, c);
  }
  return m;
}

void FeatureField::set_matrix(int l, std::size_t p, int c, const Eigen::MatrixXd& m) {
  const int n = 2 * l + 1;
  if (m.rows() != n || m.cols() != n) throw ShapeMismatch("coefficient matrix must be (2l+1) x (2l+1)");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(l, p, i, j, c) = m(i, j);
  }
}

FeatureField& FeatureField::operator+=(const FeatureField& o) {
  if (o.n_ != n_ || o.channels_ != channels_) throw ShapeMismatch("feature fields differ in shape");
  for (std::size_t l = 0; l < blocks_.size(); ++l) {
    for (std::size_t i = 0; i < blocks_[l].size(); ++i) blocks_[l][i] += o.blocks_[l][i];
  }
  return *this;
}

FeatureField& FeatureField::operator*=(double s) {
  for (auto& b : blocks_) {
    for (auto& v : b) v *= s;
  }
  return *this;
}

FeatureField rotate_coefficients(const FeatureField& f, const Rotation& r) {
  FeatureField out = f;
  const auto d = wigner_D_real_all(f.max_degree(), r);
  for (int l = 0; l <= f.max_degree(); ++l) {
    for (std::size_t p = 0; p < f.num_points(); ++p) {
      for (int c = 0; c < f.channels(l); ++c) out.set_matrix(l, p, c, d[l] * f.matrix(l, p, c));
    }
  }
  return out;
}

double max_abs_diff(const FeatureField& a, const FeatureField& b) {
  if (a.num_points() != b.num_points() || a.channel_counts() != b.channel_counts()) {
    throw ShapeMismatch("feature fields differ in shape");
  }
  double e = 0.0;
  for (int l = 0; l <= a.max_degree(); ++l) {
    const auto& x = a.data(l);
    const auto& y = b.data(l);
    for (std::size_t i = 0; i < x.size(); ++i) e = std::max(e, std::abs(x[i] - y[i]));
  }
  return e;
}

double max_abs(const FeatureField& a) {
  double e = 0.0;
  for (int l = 0; l <= a.max_degree(); ++l) {
    for (double v : a.data(l)) e = std::max(e, std::abs(v));
  }
  return e;
}

VectorField::VectorField(std::size_t n_points, std::vector<int> channels)
    : n_(n_points), channels_(std::move(channels)) {
  if (channels_.empty()) throw ShapeMismatch("vector field needs at least degree 0");
  for (std::size_t l = 0; l < channels_.size(); ++l) blocks_.emplace_back(n_ * (2 * l + 1) * channels_[l], 0.0);
}

}  // namespace se3conv
