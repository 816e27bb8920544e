#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "se3conv/rotation.hpp"

namespace se3conv {

using PointCloud = std::vector<Vec3>;

// Throws ShapeMismatch on empty clouds or non-finite coordinates.
void validate_cloud(const PointCloud& cloud);

// Wigner coefficient matrices f^l(x) per point. Storage is degree-major,
// then point, matrix row, matrix column, channel.
class FeatureField {
 public:
  FeatureField() = default;
  FeatureField(std::size_t n_points, std::vector<int> channels);
  static FeatureField uniform(std::size_t n_points, int max_degree, int channels);

  std::size_t num_points() const { return n_; }
  int max_degree() const { return static_cast<int>(channels_.size()) - 1; }
  int channels(int l) const { return channels_.at(l); }
  const std::vector<int>& channel_counts() const { return channels_; }
  // Throws ShapeMismatch unless every degree has the same channel count.
  int uniform_channels() const;

  // row and col are positions 0..2l (order + l).
  double& at(int l, std::size_t p, int row, int col, int c) { return blocks_[l][index(l, p, row, col, c)]; }
  double at(int l, std::size_t p, int row, int col, int c) const { return blocks_[l][index(l, p, row, col, c)]; }

  Eigen::MatrixXd matrix(int l, std::size_t p, int c) const;
  void set_matrix(int l, std::size_t p, int c, const Eigen::MatrixXd& m);

  std::vector<double>& data(int l) { return blocks_.at(l); }
  const std::vector<double>& data(int l) const { return blocks_.at(l); }

  FeatureField& operator+=(const FeatureField& o);
  FeatureField& operator*=(double s);

 private:
  std::size_t index(int l, std::size_t p, int row, int col, int c) const {
    const std::size_t n = 2 * l + 1;
    return ((p * n + row) * n + col) * channels_[l] + c;
  }

  std::size_t n_ = 0;
  std::vector<int> channels_;
  std::vector<std::vector<double>> blocks_;
};

// (R.f)^l = D^l(R) f^l at every point (values are not moved between points).
FeatureField rotate_coefficients(const FeatureField& f, const Rotation& r);

// Max absolute entry difference; throws ShapeMismatch on different shapes.
double max_abs_diff(const FeatureField& a, const FeatureField& b);
double max_abs(const FeatureField& a);

// Per point, degree, channel: a (2l+1)-vector.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::size_t n_points, std::vector<int> channels);

  std::size_t num_points() const { return n_; }
  int max_degree() const { return static_cast<int>(channels_.size()) - 1; }
  int channels(int l) const { return channels_.at(l); }
  const std::vector<int>& channel_counts() const { return channels_; }

  double& at(int l, std::size_t p, int m, int c) { return blocks_[l][(p * (2 * l + 1) + m) * channels_[l] + c]; }
  double at(int l, std::size_t p, int m, int c) const { return blocks_[l][(p * (2 * l + 1) + m) * channels_[l] + c]; }

 private:
  std::size_t n_ = 0;
  std::vector<int> channels_;
  std::vector<std::vector<double>> blocks_;
};

}  // namespace se3conv
