#pragma once

#include <map>
#include <tuple>
#include <vector>

namespace se3conv {

// W^{l',L}_{jd,crm'M}. Block (l', L) is stored row-major over
// [j][d][c][r][m'][M]; j, m', M are positions (order + degree).
class SE3Weights {
 public:
  SE3Weights() = default;
  SE3Weights(int in_channels, int out_channels, std::vector<int> radial_counts, int max_out_degree);

  int in_channels() const { return cin_; }
  int out_channels() const { return cout_; }
  int max_kernel_degree() const { return static_cast<int>(radial_.size()) - 1; }
  int max_out_degree() const { return lmax_out_; }
  int radial_count(int lp) const { return radial_.at(lp); }
  const std::vector<int>& radial_counts() const { return radial_; }

  std::vector<double>& block(int lp, int L);
  const std::vector<double>& block(int lp, int L) const;
  std::size_t row_length(int lp, int L) const;

  double& at(int lp, int L, int j, int d, int c, int r, int mp, int M);
  double at(int lp, int L, int j, int d, int c, int r, int mp, int M) const;

  std::vector<double>& bias() { return bias_; }
  const std::vector<double>& bias() const { return bias_; }

 private:
  std::size_t offset(int lp, int L, int j, int d, int c, int r, int mp, int M) const;

  int cin_ = 0, cout_ = 0, lmax_out_ = 0;
  std::vector<int> radial_;
  std::vector<std::vector<std::vector<double>>> blocks_;  // [l'][L]
  std::vector<double> bias_;
};

// V^{(l,l'),L}_{jd,crm}. Block (l, l', L) exists for every triangle-valid
// triple with l' <= max kernel degree and L <= max out degree; stored
// row-major over [j][d][c][r][m]. The bias acts on L = 0 only.
class TFNWeights {
 public:
  using Key = std::tuple<int, int, int>;

  TFNWeights() = default;
  TFNWeights(int in_channels, int out_channels, std::vector<int> radial_counts, int max_out_degree);

  int in_channels() const { return cin_; }
  int out_channels() const { return cout_; }
  int max_kernel_degree() const { return static_cast<int>(radial_.size()) - 1; }
  int max_out_degree() const { return lmax_out_; }
  int radial_count(int lp) const { return radial_.at(lp); }
  const std::vector<int>& radial_counts() const { return radial_; }

  bool has_block(int l, int lp, int L) const;
  // Throws TriangleViolation for invalid triples, IndexOutOfRange for
  // degrees outside the weight set.
  std::vector<double>& block(int l, int lp, int L);
  const std::vector<double>& block(int l, int lp, int L) const;
  std::size_t row_length(int l, int lp) const;
  const std::map<Key, std::vector<double>>& blocks() const { return blocks_; }

  double& at(int l, int lp, int L, int j, int d, int c, int r, int m);
  double at(int l, int lp, int L, int j, int d, int c, int r, int m) const;

  std::vector<double>& bias() { return bias_; }
  const std::vector<double>& bias() const { return bias_; }

 private:
  std::size_t offset(int l, int lp, int L, int j, int d, int c, int r, int m) const;

  int cin_ = 0, cout_ = 0, lmax_out_ = 0;
  std::vector<int> radial_;
  std::map<Key, std::vector<double>> blocks_;
  std::vector<double> bias_;
};

SE3Weights iota_inv(const TFNWeights& v);
TFNWeights iota(const SE3Weights& w);

double max_abs_diff(const SE3Weights& a, const SE3Weights& b);
double max_abs_diff(const TFNWeights& a, const TFNWeights& b);

}  // namespace se3conv
