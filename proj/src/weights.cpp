#include "se3conv/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

namespace se3conv {

namespace {

void check_dims(int cin, int cout, const std::vector<int>& radial, int lmax_out) {
  if (cin < 1 || cout < 1) throw ShapeMismatch("channel counts must be positive");
  if (radial.empty()) throw ShapeMismatch("radial counts must cover degree 0");
  for (int r : radial) {
    if (r < 0) throw ShapeMismatch("negative radial count");
  }
  check_degree(static_cast<int>(radial.size()) - 1);
  check_degree(lmax_out);
}

}  // namespace

SE3Weights::SE3Weights(int in_channels, int out_channels, std::vector<int> radial_counts, int max_out_degree)
    : cin_(in_channels), cout_(out_channels), lmax_out_(max_out_degree), radial_(std::move(radial_counts)) {
  check_dims(cin_, cout_, radial_, lmax_out_);
  blocks_.resize(radial_.size());
  for (int lp = 0; lp <= max_kernel_degree(); ++lp) {
    for (int L = 0; L <= lmax_out_; ++L) {
      blocks_[lp].emplace_back((2 * L + 1) * cout_ * row_length(lp, L), 0.0);
    }
  }
  bias_.assign(cout_, 0.0);
}

std::size_t SE3Weights::row_length(int lp, int L) const {
  return static_cast<std::size_t>(cin_) * radial_[lp] * (2 * lp + 1) * (2 * L + 1);
}

std::vector<double>& SE3Weights::block(int lp, int L) {
  if (lp < 0 || lp > max_kernel_degree() || L < 0 || L > lmax_out_) throw IndexOutOfRange("se3 weight block out of range");
  return blocks_[lp][L];
}

const std::vector<double>& SE3Weights::block(int lp, int L) const {
  if (lp < 0 || lp > max_kernel_degree() || L < 0 || L > lmax_out_) throw IndexOutOfRange("se3 weight block out of range");
  return blocks_[lp][L];
}

std::size_t SE3Weights::offset(int lp, int L, int j, int d, int c, int r, int mp, int M) const {
  const std::size_t nL = 2 * L + 1, np = 2 * lp + 1;
  return ((((static_cast<std::size_t>(j) * cout_ + d) * cin_ + c) * radial_[lp] + r) * np + mp) * nL + M;
}

double& SE3Weights::at(int lp, int L, int j, int d, int c, int r, int mp, int M) {
  return blocks_[lp][L][offset(lp, L, j, d, c, r, mp, M)];
}

double SE3Weights::at(int lp, int L, int j, int d, int c, int r, int mp, int M) const {
  return blocks_[lp][L][offset(lp, L, j, d, c, r, mp, M)];
}

TFNWeights::TFNWeights(int in_channels, int out_channels, std::vector<int> radial_counts, int max_out_degree)
    : cin_(in_channels), cout_(out_channels), lmax_out_(max_out_degree), radial_(std::move(radial_counts)) {
  check_dims(cin_, cout_, radial_, lmax_out_);
  for (int L = 0; L <= lmax_out_; ++L) {
    for (int lp = 0; lp <= max_kernel_degree(); ++lp) {
      for (int l = std::abs(L - lp); l <= std::min(L + lp, kMaxDegree); ++l) {
        blocks_.emplace(Key{l, lp, L}, std::vector<double>((2 * L + 1) * cout_ * row_length(l, lp), 0.0));
      }
    }
  }
  bias_.assign(cout_, 0.0);
}

std::size_t TFNWeights::row_length(int l, int lp) const {
  return static_cast<std::size_t>(cin_) * radial_[lp] * (2 * l + 1);
}

bool TFNWeights::has_block(int l, int lp, int L) const { return blocks_.count(Key{l, lp, L}) != 0; }

std::vector<double>& TFNWeights::block(int l, int lp, int L) {
  check_triangle(l, lp, L);
  auto it = blocks_.find(Key{l, lp, L});
  if (it == blocks_.end()) throw IndexOutOfRange("tfn weight block outside the weight set");
  return it->second;
}

const std::vector<double>& TFNWeights::block(int l, int lp, int L) const {
  check_triangle(l, lp, L);
  auto it = blocks_.find(Key{l, lp, L});
  if (it == blocks_.end()) throw IndexOutOfRange("tfn weight block outside the weight set");
  return it->second;
}

std::size_t TFNWeights::offset(int l, int lp, int L, int j, int d, int c, int r, int m) const {
  (void)L;
  return (((static_cast<std::size_t>(j) * cout_ + d) * cin_ + c) * radial_[lp] + r) * (2 * l + 1) + m;
}

double& TFNWeights::at(int l, int lp, int L, int j, int d, int c, int r, int m) {
  return block(l, lp, L)[offset(l, lp, L, j, d, c, r, m)];
}

double TFNWeights::at(int l, int lp, int L, int j, int d, int c, int r, int m) const {
  return block(l, lp, L)[offset(l, lp, L, j, d, c, r, m)];
}

TFNWeights iota(const SE3Weights& w) {
  TFNWeights v(w.in_channels(), w.out_channels(), w.radial_counts(), w.max_out_degree());
  for (const auto& [key, _] : v.blocks()) {
    const auto [l, lp, L] = key;
    const auto q = cg_tensor_real(l, lp, L);
    const std::vector<double>& wb = w.block(lp, L);
    std::vector<double>& vb = v.block(l, lp, L);
    const int nl = 2 * l + 1, np = 2 * lp + 1, nL = 2 * L + 1;
    const std::size_t rows = static_cast<std::size_t>(nL) * w.out_channels() * w.in_channels() * w.radial_count(lp);
    // Both blocks share the [j][d][c][r] prefix.
    for (std::size_t row = 0; row < rows; ++row) {
      const double* wr = wb.data() + row * np * nL;
      double* vr = vb.data() + row * nl;
      for (int m = 0; m < nl; ++m) {
        double s = 0.0;
        for (int mp = 0; mp < np; ++mp) {
          for (int M = 0; M < nL; ++M) s += q->at(m, mp, M) * wr[mp * nL + M];
        }
        vr[m] = s;
      }
    }
  }
  v.bias() = w.bias();
  return v;
}

SE3Weights iota_inv(const TFNWeights& v) {
  SE3Weights w(v.in_channels(), v.out_channels(), v.radial_counts(), v.max_out_degree());
  for (const auto& [key, vb] : v.blocks()) {
    const auto [l, lp, L] = key;
    const auto q = cg_tensor_real(l, lp, L);
    std::vector<double>& wb = w.block(lp, L);
    const int nl = 2 * l + 1, np = 2 * lp + 1, nL = 2 * L + 1;
    const double scale = static_cast<double>(nl) / nL;
    const std::size_t rows = static_cast<std::size_t>(nL) * v.out_channels() * v.in_channels() * v.radial_count(lp);
    for (std::size_t row = 0; row < rows; ++row) {
      const double* vr = vb.data() + row * nl;
      double* wr = wb.data() + row * np * nL;
      for (int mp = 0; mp < np; ++mp) {
        for (int M = 0; M < nL; ++M) {
          double s = 0.0;
          for (int m = 0; m < nl; ++m) s += q->at_t(M, m, mp) * vr[m];
          wr[mp * nL + M] += scale * s;
        }
      }
    }
  }
  w.bias() = v.bias();
  return w;
}

namespace {

double vec_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ShapeMismatch("weight blocks differ in shape");
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

}  // namespace

double max_abs_diff(const SE3Weights& a, const SE3Weights& b) {
  if (a.in_channels() != b.in_channels() || a.out_channels() != b.out_channels() ||
      a.radial_counts() != b.radial_counts() || a.max_out_degree() != b.max_out_degree()) {
    throw ShapeMismatch("se3 weights differ in shape");
  }
  double e = vec_diff(a.bias(), b.bias());
  for (int lp = 0; lp <= a.max_kernel_degree(); ++lp) {
    for (int L = 0; L <= a.max_out_degree(); ++L) e = std::max(e, vec_diff(a.block(lp, L), b.block(lp, L)));
  }
  return e;
}

double max_abs_diff(const TFNWeights& a, const TFNWeights& b) {
  if (a.in_channels() != b.in_channels() || a.out_channels() != b.out_channels() ||
      a.radial_counts() != b.radial_counts() || a.max_out_degree() != b.max_out_degree()) {
    throw ShapeMismatch("tfn weights differ in shape");
  }
  double e = vec_diff(a.bias(), b.bias());
  for (const auto& [key, blk] : a.blocks()) e = std::max(e, vec_diff(blk, b.blocks().at(key)));
  return e;
}

}  // namespace se3conv
