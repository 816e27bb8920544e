#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "se3conv/feature_field.hpp"
#include "se3conv/steerable_basis.hpp"
#include "se3conv/tensor.hpp"
#include "se3conv/weights.hpp"

namespace se3conv {

using ScalarKernel = std::function<double(const Vec3&)>;

struct LayerOptions {
  std::optional<int> truncate;  // keep output degrees <= truncate
  bool exclude_self = false;    // drop the j = i term of point sums
};

// out_i = sum_j f_j kappa(X_i - X_j)
std::vector<double> pointcloud_conv(const PointCloud& cloud, const std::vector<double>& f,
                                    const ScalarKernel& kappa);

// Raw composites f^l(X_j) (x) kappa^{l'}_r(X_i - X_j) summed over j.
class CompositeArray {
 public:
  CompositeArray(std::size_t n_points, int max_degree, const std::vector<int>& radial_counts, int channels);

  std::size_t num_points() const { return n_; }
  int max_degree() const { return lmax_; }
  int max_kernel_degree() const { return static_cast<int>(radial_.size()) - 1; }
  int radial_count(int lp) const { return radial_[lp]; }
  int channels() const { return c_; }

  // a: matrix row of f^l, m: matrix column of f^l, b: kernel order; positions.
  double& at(int l, int lp, int r, std::size_t p, int a, int m, int b, int c) {
    return blocks_[slot(l, lp, r)][index(l, lp, p, a, m, b, c)];
  }
  double at(int l, int lp, int r, std::size_t p, int a, int m, int b, int c) const {
    return blocks_[slot(l, lp, r)][index(l, lp, p, a, m, b, c)];
  }

 private:
  std::size_t slot(int l, int lp, int r) const { return offsets_[l * radial_.size() + lp] + r; }
  std::size_t index(int l, int lp, std::size_t p, int a, int m, int b, int c) const {
    const std::size_t nl = 2 * l + 1, np = 2 * lp + 1;
    return (((p * nl + a) * nl + m) * np + b) * c_ + c;
  }

  std::size_t n_;
  int lmax_;
  std::vector<int> radial_;
  int c_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<double>> blocks_;
};

CompositeArray steerable_feature_conv(const PointCloud& cloud, const FeatureField& field,
                                      const KernelBasisSpec& spec, bool exclude_self = false);

// Output degrees 0..lmax + l'max (optionally truncated); D channels each.
FeatureField tfn_layer(const PointCloud& cloud, const FeatureField& field, const TFNWeights& v,
                       const KernelBasisSpec& spec, const LayerOptions& opts = {});
FeatureField se3_conv_layer(const PointCloud& cloud, const FeatureField& field, const SE3Weights& w,
                            const KernelBasisSpec& spec, const LayerOptions& opts = {});

// f^l theta^l per point and channel. theta holds Haar moments
// int theta(R) D^l(R) dmu, one block per degree 0..lmax.
FeatureField so3_component(const FeatureField& field, const std::vector<Eigen::MatrixXd>& theta);

// g^L = sum_l Q^{L,(l,l')} (f^l * kappa^{l'}_r) Q^{(l,l'),L}_{:,m',:}; output
// degrees 0..lmax + l', same channels. mp is a position.
FeatureField r3_component(const PointCloud& cloud, const FeatureField& field, const KernelBasisSpec& spec,
                          int lp, int r, int mp, const LayerOptions& opts = {});

// Spatial kernel enumeration (l', r, m') used by r3_layer, l' major.
struct KernelIndex {
  int lp, r, mp;
};
std::vector<KernelIndex> kernel_indices(const KernelBasisSpec& spec);

// Conv_{R3 x I}: out_i = sum_{k,c} A(i,k,c) r3(f_c, kappa_k) + b_i at degree 0.
FeatureField r3_layer(const PointCloud& cloud, const FeatureField& field, const KernelBasisSpec& spec,
                      const Tensor3& A, const std::vector<double>& bias, const LayerOptions& opts = {});
// Conv_{0 x SO(3)}: out_i = sum_{j,c} B(i,j,c) f_c * theta_j + b_i at degree 0.
FeatureField so3_layer(const FeatureField& field, const std::vector<std::vector<Eigen::MatrixXd>>& thetas,
                       const Tensor3& B, const std::vector<double>& bias);

// Rotational basis theta_{(L,M,n)} = (2L+1) D^L_{Mn}, enumerated L, M, n;
// its Haar moments are the unit matrices e_{Mn} at degree L.
std::vector<std::vector<Eigen::MatrixXd>> wigner_theta_basis(int lmax);

// Layer weights of a separable product C = B.A, with A indexed by
// kernel_indices(spec) and B by wigner_theta_basis(lmax_out).
SE3Weights separable_weights(const Tensor3& B, const Tensor3& A, const KernelBasisSpec& spec, int lmax_out,
                             const std::vector<double>& bias);

// Vector features written into column m = 0 of each coefficient matrix.
struct EmbeddedField {
  FeatureField field;
  std::vector<int> channels;  // original per-degree channel counts
};
EmbeddedField embed_tfn_input(const VectorField& v);
// Reads column m = 0; channels defaults to all.
VectorField extract_tfn_output(const FeatureField& f, const std::vector<int>& channels = {});

}  // namespace se3conv
