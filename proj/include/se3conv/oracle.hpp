#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "se3conv/conv.hpp"
#include "se3conv/feature_field.hpp"
#include "se3conv/multiview.hpp"
#include "se3conv/wigner_transform.hpp"

namespace se3conv {

struct CheckResult {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

CheckResult make_result(std::string name, double err, double tol, double ms = 0.0);

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t passed() const;
  // CHECK <name> err=<e> tol=<t> <PASS|FAIL> <ms>ms lines, then SUMMARY p/t.
  void write(std::ostream& os) const;
};

// Real Wigner block evaluated entry by entry from the complex block; kept
// apart from wigner_D_real so oracles do not reuse the fast path.
Eigen::MatrixXd oracle_wigner_real(int l, const Rotation& r);

// f(x_p, R) = sum_l <f^l(x_p), D^l(R)> for channel c.
double oracle_synthesize(const FeatureField& f, std::size_t p, int c, const Rotation& r);

// Kernel on SE(3): (t, H) -> out x in matrix.
using SE3Kernel = std::function<Eigen::MatrixXd(const Vec3& t, const Rotation& h)>;

// out(X_p, R_k)_d = sum_q sum_h w_h sum_c f(X_q, H_h)_c g(H_h^-1 (X_p - X_q), H_h^-1 R_k)_{dc}
RotationDomainSignal brute_force_se3_conv(const PointCloud& cloud, const RotationDomainSignal& f,
                                          const SE3Kernel& g, int out_channels);

// h(R_k) = sum_h w_h f(H_h) g(H_h^-1 R_k), per point and channel of f.
RotationDomainSignal brute_force_so3_conv(const RotationDomainSignal& f,
                                          const std::function<double(const Rotation&)>& g);

// Same contract as forward_wt; loops over degree, entry, then samples.
FeatureField numeric_wigner_decompose(const RotationDomainSignal& samples, int lmax);

// Samples of a field on a rotation set via oracle_synthesize.
RotationDomainSignal oracle_sample(const FeatureField& f, const RotationSampleSet& set);

// Kernel of an SE(3)-conv layer: sum W kappa^{l'}_{rm'}(t) (2L+1) D^L_{Mn}(H).
SE3Kernel se3_layer_kernel(const SE3Weights& w, const KernelBasisSpec& spec);

using LayerClosure = std::function<FeatureField(const PointCloud&, const FeatureField&)>;

// Applies random (t, R) and a random point permutation to the input; the
// output must transform by D^L(R) at the permuted points. When rotations is
// non-empty its elements are used instead of random rotations.
CheckResult equivariance_check(const std::string& name, const LayerClosure& layer, const PointCloud& cloud,
                               const FeatureField& field, int trials, double tolerance, std::uint64_t seed,
                               const std::vector<Rotation>& rotations = {});

// Plain point-cloud CNN on scalar channels (no rotation slice).
Eigen::MatrixXd plain_cnn(const PointCloud& cloud, const Eigen::MatrixXd& values, const ScalarStack& stack);

}  // namespace se3conv
