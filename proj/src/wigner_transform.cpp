#include "se3conv/wigner_transform.hpp"

#include <algorithm>
#include <cmath>

#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

namespace se3conv {

namespace {

std::vector<std::vector<WignerBlock>> wigner_table(int lmax, const RotationSampleSet& set) {
  std::vector<std::vector<WignerBlock>> d;
  d.reserve(set.size());
  for (const auto& r : set.rotations) d.push_back(wigner_D_real_all(lmax, r));
  return d;
}

FeatureField transform(const RotationDomainSignal& s, int lmax, bool scaled) {
  if (s.values.size() != s.n_points * s.set.size() * s.channels || s.set.weights.size() != s.set.size()) {
    throw ShapeMismatch("rotation-domain signal has inconsistent shape");
  }
  const auto d = wigner_table(lmax, s.set);
  FeatureField out = FeatureField::uniform(s.n_points, lmax, s.channels);
  for (int l = 0; l <= lmax; ++l) {
    const int n = 2 * l + 1;
    const double scale = scaled ? n : 1.0;
    for (std::size_t p = 0; p < s.n_points; ++p) {
      for (int c = 0; c < s.channels; ++c) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t k = 0; k < s.set.size(); ++k) acc += (s.set.weights[k] * s.at(p, k, c)) * d[k][l];
        out.set_matrix(l, p, c, scale * acc);
      }
    }
  }
  return out;
}

}  // namespace

RotationDomainSignal inverse_wt(const FeatureField& field, const RotationSampleSet& set) {
  const int C = field.uniform_channels();
  RotationDomainSignal s{set, field.num_points(), C, {}};
  s.values.assign(field.num_points() * set.size() * C, 0.0);
  const auto d = wigner_table(field.max_degree(), set);
  for (std::size_t p = 0; p < field.num_points(); ++p) {
    for (std::size_t k = 0; k < set.size(); ++k) {
      for (int c = 0; c < C; ++c) {
        double v = 0.0;
        for (int l = 0; l <= field.max_degree(); ++l) v += field.matrix(l, p, c).cwiseProduct(d[k][l]).sum();
        s.at(p, k, c) = v;
      }
    }
  }
  return s;
}

FeatureField forward_wt(const RotationDomainSignal& signal, int lmax) { return transform(signal, lmax, true); }

FeatureField wigner_moments(const RotationDomainSignal& signal, int lmax) { return transform(signal, lmax, false); }

FeatureField wt_activation(const FeatureField& field, const RotationSampleSet& set,
                           const std::function<double(double)>& xi) {
  RotationDomainSignal s = inverse_wt(field, set);
  for (double& v : s.values) v = xi(v);
  return forward_wt(s, field.max_degree());
}

FeatureField relu_activation(const FeatureField& field, const RotationSampleSet& set) {
  return wt_activation(field, set, [](double v) { return std::max(v, 0.0); });
}

std::vector<double> reconstruction_error(const FeatureField& field, const RotationSampleSet& set) {
  const FeatureField back = forward_wt(inverse_wt(field, set), field.max_degree());
  std::vector<double> err(field.max_degree() + 1, 0.0);
  for (int l = 0; l <= field.max_degree(); ++l) {
    const auto& a = field.data(l);
    const auto& b = back.data(l);
    for (std::size_t i = 0; i < a.size(); ++i) err[l] = std::max(err[l], std::abs(a[i] - b[i]));
  }
  return err;
}

}  // namespace se3conv
