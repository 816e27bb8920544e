#pragma once

#include <functional>
#include <vector>

#include "se3conv/feature_field.hpp"
#include "se3conv/so3_sampling.hpp"

namespace se3conv {

struct RotationDomainSignal {
  RotationSampleSet set;
  std::size_t n_points = 0;
  int channels = 0;
  std::vector<double> values;  // [point][sample][channel]

  double& at(std::size_t p, std::size_t k, int c) { return values[(p * set.size() + k) * channels + c]; }
  double at(std::size_t p, std::size_t k, int c) const { return values[(p * set.size() + k) * channels + c]; }
};

// s(x, R_k) = sum_l <f^l(x), D^l(R_k)>. Needs uniform channels.
RotationDomainSignal inverse_wt(const FeatureField& field, const RotationSampleSet& set);

// (2l+1) sum_k w_k s(R_k) D^l(R_k), degrees 0..lmax.
FeatureField forward_wt(const RotationDomainSignal& signal, int lmax);

// sum_k w_k s(R_k) D^l(R_k): Haar moments, without the (2l+1) factor.
FeatureField wigner_moments(const RotationDomainSignal& signal, int lmax);

// forward_wt(xi(inverse_wt(field))) at the field's band limit.
FeatureField wt_activation(const FeatureField& field, const RotationSampleSet& set,
                           const std::function<double(double)>& xi);
FeatureField relu_activation(const FeatureField& field, const RotationSampleSet& set);

// Max error of forward_wt(inverse_wt(field)) per degree; diagnoses the
// quadrature quality of non-exact sets.
std::vector<double> reconstruction_error(const FeatureField& field, const RotationSampleSet& set);

}  // namespace se3conv
