#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "se3conv/conv.hpp"
#include "se3conv/so3_sampling.hpp"
#include "se3conv/steerable_basis.hpp"

namespace se3conv {

struct ActivationSpec {
  bool enabled = false;
  SampleKind set = SampleKind::finite_group;
  int param = 60;
};

struct LayerConfig {
  std::string kernel = "gaussian";
  KernelBasisSpec spec;
  std::string weights_form = "tfn";
  std::string weights_path;  // resolved against the config's directory
  ActivationSpec activation;
  LayerOptions options;
};

// Flat `key = value` lines, '#' comments. Keys:
//   kernel = gaussian | zernike
//   kernel.radial = r0,r1,...      radial functions per degree
//   kernel.support_radius = s      default 1
//   weights.form = se3 | tfn
//   weights.file = path
//   activation = none | relu_wt(set = ico | fps:N | grid:B)
//   truncate = L                   optional output band limit
//   exclude_self = true | false
LayerConfig parse_layer_config(std::istream& in, const std::string& base_dir = ".");
LayerConfig load_layer_config(const std::string& path);

RotationSampleSet activation_samples(const ActivationSpec& a, std::uint64_t seed);

}  // namespace se3conv
