#pragma once

#include <cstddef>
#include <vector>

namespace se3conv {

// Dense row-major rank-3 array.
struct Tensor3 {
  int d0 = 0, d1 = 0, d2 = 0;
  std::vector<double> v;

  Tensor3() = default;
  Tensor3(int a, int b, int c) : d0(a), d1(b), d2(c), v(static_cast<std::size_t>(a) * b * c, 0.0) {}

  double& operator()(int i, int j, int k) { return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k]; }
  double operator()(int i, int j, int k) const { return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k]; }
};

}  // namespace se3conv
