#pragma once

#include <cstdint>
#include <vector>

#include "se3conv/rotation.hpp"

namespace se3conv {

enum class SampleKind { exact_grid, finite_group, fps };

struct RotationSampleSet {
  SampleKind kind = SampleKind::exact_grid;
  int param = 0;  // B for grids, count for fps, 60 for the group
  std::uint64_t seed = 0;
  std::vector<Rotation> rotations;
  std::vector<double> weights;

  std::size_t size() const { return rotations.size(); }
};

// 2B alpha x B Gauss-Legendre cos(beta) x 2B gamma nodes, weights summing to
// one. Integrates products of Wigner entries exactly for l + l' < 2B.
RotationSampleSet exact_euler_grid(int B);

// Rotation group of the icosahedron with vertices (0, +-1, +-phi) and their
// cyclic coordinate permutations.
RotationSampleSet icosahedral_group();

// Greedy max-min sampling over the exact_euler_grid(16) nodes starting at the
// identity; the seed only breaks ties.
RotationSampleSet fps_rotations(int n, std::uint64_t seed = 0);

// Minimum pairwise geodesic distance of a set.
double min_pairwise_distance(const RotationSampleSet& s);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace se3conv
