#pragma once

namespace se3conv {

struct Tolerances {
  double orth = 1e-9;
  double imag = 1e-9;
  double rep = 1e-9;
  double euler = 1e-10;
  double gimbal = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

// Factorial sums are evaluated in double precision; beyond this degree the
// cancellation in the Wigner and Clebsch-Gordan sums is no longer controlled.
inline constexpr int kMaxDegree = 16;

}  // namespace se3conv
