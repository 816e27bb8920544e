#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "se3conv/rotation.hpp"

namespace se3conv {

// Index convention for all degree-l objects: position m + l holds order m.
inline int mi(int l, int m) { return m + l; }

using HarmonicVector = Eigen::VectorXd;
using WignerBlock = Eigen::MatrixXd;
using TransitionMatrix = Eigen::MatrixXcd;

// log(n!) for n >= 0.
double log_factorial(int n);
double binomial(int n, int k);

// Real spherical harmonics of degree l at x (not normalized to the sphere;
// the polynomials are homogeneous of degree l). No Condon-Shortley phase.
HarmonicVector eval_real_spherical_harmonics(int l, const Vec3& x);

// Row-major case table of C^l; rows are indexed by the complex order,
// columns by the real order. Unitary.
TransitionMatrix transition_matrix(int l);

// Small Wigner d^l_{m'm}(beta); row m', column m.
Eigen::MatrixXd wigner_small_d(int l, double beta);

// exp(-i m' alpha) d^l_{m'm}(beta) exp(-i m gamma).
Eigen::MatrixXcd wigner_D_complex(int l, const EulerZYZ& e);

// Real Wigner block with Y_l(R x) = D^l(R) Y_l(x).
WignerBlock wigner_D_real(int l, const Rotation& r, const Tolerances& tol = kDefaultTolerances);

// Blocks 0..lmax for one rotation; shares the Euler extraction.
std::vector<WignerBlock> wigner_D_real_all(int lmax, const Rotation& r,
                                           const Tolerances& tol = kDefaultTolerances);

void check_degree(int l);

}  // namespace se3conv
