#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "se3conv/tolerances.hpp"

namespace se3conv {

struct CGKey {
  int l = 0;
  int lp = 0;
  int L = 0;
  int m = 0;
  int mp = 0;
  int M = 0;
};

bool triangle_ok(int l, int lp, int L);
// Throws TriangleViolation.
void check_triangle(int l, int lp, int L);

// <l, lp; m, mp | L, M>. Zero when M != m + mp.
double cg_scalar(const CGKey& k);

// Complex-form tensor Q^; its entries are real numbers. Stored sparse along
// M = m + mp.
class CGTensorComplex {
 public:
  CGTensorComplex(int l, int lp, int L);

  int l() const { return l_; }
  int lp() const { return lp_; }
  int L() const { return L_; }

  // Q^{(l,lp),L}_{m,mp,M}; orders, not indices.
  double at(int m, int mp, int M) const;
  // Q^{L,(l,lp)}_{M,m,mp}: the transposed view.
  double at_t(int M, int m, int mp) const { return at(m, mp, M); }

 private:
  int l_, lp_, L_;
  Eigen::MatrixXd diag_;  // (2l+1) x (2lp+1), value at M = m + mp
};

// Real-form tensor Q^{(l,lp),L}, dense, shape (2l+1) x (2lp+1) x (2L+1).
class CGTensorReal {
 public:
  CGTensorReal(int l, int lp, int L, Eigen::MatrixXd flat);

  int l() const { return l_; }
  int lp() const { return lp_; }
  int L() const { return L_; }

  // Indices are positions (order + degree).
  double at(int a, int b, int M) const { return flat_(a * (2 * lp_ + 1) + b, M); }
  double at_t(int M, int a, int b) const { return at(a, b, M); }

  // Row (a, b) -> a * (2lp+1) + b, column M. Q^{L,(l,lp)} is its transpose.
  const Eigen::MatrixXd& flat() const { return flat_; }

 private:
  int l_, lp_, L_;
  Eigen::MatrixXd flat_;
};

CGTensorComplex cg_tensor_complex(int l, int lp, int L);
// Uncached construction; throws ImaginaryResidue when the conjugated tensor
// is not real after the (-i)^(l+lp+L) phase.
CGTensorReal build_cg_tensor_real(int l, int lp, int L, const Tolerances& tol = kDefaultTolerances);
// Cached, thread-safe lookup with default tolerances.
std::shared_ptr<const CGTensorReal> cg_tensor_real(int l, int lp, int L);

// out_M = sum_{a,b} Q^{L,(l,lp)}_{M,a,b} A_{a,b}
Eigen::VectorXd project_composite(int L, int l, int lp, const Eigen::MatrixXd& A);

}  // namespace se3conv
