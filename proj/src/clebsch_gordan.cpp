#include "se3conv/clebsch_gordan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

namespace se3conv {

namespace {

std::string triple(int l, int lp, int L) {
  return "(" + std::to_string(l) + "," + std::to_string(lp) + "," + std::to_string(L) + ")";
}

// Base formula, valid for l >= lp and M >= 0.
double cg_base(int l, int lp, int m, int mp, int L, int M) {
  const double pre =
      0.5 * (std::log(2.0 * L + 1.0) + log_factorial(L + l - lp) + log_factorial(L - l + lp) +
             log_factorial(l + lp - L) - log_factorial(l + lp + L + 1) + log_factorial(L + M) +
             log_factorial(L - M) + log_factorial(l - m) + log_factorial(l + m) +
             log_factorial(lp - mp) + log_factorial(lp + mp));
  const int k_lo = std::max({0, lp - L - m, l + mp - L});
  const int k_hi = std::min({l + lp - L, l - m, lp + mp});
  double sum = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double mag = std::exp(pre - log_factorial(k) - log_factorial(l + lp - L - k) -
                                log_factorial(l - m - k) - log_factorial(lp + mp - k) -
                                log_factorial(L - lp + m + k) - log_factorial(L - l - mp + k));
    sum += (k % 2 == 0) ? mag : -mag;
  }
  return sum;
}

double cg_unchecked(int l, int lp, int m, int mp, int L, int M) {
  if (M != m + mp) return 0.0;
  const double sign = ((L - l - lp) % 2 == 0) ? 1.0 : -1.0;
  if (l < lp) return sign * cg_unchecked(lp, l, mp, m, L, M);
  if (M < 0) return sign * cg_unchecked(l, lp, -m, -mp, L, -M);
  return cg_base(l, lp, m, mp, L, M);
}

}  // namespace

bool triangle_ok(int l, int lp, int L) {
  return l >= 0 && lp >= 0 && L >= 0 && std::abs(l - lp) <= L && L <= l + lp;
}

void check_triangle(int l, int lp, int L) {
  if (!triangle_ok(l, lp, L)) throw TriangleViolation("degrees " + triple(l, lp, L) + " violate the triangle rule");
  check_degree(l);
  check_degree(lp);
  check_degree(L);
}

double cg_scalar(const CGKey& k) {
  check_triangle(k.l, k.lp, k.L);
  if (std::abs(k.m) > k.l || std::abs(k.mp) > k.lp || std::abs(k.M) > k.L) {
    throw IndexOutOfRange("order outside its degree range");
  }
  return cg_unchecked(k.l, k.lp, k.m, k.mp, k.L, k.M);
}

CGTensorComplex::CGTensorComplex(int l, int lp, int L) : l_(l), lp_(lp), L_(L) {
  check_triangle(l, lp, L);
  diag_ = Eigen::MatrixXd::Zero(2 * l + 1, 2 * lp + 1);
  for (int m = -l; m <= l; ++m) {
    for (int mp = -lp; mp <= lp; ++mp) {
      if (std::abs(m + mp) <= L) diag_(m + l, mp + lp) = cg_unchecked(l, lp, m, mp, L, m + mp);
    }
  }
}

double CGTensorComplex::at(int m, int mp, int M) const {
  if (std::abs(m) > l_ || std::abs(mp) > lp_ || std::abs(M) > L_) {
    throw IndexOutOfRange("order outside its degree range");
  }
  return M == m + mp ? diag_(m + l_, mp + lp_) : 0.0;
}

CGTensorReal::CGTensorReal(int l, int lp, int L, Eigen::MatrixXd flat)
    : l_(l), lp_(lp), L_(L), flat_(std::move(flat)) {
  if (flat_.rows() != (2 * l + 1) * (2 * lp + 1) || flat_.cols() != 2 * L + 1) {
    throw ShapeMismatch("real CG tensor " + triple(l, lp, L) + " has the wrong shape");
  }
}

CGTensorComplex cg_tensor_complex(int l, int lp, int L) { return CGTensorComplex(l, lp, L); }

CGTensorReal build_cg_tensor_real(int l, int lp, int L, const Tolerances& tol) {
  const CGTensorComplex q(l, lp, L);
  // Real-basis conjugation; T = C^T for each degree (see harmonics).
  const Eigen::MatrixXcd t1 = transition_matrix(l).transpose();
  const Eigen::MatrixXcd t2 = transition_matrix(lp).transpose();
  const Eigen::MatrixXcd t3 = transition_matrix(L).transpose();
  const int n1 = 2 * l + 1, n2 = 2 * lp + 1, n3 = 2 * L + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n1 * n2, n3);
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      for (int m = -l; m <= l; ++m) {
        const std::complex<double> ta = t1(a, m + l);
        if (ta == 0.0) continue;
        for (int mp = -lp; mp <= lp; ++mp) {
          const std::complex<double> tb = t2(b, mp + lp);
          const int K = m + mp;
          if (tb == 0.0 || std::abs(K) > L) continue;
          const double v = q.at(m, mp, K);
          if (v == 0.0) continue;
          for (int M = 0; M < n3; ++M) out(a * n2 + b, M) += ta * tb * v * std::conj(t3(M, K + L));
        }
      }
    }
  }
  if ((l + lp + L) % 2 != 0) out *= std::complex<double>(0.0, -1.0);
  const double residue = out.imag().cwiseAbs().maxCoeff();
  if (residue > tol.imag) {
    throw ImaginaryResidue("real CG tensor " + triple(l, lp, L) + " has imaginary residue " +
                           std::to_string(residue));
  }
  return CGTensorReal(l, lp, L, out.real());
}

std::shared_ptr<const CGTensorReal> cg_tensor_real(int l, int lp, int L) {
  check_triangle(l, lp, L);
  static std::shared_mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const CGTensorReal>> cache;
  const auto key = std::make_tuple(l, lp, L);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto tensor = std::make_shared<const CGTensorReal>(build_cg_tensor_real(l, lp, L));
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(tensor)).first->second;
}

Eigen::VectorXd project_composite(int L, int l, int lp, const Eigen::MatrixXd& A) {
  if (A.rows() != 2 * l + 1 || A.cols() != 2 * lp + 1) {
    throw ShapeMismatch("composite block must be (2l+1) x (2l'+1)");
  }
  const auto q = cg_tensor_real(l, lp, L);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * L + 1);
  for (int a = 0; a < 2 * l + 1; ++a) {
    for (int b = 0; b < 2 * lp + 1; ++b) {
      const double v = A(a, b);
      if (v == 0.0) continue;
      out += v * q->flat().row(a * (2 * lp + 1) + b).transpose();
    }
  }
  return out;
}

}  // namespace se3conv
