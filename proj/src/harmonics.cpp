#include "se3conv/harmonics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "se3conv/errors.hpp"

namespace se3conv {

namespace {

constexpr int kFactorialTable = 128;

const std::array<double, kFactorialTable>& log_factorial_table() {
  static const std::array<double, kFactorialTable> table = [] {
    std::array<double, kFactorialTable> t{};
    for (int n = 0; n < kFactorialTable; ++n) t[n] = std::lgamma(n + 1.0);
    return t;
  }();
  return table;
}

// Polynomial part of the associated Legendre factor, normalized by
// sqrt((l-m)!/(l+m)!), evaluated on the unnormalized point.
double pi_bar(int l, int m, double z, double r2) {
  double s = 0.0;
  for (int k = 0; k <= (l - m) / 2; ++k) {
    const double c = std::ldexp(binomial(l, k) * binomial(2 * l - 2 * k, l), -l) *
                     std::exp(log_factorial(l - 2 * k) - log_factorial(l - 2 * k - m));
    const double term = c * std::pow(r2, k) * std::pow(z, l - 2 * k - m);
    s += (k % 2 == 0) ? term : -term;
  }
  return std::exp(0.5 * (log_factorial(l - m) - log_factorial(l + m))) * s;
}

}  // namespace

void check_degree(int l) {
  if (l < 0 || l > kMaxDegree) {
    throw IndexOutOfRange("degree " + std::to_string(l) + " outside [0, " +
                          std::to_string(kMaxDegree) + "]");
  }
}

double log_factorial(int n) {
  if (n < 0) throw IndexOutOfRange("negative factorial argument");
  if (n < kFactorialTable) return log_factorial_table()[n];
  return std::lgamma(n + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

HarmonicVector eval_real_spherical_harmonics(int l, const Vec3& x) {
  check_degree(l);
  HarmonicVector out(2 * l + 1);
  const double r2 = x.squaredNorm();
  const double a0 = std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi));
  const double am = std::sqrt((2 * l + 1) / (2.0 * std::numbers::pi));
  const std::complex<double> c(x.x(), x.y());
  std::complex<double> cm(1.0, 0.0);
  out[mi(l, 0)] = a0 * pi_bar(l, 0, x.z(), r2);
  for (int m = 1; m <= l; ++m) {
    cm *= c;
    const double p = am * pi_bar(l, m, x.z(), r2);
    out[mi(l, m)] = p * cm.real();
    out[mi(l, -m)] = p * cm.imag();
  }
  return out;
}

TransitionMatrix transition_matrix(int l) {
  check_degree(l);
  const double s = 1.0 / std::numbers::sqrt2;
  TransitionMatrix c = TransitionMatrix::Zero(2 * l + 1, 2 * l + 1);
  const std::complex<double> i(0.0, 1.0);
  for (int m = -l; m <= l; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (m < 0) {
      c(mi(l, m), mi(l, m)) = -i * s;
      c(mi(l, m), mi(l, -m)) = s;
    } else if (m > 0) {
      c(mi(l, m), mi(l, m)) = sign * s;
      c(mi(l, m), mi(l, -m)) = i * sign * s;
    } else {
      c(mi(l, 0), mi(l, 0)) = 1.0;
    }
  }
  return c;
}

Eigen::MatrixXd wigner_small_d(int l, double beta) {
  check_degree(l);
  const int n = 2 * l + 1;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const double cb = std::cos(beta / 2.0);
  const double sb = std::sin(beta / 2.0);
  for (int mp = -l; mp <= l; ++mp) {
    for (int m = -l; m <= l; ++m) {
      const int s_lo = std::max(0, m - mp);
      const int s_hi = std::min(l + m, l - mp);
      const double pre = 0.5 * (log_factorial(l + mp) + log_factorial(l - mp) +
                                log_factorial(l + m) + log_factorial(l - m));
      double sum = 0.0;
      for (int s = s_lo; s <= s_hi; ++s) {
        const double mag = std::exp(pre - log_factorial(l + m - s) - log_factorial(s) -
                                    log_factorial(mp - m + s) - log_factorial(l - mp - s));
        const double term = mag * std::pow(cb, 2 * l + m - mp - 2 * s) * std::pow(sb, mp - m + 2 * s);
        sum += ((mp - m + s) % 2 == 0) ? term : -term;
      }
      d(mi(l, mp), mi(l, m)) = sum;
    }
  }
  return d;
}

Eigen::MatrixXcd wigner_D_complex(int l, const EulerZYZ& e) {
  const Eigen::MatrixXd d = wigner_small_d(l, e.beta);
  Eigen::MatrixXcd out(2 * l + 1, 2 * l + 1);
  for (int mp = -l; mp <= l; ++mp) {
    for (int m = -l; m <= l; ++m) {
      out(mi(l, mp), mi(l, m)) = std::polar(1.0, -mp * e.alpha) * d(mi(l, mp), mi(l, m)) *
                                 std::polar(1.0, -m * e.gamma);
    }
  }
  return out;
}

namespace {

WignerBlock real_block(int l, const EulerZYZ& e, const Tolerances& tol) {
  // The case table is indexed (complex order, real order); conjugating the
  // complex block into the real basis uses its transpose.
  const Eigen::MatrixXcd t = transition_matrix(l).transpose();
  const Eigen::MatrixXcd d = t * wigner_D_complex(l, e) * t.adjoint();
  const double residue = d.imag().cwiseAbs().maxCoeff();
  if (residue > tol.imag) {
    throw ImaginaryResidue("real Wigner block of degree " + std::to_string(l) +
                           " has imaginary residue " + std::to_string(residue));
  }
  return d.real();
}

}  // namespace

WignerBlock wigner_D_real(int l, const Rotation& r, const Tolerances& tol) {
  check_degree(l);
  if (l == 0) {
    Rotation::from_matrix(r.matrix(), tol.orth);
    return WignerBlock::Identity(1, 1);
  }
  return real_block(l, euler_from_rotation(r, tol), tol);
}

std::vector<WignerBlock> wigner_D_real_all(int lmax, const Rotation& r, const Tolerances& tol) {
  check_degree(lmax);
  const EulerZYZ e = euler_from_rotation(r, tol);
  std::vector<WignerBlock> out;
  out.reserve(lmax + 1);
  for (int l = 0; l <= lmax; ++l) out.push_back(real_block(l, e, tol));
  return out;
}

}  // namespace se3conv
