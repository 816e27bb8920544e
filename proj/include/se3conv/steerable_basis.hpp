#pragma once

#include <vector>

#include <Eigen/Dense>

#include "se3conv/rotation.hpp"

namespace se3conv {

enum class RadialKind { zernike, gaussian_shell };

struct RadialProfile {
  RadialKind kind = RadialKind::gaussian_shell;
  int degree = 0;
  int n = 0;           // zernike only
  double rho = 0.0;    // gaussian only
  double sigma = 1.0;  // gaussian only
  double support_radius = 1.0;

  static RadialProfile zernike(int n, int l, double support_radius = 1.0);
  static RadialProfile gaussian_shell(double rho, double sigma, int l, double support_radius = 1.0);
};

struct KernelBasisSpec {
  int max_degree = 0;
  double support_radius = 1.0;
  std::vector<std::vector<RadialProfile>> profiles;  // [degree][r]

  int radial_count(int l) const { return static_cast<int>(profiles.at(l).size()); }
  std::vector<int> radial_counts() const;
  // Throws IndexOutOfRange / BadZernikeIndex / ShapeMismatch on bad specs.
  void validate() const;
};

// Shells at rho_r = r/(R-1) * support, sigma = support/(R-1) (support/2 when R = 1).
KernelBasisSpec gaussian_basis(const std::vector<int>& counts, double support_radius = 1.0);
// Radial index r at degree l uses n = l + 2r.
KernelBasisSpec zernike_basis(const std::vector<int>& counts, double support_radius = 1.0);

// Coefficients of R^l_n as a polynomial in r^2 (length (n-l)/2 + 1). The
// radial function of the 3D Zernike function is r^l R^l_n(r^2), normalized
// so that 3 int_0^1 r^(2l) R_n R_n' r^2 dr = delta.
Eigen::VectorXd zernike_radial_coeffs(int n, int l);

// phi-part times Y_l, as a function on R^3. Zero outside the support.
Eigen::VectorXd eval_profile(const RadialProfile& p, const Vec3& x);

Eigen::VectorXd eval_kernel(const KernelBasisSpec& spec, int l, int r, const Vec3& x);

// All kernels at one offset: [degree][r] -> vector of length 2l+1.
std::vector<std::vector<Eigen::VectorXd>> eval_kernel_all(const KernelBasisSpec& spec, const Vec3& x);

}  // namespace se3conv
