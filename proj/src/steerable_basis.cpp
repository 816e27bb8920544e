#include "se3conv/steerable_basis.hpp"

#include <cmath>
#include <string>

#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

namespace se3conv {

RadialProfile RadialProfile::zernike(int n, int l, double support_radius) {
  RadialProfile p;
  p.kind = RadialKind::zernike;
  p.n = n;
  p.degree = l;
  p.support_radius = support_radius;
  return p;
}

RadialProfile RadialProfile::gaussian_shell(double rho, double sigma, int l, double support_radius) {
  RadialProfile p;
  p.kind = RadialKind::gaussian_shell;
  p.rho = rho;
  p.sigma = sigma;
  p.degree = l;
  p.support_radius = support_radius;
  return p;
}

std::vector<int> KernelBasisSpec::radial_counts() const {
  std::vector<int> out;
  for (const auto& p : profiles) out.push_back(static_cast<int>(p.size()));
  return out;
}

void KernelBasisSpec::validate() const {
  if (max_degree < 0 || static_cast<int>(profiles.size()) != max_degree + 1) {
    throw ShapeMismatch("kernel spec needs one profile list per degree 0..max_degree");
  }
  check_degree(max_degree);
  if (!(support_radius > 0.0) || !std::isfinite(support_radius)) {
    throw ShapeMismatch("support radius must be positive");
  }
  bool any = false;
  for (int l = 0; l <= max_degree; ++l) {
    for (const auto& p : profiles[l]) {
      any = true;
      if (p.degree != l) throw IndexOutOfRange("profile degree does not match its slot");
      if (p.support_radius != support_radius) throw ShapeMismatch("profiles must share the support radius");
      if (p.kind == RadialKind::zernike) {
        if (p.n < l || (p.n - l) % 2 != 0) throw BadZernikeIndex("zernike index n must satisfy n >= l, n - l even");
      } else if (!(p.sigma > 0.0) || !(p.rho >= 0.0)) {
        throw ShapeMismatch("gaussian shell needs sigma > 0 and rho >= 0");
      }
    }
  }
  if (!any) throw ShapeMismatch("kernel spec has no radial profiles");
}

KernelBasisSpec gaussian_basis(const std::vector<int>& counts, double support_radius) {
  KernelBasisSpec spec;
  spec.max_degree = static_cast<int>(counts.size()) - 1;
  spec.support_radius = support_radius;
  for (int l = 0; l <= spec.max_degree; ++l) {
    const int R = counts[l];
    const double spacing = R > 1 ? support_radius / (R - 1) : support_radius / 2.0;
    std::vector<RadialProfile> row;
    for (int r = 0; r < R; ++r) {
      const double rho = R > 1 ? r * support_radius / (R - 1) : 0.0;
      row.push_back(RadialProfile::gaussian_shell(rho, spacing, l, support_radius));
    }
    spec.profiles.push_back(std::move(row));
  }
  spec.validate();
  return spec;
}

KernelBasisSpec zernike_basis(const std::vector<int>& counts, double support_radius) {
  KernelBasisSpec spec;
  spec.max_degree = static_cast<int>(counts.size()) - 1;
  spec.support_radius = support_radius;
  for (int l = 0; l <= spec.max_degree; ++l) {
    std::vector<RadialProfile> row;
    for (int r = 0; r < counts[l]; ++r) row.push_back(RadialProfile::zernike(l + 2 * r, l, support_radius));
    spec.profiles.push_back(std::move(row));
  }
  spec.validate();
  return spec;
}

Eigen::VectorXd zernike_radial_coeffs(int n, int l) {
  if (l < 0 || n < l || (n - l) % 2 != 0) {
    throw BadZernikeIndex("zernike index (" + std::to_string(n) + "," + std::to_string(l) +
                          ") needs n >= l and n - l even");
  }
  const int k = (n - l) / 2;
  Eigen::VectorXd c(k + 1);
  const double pre = std::ldexp(1.0, -2 * k) * std::sqrt((2.0 * l + 4.0 * k + 3.0) / 3.0) * binomial(2 * k, k);
  for (int v = 0; v <= k; ++v) {
    const double mag = pre * binomial(k, v) * binomial(2 * (k + l + v) + 1, 2 * k) / binomial(k + l + v, k);
    c[v] = ((k + v) % 2 == 0) ? mag : -mag;
  }
  return c;
}

Eigen::VectorXd eval_profile(const RadialProfile& p, const Vec3& x) {
  const int l = p.degree;
  const double r = x.norm();
  if (r > p.support_radius) return Eigen::VectorXd::Zero(2 * l + 1);
  if (p.kind == RadialKind::zernike) {
    const Eigen::VectorXd c = zernike_radial_coeffs(p.n, l);
    const Vec3 u = x / p.support_radius;
    const double u2 = u.squaredNorm();
    double poly = 0.0;
    for (int v = static_cast<int>(c.size()) - 1; v >= 0; --v) poly = poly * u2 + c[v];
    return poly * eval_real_spherical_harmonics(l, u);
  }
  const double d = r - p.rho;
  const double phi = std::exp(-d * d / (2.0 * p.sigma * p.sigma));
  if (r == 0.0) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * l + 1);
    if (l == 0) out[0] = phi * eval_real_spherical_harmonics(0, Vec3::UnitZ())[0];
    return out;
  }
  return phi * eval_real_spherical_harmonics(l, x / r);
}

Eigen::VectorXd eval_kernel(const KernelBasisSpec& spec, int l, int r, const Vec3& x) {
  if (l < 0 || l > spec.max_degree || r < 0 || r >= spec.radial_count(l)) {
    throw IndexOutOfRange("kernel index (l=" + std::to_string(l) + ", r=" + std::to_string(r) + ") out of range");
  }
  return eval_profile(spec.profiles[l][r], x);
}

std::vector<std::vector<Eigen::VectorXd>> eval_kernel_all(const KernelBasisSpec& spec, const Vec3& x) {
  std::vector<std::vector<Eigen::VectorXd>> out(spec.max_degree + 1);
  for (int l = 0; l <= spec.max_degree; ++l) {
    for (int r = 0; r < spec.radial_count(l); ++r) out[l].push_back(eval_profile(spec.profiles[l][r], x));
  }
  return out;
}

}  // namespace se3conv
