#pragma once

#include <Eigen/Dense>

#include "se3conv/tolerances.hpp"

namespace se3conv {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

class Rotation {
 public:
  Rotation() : m_(Mat3::Identity()) {}

  // Throws NotARotation unless m^T m = I and det m = 1 within tol.
  static Rotation from_matrix(const Mat3& m, double tol = kDefaultTolerances.orth);
  // For matrices that are rotations by construction (products, inverses).
  static Rotation unchecked(const Mat3& m) { return Rotation(m); }

  static Rotation about_z(double angle);
  static Rotation about_y(double angle);
  static Rotation about_axis(const Vec3& axis, double angle);

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Rotation inverse() const { return Rotation(m_.transpose()); }
  Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_); }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }

  // Rotation angle in [0, pi].
  double angle() const;

 private:
  explicit Rotation(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

struct EulerZYZ {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// R_Z(alpha) R_Y(beta) R_Z(gamma).
Rotation rotation_from_euler(const EulerZYZ& e);

// Angles wrapped to [0, 2pi) x [0, pi] x [0, 2pi). When |sin beta| is below
// tol.gimbal, beta is snapped to 0 or pi and gamma = 0.
EulerZYZ euler_from_rotation(const Rotation& r, const Tolerances& tol = kDefaultTolerances);

// Geodesic distance: rotation angle of a^T b.
double geodesic_distance(const Rotation& a, const Rotation& b);

}  // namespace se3conv
