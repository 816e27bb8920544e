#include "se3conv/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "se3conv/errors.hpp"

namespace se3conv {

namespace {

double wrap_two_pi(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;
  return a;
}

}  // namespace

Rotation Rotation::from_matrix(const Mat3& m, double tol) {
  if (!m.allFinite()) throw NotARotation("rotation matrix has non-finite entries");
  const double orth = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = m.determinant();
  if (orth > tol || std::abs(det - 1.0) > tol) {
    throw NotARotation("matrix is not a proper rotation (orthogonality residue " +
                       std::to_string(orth) + ", det " + std::to_string(det) + ")");
  }
  return Rotation(m);
}

Rotation Rotation::about_z(double a) {
  Mat3 m;
  m << std::cos(a), -std::sin(a), 0.0,
       std::sin(a), std::cos(a), 0.0,
       0.0, 0.0, 1.0;
  return Rotation(m);
}

Rotation Rotation::about_y(double a) {
  Mat3 m;
  m << std::cos(a), 0.0, std::sin(a),
       0.0, 1.0, 0.0,
       -std::sin(a), 0.0, std::cos(a);
  return Rotation(m);
}

Rotation Rotation::about_axis(const Vec3& axis, double a) {
  return Rotation(Eigen::AngleAxisd(a, axis.normalized()).toRotationMatrix());
}

double Rotation::angle() const {
  const double c = std::clamp((m_.trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

Rotation rotation_from_euler(const EulerZYZ& e) {
  return Rotation::about_z(e.alpha) * Rotation::about_y(e.beta) * Rotation::about_z(e.gamma);
}

EulerZYZ euler_from_rotation(const Rotation& r, const Tolerances& tol) {
  const Mat3 m = Rotation::from_matrix(r.matrix(), tol.orth).matrix();
  const double sb = std::hypot(m(0, 2), m(1, 2));
  EulerZYZ e;
  if (sb >= tol.gimbal) {
    e.beta = std::atan2(sb, m(2, 2));
    e.alpha = wrap_two_pi(std::atan2(m(1, 2), m(0, 2)));
    e.gamma = wrap_two_pi(std::atan2(m(2, 1), -m(2, 0)));
  } else if (m(2, 2) > 0.0) {
    // R = Rz(alpha + gamma)
    e.alpha = wrap_two_pi(std::atan2(m(1, 0) - m(0, 1), m(0, 0) + m(1, 1)));
  } else {
    // R = Rz(alpha) diag(-1, 1, -1)
    e.beta = std::numbers::pi;
    e.alpha = wrap_two_pi(std::atan2(-m(0, 1) - m(1, 0), m(1, 1) - m(0, 0)));
  }
  return e;
}

double geodesic_distance(const Rotation& a, const Rotation& b) {
  const double c = std::clamp(((a.matrix().transpose() * b.matrix()).trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

}  // namespace se3conv
