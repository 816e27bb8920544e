#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/rotation.hpp"

using namespace se3conv;

TEST_CASE("from_matrix rejects non-rotations") {
  Mat3 m = Mat3::Identity();
  m(0, 0) = -1.0;
  CHECK_THROWS_AS(Rotation::from_matrix(m), NotARotation);
  m = 1.01 * Mat3::Identity();
  CHECK_THROWS_AS(Rotation::from_matrix(m), NotARotation);
  CHECK_NOTHROW(Rotation::from_matrix(Rotation::about_z(0.4).matrix()));
}

TEST_CASE("euler round trip, generic and gimbal") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const Rotation r = testutil::random_rotation(rng);
    const EulerZYZ e = euler_from_rotation(r);
    CHECK((rotation_from_euler(e).matrix() - r.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(e.beta >= 0.0);
    CHECK(e.beta <= std::numbers::pi);
  }
  const EulerZYZ z = euler_from_rotation(Rotation::about_z(1.2));
  CHECK(z.alpha == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(z.beta == doctest::Approx(0.0));
  CHECK(z.gamma == 0.0);
  const Rotation flip = Rotation::about_z(0.7) * Rotation::about_y(std::numbers::pi);
  CHECK((rotation_from_euler(euler_from_rotation(flip)).matrix() - flip.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("geodesic distance") {
  CHECK(geodesic_distance(Rotation(), Rotation::about_z(0.5)) == doctest::Approx(0.5));
  CHECK(geodesic_distance(Rotation(), Rotation::about_y(std::numbers::pi)) == doctest::Approx(std::numbers::pi));
  const Rotation a = Rotation::about_axis(Vec3(1, 2, 3), 0.9);
  CHECK(a.angle() == doctest::Approx(0.9));
  CHECK(geodesic_distance(a, a) == doctest::Approx(0.0));
}
