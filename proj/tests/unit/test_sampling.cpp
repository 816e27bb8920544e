#include <doctest.h>

#include <numbers>

#include "se3conv/harmonics.hpp"
#include "se3conv/so3_sampling.hpp"

using namespace se3conv;

TEST_CASE("exact grid size and weights") {
  for (int B = 1; B <= 5; ++B) {
    const auto g = exact_euler_grid(B);
    CHECK(g.size() == static_cast<std::size_t>(4 * B * B * B));
    double s = 0.0;
    for (double w : g.weights) s += w;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("icosahedral group") {
  const auto g = icosahedral_group();
  REQUIRE(g.size() == 60);
  CHECK(g.weights[0] == doctest::Approx(1.0 / 60));
  // Averages of D^l vanish for l = 1..5 and not for l = 6.
  for (int l = 1; l <= 6; ++l) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1);
    for (std::size_t k = 0; k < g.size(); ++k) a += g.weights[k] * wigner_D_real(l, g.rotations[k]);
    if (l < 6) {
      CHECK(a.cwiseAbs().maxCoeff() < 1e-12);
    } else {
      CHECK(a.cwiseAbs().maxCoeff() > 0.1);
    }
  }
}

TEST_CASE("farthest point sampling") {
  const auto a = fps_rotations(32, 11), b = fps_rotations(32, 11);
  REQUIRE(a.size() == 32);
  CHECK((a.rotations[0].matrix() - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK((a.rotations[i].matrix() - b.rotations[i].matrix()).norm() == 0.0);
  CHECK(a.weights[5] == doctest::Approx(1.0 / 32));
  CHECK(min_pairwise_distance(fps_rotations(2, 0)) == doctest::Approx(std::numbers::pi));
  CHECK(min_pairwise_distance(fps_rotations(16, 0)) >= min_pairwise_distance(fps_rotations(32, 0)));
}

TEST_CASE("gauss legendre") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  double s = 0.0, s4 = 0.0;
  for (int i = 0; i < 5; ++i) {
    s += w[i];
    s4 += w[i] * x[i] * x[i] * x[i] * x[i];
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s4 == doctest::Approx(0.4).epsilon(1e-14));
}
