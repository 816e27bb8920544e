#include "se3conv/so3_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "se3conv/errors.hpp"

namespace se3conv {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

RotationSampleSet exact_euler_grid(int B) {
  if (B < 1) throw IndexOutOfRange("band limit must be at least 1");
  std::vector<double> x, w;
  gauss_legendre(B, x, w);
  RotationSampleSet s;
  s.kind = SampleKind::exact_grid;
  s.param = B;
  const int na = 2 * B;
  const double step = 2.0 * std::numbers::pi / na;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < B; ++j) {
      for (int k = 0; k < na; ++k) {
        s.rotations.push_back(rotation_from_euler({i * step, std::acos(x[j]), k * step}));
        // Gauss-Legendre weights sum to 2.
        s.weights.push_back(w[j] / (2.0 * na * na));
      }
    }
  }
  return s;
}

RotationSampleSet icosahedral_group() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Mat3 cyc;
  cyc << 0, 0, 1,
         1, 0, 0,
         0, 1, 0;
  const std::vector<Rotation> gens = {
      Rotation::unchecked(cyc),
      Rotation::about_z(std::numbers::pi),
      Rotation::about_axis(Vec3(0.0, 1.0, phi), 2.0 * std::numbers::pi / 5.0),
  };
  std::vector<Rotation> elems = {Rotation()};
  auto contains = [&](const Rotation& r) {
    for (const auto& e : elems) {
      if ((e.matrix() - r.matrix()).cwiseAbs().maxCoeff() < 1e-9) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      const Rotation p = g * elems[i];
      if (!contains(p)) elems.push_back(p);
    }
    if (elems.size() > 60) throw std::logic_error("icosahedral closure exceeded 60 elements");
  }
  if (elems.size() != 60) throw std::logic_error("icosahedral closure did not reach 60 elements");
  RotationSampleSet s;
  s.kind = SampleKind::finite_group;
  s.param = 60;
  s.rotations = std::move(elems);
  s.weights.assign(60, 1.0 / 60.0);
  return s;
}

RotationSampleSet fps_rotations(int n, std::uint64_t seed) {
  if (n < 1) throw IndexOutOfRange("sample count must be at least 1");
  const RotationSampleSet pool = exact_euler_grid(16);
  const std::size_t np = pool.size();
  if (static_cast<std::size_t>(n) > np) throw IndexOutOfRange("sample count exceeds the candidate pool");

  std::vector<std::size_t> order(np);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  RotationSampleSet s;
  s.kind = SampleKind::fps;
  s.param = n;
  s.seed = seed;
  s.rotations.push_back(Rotation());
  std::vector<double> dist(np);
  for (std::size_t i = 0; i < np; ++i) dist[i] = geodesic_distance(Rotation(), pool.rotations[i]);
  while (static_cast<int>(s.rotations.size()) < n) {
    double best = -1.0;
    std::size_t pick = 0;
    for (std::size_t idx : order) {
      if (dist[idx] > best + 1e-12) {
        best = dist[idx];
        pick = idx;
      }
    }
    const Rotation& r = pool.rotations[pick];
    s.rotations.push_back(r);
    for (std::size_t i = 0; i < np; ++i) dist[i] = std::min(dist[i], geodesic_distance(r, pool.rotations[i]));
  }
  s.weights.assign(n, 1.0 / n);
  return s;
}

double min_pairwise_distance(const RotationSampleSet& s) {
  double best = std::numbers::pi;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::min(best, geodesic_distance(s.rotations[i], s.rotations[j]));
  }
  return best;
}

}  // namespace se3conv
