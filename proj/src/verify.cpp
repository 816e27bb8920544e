#include "se3conv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/so3_sampling.hpp"

namespace se3conv {

namespace {

using Rng = std::mt19937_64;

struct Measure {
  double err;
  double tol;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Rotation rand_rot(Rng& rng) {
  Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
  q.normalize();
  return Rotation::from_matrix(q.toRotationMatrix());
}

Vec3 rand_vec(Rng& rng) { return Vec3(normal(rng), normal(rng), normal(rng)); }

Vec3 rand_in_ball(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const Vec3 v(u(rng), u(rng), u(rng));
    if (v.squaredNorm() <= 1.0) return radius * v;
  }
}

PointCloud rand_cloud(Rng& rng, std::size_t n, double radius) {
  PointCloud c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(rand_in_ball(rng, radius));
  return c;
}

FeatureField rand_field(Rng& rng, std::size_t n, int lmax, int channels) {
  FeatureField f = FeatureField::uniform(n, lmax, channels);
  for (int l = 0; l <= lmax; ++l) {
    for (double& v : f.data(l)) v = normal(rng);
  }
  return f;
}

std::vector<double> rand_vector(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

Tensor3 rand_tensor(Rng& rng, int a, int b, int c) {
  Tensor3 t(a, b, c);
  for (double& x : t.v) x = normal(rng);
  return t;
}

SE3Weights rand_se3_weights(Rng& rng, int cin, int cout, const std::vector<int>& radial, int lmax_out) {
  SE3Weights w(cin, cout, radial, lmax_out);
  for (int lp = 0; lp < static_cast<int>(radial.size()); ++lp) {
    for (int L = 0; L <= lmax_out; ++L) {
      for (double& x : w.block(lp, L)) x = normal(rng);
    }
  }
  w.bias() = rand_vector(rng, cout);
  return w;
}

TFNWeights rand_tfn_weights(Rng& rng, int cin, int cout, const std::vector<int>& radial, int lmax_out) {
  TFNWeights v(cin, cout, radial, lmax_out);
  for (const auto& [key, _] : v.blocks()) {
    const auto [l, lp, L] = key;
    for (double& x : v.block(l, lp, L)) x = normal(rng);
  }
  v.bias() = rand_vector(rng, cout);
  return v;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return k;
}

Eigen::MatrixXd complex_flat(int l, int lp, int L) {
  const CGTensorComplex q = cg_tensor_complex(l, lp, L);
  Eigen::MatrixXd f((2 * l + 1) * (2 * lp + 1), 2 * L + 1);
  for (int m = -l; m <= l; ++m) {
    for (int mp = -lp; mp <= lp; ++mp) {
      for (int M = -L; M <= L; ++M) f((m + l) * (2 * lp + 1) + mp + lp, M + L) = q.at(m, mp, M);
    }
  }
  return f;
}

// Sphere quadrature exact for polynomials of degree <= 2n-1 in cos(theta)
// and trigonometric order < nphi.
struct SphereRule {
  std::vector<Vec3> points;
  std::vector<double> weights;
};

SphereRule sphere_rule(int n, int nphi) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  SphereRule s;
  for (int i = 0; i < n; ++i) {
    const double st = std::sqrt(1.0 - x[i] * x[i]);
    for (int k = 0; k < nphi; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / nphi;
      s.points.emplace_back(st * std::cos(phi), st * std::sin(phi), x[i]);
      s.weights.push_back(w[i] * 2.0 * std::numbers::pi / nphi);
    }
  }
  return s;
}

// ---------------------------------------------------------------- harmonics

double steerability(Rng& rng) {
  double e = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int t = 0; t < 100; ++t) {
      const Rotation r = rand_rot(rng);
      const Vec3 x = rand_vec(rng);
      e = std::max(e, (eval_real_spherical_harmonics(l, r * x) - wigner_D_real(l, r) * eval_real_spherical_harmonics(l, x))
                          .cwiseAbs()
                          .maxCoeff());
    }
  }
  return e;
}

double sh_orthonormality(Rng&) {
  const SphereRule s = sphere_rule(10, 20);
  std::vector<Eigen::VectorXd> vals;
  for (const auto& p : s.points) {
    Eigen::VectorXd v(25);
    int o = 0;
    for (int l = 0; l <= 4; ++l) {
      v.segment(o, 2 * l + 1) = eval_real_spherical_harmonics(l, p);
      o += 2 * l + 1;
    }
    vals.push_back(v);
  }
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(25, 25);
  for (std::size_t k = 0; k < vals.size(); ++k) g += s.weights[k] * vals[k] * vals[k].transpose();
  return (g - Eigen::MatrixXd::Identity(25, 25)).cwiseAbs().maxCoeff();
}

double sh_homogeneity(Rng& rng) {
  double e = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int t = 0; t < 20; ++t) {
      const Vec3 x = rand_vec(rng).normalized();
      for (double s : {0.5, 2.0}) {
        e = std::max(e, (eval_real_spherical_harmonics(l, s * x) - std::pow(s, l) * eval_real_spherical_harmonics(l, x))
                            .cwiseAbs()
                            .maxCoeff());
      }
    }
  }
  return e;
}

// Real harmonics from the standard associated Legendre functions
// (std::assoc_legendre carries no Condon-Shortley phase).
double sh_legendre_oracle(Rng& rng) {
  double e = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int t = 0; t < 20; ++t) {
      const Vec3 x = rand_vec(rng).normalized();
      const double ct = x.z();
      const double phi = std::atan2(x.y(), x.x());
      const Eigen::VectorXd y = eval_real_spherical_harmonics(l, x);
      for (int m = -l; m <= l; ++m) {
        const int am = std::abs(m);
        double ref;
        if (m == 0) {
          ref = std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi)) * std::legendre(l, ct);
        } else {
          const double norm = std::sqrt((2 * l + 1) / (2.0 * std::numbers::pi) *
                                        std::exp(std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0)));
          ref = norm * std::assoc_legendre(l, am, ct) * (m > 0 ? std::cos(am * phi) : std::sin(am * phi));
        }
        e = std::max(e, std::abs(ref - y[m + l]));
      }
    }
  }
  return e;
}

double euler_roundtrip(Rng& rng) {
  double e = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Rotation r = rand_rot(rng);
    e = std::max(e, (rotation_from_euler(euler_from_rotation(r)).matrix() - r.matrix()).cwiseAbs().maxCoeff());
  }
  for (double a : {0.3, 2.0, 5.5}) {
    for (const Rotation& r : {Rotation::about_z(a), Rotation::about_z(a) * Rotation::about_y(std::numbers::pi)}) {
      const EulerZYZ ez = euler_from_rotation(r);
      e = std::max(e, std::abs(ez.gamma));
      e = std::max(e, (rotation_from_euler(ez).matrix() - r.matrix()).cwiseAbs().maxCoeff());
    }
  }
  return e;
}

// ------------------------------------------------------------------- wigner

double wigner_representation(Rng& rng) {
  double e = 0.0;
  for (int l = 0; l <= 4; ++l) {
    e = std::max(e, (wigner_D_real(l, Rotation()) - Eigen::MatrixXd::Identity(2 * l + 1, 2 * l + 1)).cwiseAbs().maxCoeff());
    for (int t = 0; t < 50; ++t) {
      const Rotation a = rand_rot(rng), b = rand_rot(rng);
      e = std::max(e, (wigner_D_real(l, a * b) - wigner_D_real(l, a) * wigner_D_real(l, b)).cwiseAbs().maxCoeff());
    }
  }
  return e;
}

double wigner_unitarity(Rng& rng) {
  double e = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int t = 0; t < 50; ++t) {
      const Eigen::MatrixXd d = wigner_D_real(l, rand_rot(rng));
      e = std::max(e, (d.transpose() * d - Eigen::MatrixXd::Identity(2 * l + 1, 2 * l + 1)).cwiseAbs().maxCoeff());
    }
  }
  return e;
}

double schur_orthogonality(int B, int lmax) {
  const RotationSampleSet g = exact_euler_grid(B);
  int dim = 0;
  for (int l = 0; l <= lmax; ++l) dim += (2 * l + 1) * (2 * l + 1);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd v(dim);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto d = wigner_D_real_all(lmax, g.rotations[k]);
    int o = 0;
    for (int l = 0; l <= lmax; ++l) {
      for (int i = 0; i < 2 * l + 1; ++i) {
        for (int j = 0; j < 2 * l + 1; ++j) v[o++] = d[l](i, j);
      }
    }
    gram.selfadjointView<Eigen::Lower>().rankUpdate(v, g.weights[k]);
  }
  gram = gram.selfadjointView<Eigen::Lower>();
  Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(dim, dim);
  int o = 0;
  for (int l = 0; l <= lmax; ++l) {
    const int n = (2 * l + 1) * (2 * l + 1);
    expect.block(o, o, n, n) = Eigen::MatrixXd::Identity(n, n) / (2 * l + 1);
    o += n;
  }
  return (gram - expect).cwiseAbs().maxCoeff();
}

// ------------------------------------------------------------------ clebsch

double cg_orthogonality(Rng&) {
  double e = 0.0;
  for (int l = 0; l <= 3; ++l) {
    for (int lp = 0; lp <= 3; ++lp) {
      for (int L = std::abs(l - lp); L <= l + lp; ++L) {
        for (int L2 = std::abs(l - lp); L2 <= l + lp; ++L2) {
          Eigen::MatrixXd eye = Eigen::MatrixXd::Zero(2 * L + 1, 2 * L2 + 1);
          if (L == L2) eye.setIdentity();
          const Eigen::MatrixXd pr = cg_tensor_real(l, lp, L)->flat().transpose() * cg_tensor_real(l, lp, L2)->flat();
          const Eigen::MatrixXd pc = complex_flat(l, lp, L).transpose() * complex_flat(l, lp, L2);
          e = std::max({e, (pr - eye).cwiseAbs().maxCoeff(), (pc - eye).cwiseAbs().maxCoeff()});
        }
      }
    }
  }
  return e;
}

double cg_completeness(Rng&) {
  double e = 0.0;
  for (int l = 0; l <= 3; ++l) {
    for (int lp = 0; lp <= 3; ++lp) {
      const int n = (2 * l + 1) * (2 * lp + 1);
      Eigen::MatrixXd sr = Eigen::MatrixXd::Zero(n, n), sc = Eigen::MatrixXd::Zero(n, n);
      for (int L = std::abs(l - lp); L <= l + lp; ++L) {
        const Eigen::MatrixXd& p = cg_tensor_real(l, lp, L)->flat();
        const Eigen::MatrixXd q = complex_flat(l, lp, L);
        sr += p * p.transpose();
        sc += q * q.transpose();
      }
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
      e = std::max({e, (sr - eye).cwiseAbs().maxCoeff(), (sc - eye).cwiseAbs().maxCoeff()});
    }
  }
  return e;
}

double cg_decomposition(Rng& rng) {
  double e = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Rotation r = rand_rot(rng);
    const auto d = wigner_D_real_all(6, r);
    for (int l = 0; l <= 3; ++l) {
      for (int lp = 0; lp <= 3; ++lp) {
        const Eigen::MatrixXd k = kron(d[l], d[lp]);
        for (int L = std::abs(l - lp); L <= l + lp; ++L) {
          const Eigen::MatrixXd qt = cg_tensor_real(l, lp, L)->flat().transpose();
          e = std::max(e, (d[L] * qt - qt * k).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return e;
}

double cg_symmetries(Rng&) {
  auto q = [](int l, int lp, int L, int m, int mp, int M) { return cg_scalar({l, lp, L, m, mp, M}); };
  auto sgn = [](int k) { return (k % 2 == 0) ? 1.0 : -1.0; };
  double e = 0.0;
  for (int l = 0; l <= 3; ++l) {
    for (int lp = 0; lp <= 3; ++lp) {
      for (int L = std::abs(l - lp); L <= l + lp; ++L) {
        const double s2 = std::sqrt((2.0 * L + 1) / (2 * lp + 1));
        const double s1 = std::sqrt((2.0 * L + 1) / (2 * l + 1));
        for (int m = -l; m <= l; ++m) {
          for (int mp = -lp; mp <= lp; ++mp) {
            for (int M = -L; M <= L; ++M) {
              const double v = q(l, lp, L, m, mp, M);
              const double rel[6] = {
                  sgn(l + lp - L) * q(l, lp, L, -m, -mp, -M),
                  sgn(l + lp - L) * q(lp, l, L, mp, m, M),
                  sgn(l - m) * s2 * q(l, L, lp, m, -M, -mp),
                  sgn(lp + mp) * s1 * q(L, lp, l, -M, mp, -m),
                  sgn(l - m) * s2 * q(L, l, lp, M, -m, mp),
                  sgn(lp + mp) * s1 * q(lp, L, l, -mp, M, m),
              };
              for (double r : rel) e = std::max(e, std::abs(v - r));
            }
          }
        }
      }
    }
  }
  return e;
}

// Reference values from an exact symbolic evaluation.
double cg_reference_values(Rng&) {
  struct Ref {
    CGKey k;
    double v;
  };
  const Ref refs[] = {
      {{1, 1, 0, 1, -1, 0}, 0.5773502691896257},  {{2, 1, 2, 1, 0, 1}, 0.408248290463863},
      {{3, 2, 4, -1, 2, 1}, -0.5345224838248488}, {{1, 1, 2, 0, 0, 0}, 0.816496580927726},
      {{2, 2, 3, -2, 1, -1}, -0.5477225575051661}, {{3, 3, 5, 3, -2, 1}, 0.2439750182371333},
      {{1, 2, 1, 1, -1, 0}, 0.5477225575051661},  {{1, 1, 2, 0, 1, 0}, 0.0},
  };
  double e = 0.0;
  for (const auto& r : refs) e = std::max(e, std::abs(cg_scalar(r.k) - r.v));
  return e;
}

// sum_l (2l+1)/(2L+1) sum_m Q^{L,(l,l')}_{N,m,n'} Q^{(l,l'),L}_{m,m',M} = delta_{m'n'} delta_{MN}
double cg_scaled_orthogonality(Rng&) {
  double e = 0.0;
  for (int lp = 0; lp <= 3; ++lp) {
    for (int L = 0; L <= 3; ++L) {
      const int np = 2 * lp + 1, nL = 2 * L + 1;
      Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(np * nL, np * nL);  // (n', N) x (m', M)
      for (int l = std::abs(L - lp); l <= L + lp; ++l) {
        const auto q = cg_tensor_real(l, lp, L);
        const double s = (2.0 * l + 1) / nL;
        for (int m = 0; m < 2 * l + 1; ++m) {
          for (int a = 0; a < np; ++a) {
            for (int N = 0; N < nL; ++N) {
              for (int b = 0; b < np; ++b) {
                for (int M = 0; M < nL; ++M) acc(a * nL + N, b * nL + M) += s * q->at(m, a, N) * q->at(m, b, M);
              }
            }
          }
        }
      }
      e = std::max(e, (acc - Eigen::MatrixXd::Identity(np * nL, np * nL)).cwiseAbs().maxCoeff());
    }
  }
  return e;
}

// -------------------------------------------------------------------- basis

double kernel_steerability(Rng& rng) {
  double e = 0.0;
  for (const KernelBasisSpec& spec : {gaussian_basis({3, 3, 2, 2}, 1.0), zernike_basis({3, 2, 2, 1}, 1.0)}) {
    for (int t = 0; t < 30; ++t) {
      const Rotation r = rand_rot(rng);
      const Vec3 x = rand_in_ball(rng, 0.95);
      for (int l = 0; l <= spec.max_degree; ++l) {
        const Eigen::MatrixXd d = wigner_D_real(l, r);
        for (int k = 0; k < spec.radial_count(l); ++k) {
          e = std::max(e, (eval_kernel(spec, l, k, r * x) - d * eval_kernel(spec, l, k, x)).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return e;
}

double zernike_radial_orthogonality(Rng&) {
  std::vector<double> x, w;
  gauss_legendre(30, x, w);
  double e = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int n = l; n <= 8; n += 2) {
      for (int n2 = l; n2 <= 8; n2 += 2) {
        const Eigen::VectorXd a = zernike_radial_coeffs(n, l), b = zernike_radial_coeffs(n2, l);
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          const double r = 0.5 * (x[i] + 1.0), r2 = r * r;
          double pa = 0.0, pb = 0.0;
          for (int v = static_cast<int>(a.size()) - 1; v >= 0; --v) pa = pa * r2 + a[v];
          for (int v = static_cast<int>(b.size()) - 1; v >= 0; --v) pb = pb * r2 + b[v];
          s += 0.5 * w[i] * 3.0 * std::pow(r, 2 * l) * pa * pb * r2;
        }
        e = std::max(e, std::abs(s - (n == n2 ? 1.0 : 0.0)));
      }
    }
  }
  return e;
}

double zernike_ball_orthogonality(Rng&) {
  struct Fn {
    int n, l, m;
  };
  std::vector<Fn> fns;
  for (int n = 0; n <= 4; ++n) {
    for (int l = n % 2; l <= n; l += 2) {
      for (int m = 0; m < 2 * l + 1; ++m) fns.push_back({n, l, m});
    }
  }
  std::vector<double> x, w;
  gauss_legendre(12, x, w);
  const SphereRule s = sphere_rule(12, 24);
  const int nf = static_cast<int>(fns.size());
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nf, nf);
  Eigen::VectorXd v(nf);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = 0.5 * (x[i] + 1.0);
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      const Vec3 p = r * s.points[k];
      for (int f = 0; f < nf; ++f) {
        v[f] = eval_profile(RadialProfile::zernike(fns[f].n, fns[f].l), p)[fns[f].m];
      }
      gram += (3.0 * 0.5 * w[i] * r * r * s.weights[k]) * v * v.transpose();
    }
  }
  return (gram - Eigen::MatrixXd::Identity(nf, nf)).cwiseAbs().maxCoeff();
}

double gaussian_shell_normalization(Rng& rng) {
  double e = 0.0;
  for (int l = 0; l <= 3; ++l) {
    const RadialProfile p = RadialProfile::gaussian_shell(0.8, 0.4, l, 3.0);
    for (int t = 0; t < 20; ++t) {
      const Vec3 x = rand_vec(rng).normalized() * 0.6;
      const double f1 = std::exp(-std::pow(x.norm() - 0.8, 2) / (2 * 0.16));
      const double f2 = std::exp(-std::pow(2 * x.norm() - 0.8, 2) / (2 * 0.16));
      e = std::max(e, (eval_profile(p, 2.0 * x) * f1 - eval_profile(p, x) * f2).cwiseAbs().maxCoeff());
    }
  }
  return e;
}

// --------------------------------------------------------------------- conv

double pointcloud_conv_oracle(Rng& rng) {
  const PointCloud cloud = rand_cloud(rng, 7, 1.0);
  const std::vector<double> f = rand_vector(rng, 7);
  const ScalarKernel k = [](const Vec3& t) { return std::exp(-t.squaredNorm()) * (1.0 + t.x() - 0.5 * t.z()); };
  const std::vector<double> got = pointcloud_conv(cloud, f, k);
  double e = 0.0;
  for (std::size_t i = cloud.size(); i-- > 0;) {
    double s = 0.0;
    for (std::size_t j = cloud.size(); j-- > 0;) s += k(cloud[i] - cloud[j]) * f[j];
    e = std::max(e, std::abs(s - got[i]));
  }
  return e;
}

double so3_conv_identity(Rng& rng) {
  const int lmax = 3;
  const RotationSampleSet grid = exact_euler_grid(4);
  const FeatureField f = rand_field(rng, 1, lmax, 1);
  const FeatureField gs = rand_field(rng, 1, lmax, 1);
  // Moments of g are its synthesis coefficients over (2l+1).
  std::vector<Eigen::MatrixXd> theta;
  for (int l = 0; l <= lmax; ++l) theta.push_back(gs.matrix(l, 0, 0) / (2 * l + 1));
  const RotationDomainSignal fs = oracle_sample(f, grid);
  const RotationDomainSignal h =
      brute_force_so3_conv(fs, [&](const Rotation& r) { return oracle_synthesize(gs, 0, 0, r); });
  return max_abs_diff(numeric_wigner_decompose(h, lmax), so3_component(f, theta));
}

// Vector-form TFN layer, written directly from the layer definition.
double vector_tfn_oracle(Rng& rng) {
  const PointCloud cloud = rand_cloud(rng, 5, 0.6);
  const KernelBasisSpec spec = gaussian_basis({2, 2}, 1.0);
  VectorField in(5, {2, 1, 2});
  for (int l = 0; l <= 2; ++l) {
    for (std::size_t p = 0; p < 5; ++p) {
      for (int m = 0; m < 2 * l + 1; ++m) {
        for (int c = 0; c < in.channels(l); ++c) in.at(l, p, m, c) = normal(rng);
      }
    }
  }
  const EmbeddedField emb = embed_tfn_input(in);
  const int C = emb.field.uniform_channels(), D = 2, Lout = 3;
  TFNWeights v(C, D, spec.radial_counts(), Lout);
  // V_{jd,crm} = delta_{j0} delta_{m0} W_{d,cr}
  std::map<TFNWeights::Key, std::vector<double>> wsmall;
  for (const auto& [key, _] : v.blocks()) {
    const auto [l, lp, L] = key;
    std::vector<double> ww = rand_vector(rng, static_cast<std::size_t>(D) * C * spec.radial_count(lp));
    for (int d = 0; d < D; ++d) {
      for (int c = 0; c < C; ++c) {
        for (int r = 0; r < spec.radial_count(lp); ++r) v.at(l, lp, L, L, d, c, r, l) = ww[(d * C + c) * spec.radial_count(lp) + r];
      }
    }
    wsmall[key] = ww;
  }
  v.bias() = rand_vector(rng, D);
  const VectorField got = extract_tfn_output(tfn_layer(cloud, emb.field, v, spec));

  double e = 0.0;
  for (int L = 0; L <= Lout; ++L) {
    for (std::size_t p = 0; p < 5; ++p) {
      for (int d = 0; d < D; ++d) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * L + 1);
        if (L == 0) out[0] = v.bias()[d];
        for (int l = 0; l <= 2; ++l) {
          for (int lp = 0; lp <= 1; ++lp) {
            if (!triangle_ok(l, lp, L)) continue;
            const auto& ww = wsmall.at({l, lp, L});
            for (int c = 0; c < in.channels(l); ++c) {
              for (int r = 0; r < spec.radial_count(lp); ++r) {
                Eigen::MatrixXd conv = Eigen::MatrixXd::Zero(2 * l + 1, 2 * lp + 1);
                for (std::size_t q = 0; q < 5; ++q) {
                  Eigen::VectorXd fv(2 * l + 1);
                  for (int m = 0; m < 2 * l + 1; ++m) fv[m] = in.at(l, q, m, c);
                  conv += fv * eval_kernel(spec, lp, r, cloud[p] - cloud[q]).transpose();
                }
                out += ww[(d * C + c) * spec.radial_count(lp) + r] * project_composite(L, l, lp, conv);
              }
            }
          }
        }
        for (int j = 0; j < 2 * L + 1; ++j) e = std::max(e, std::abs(out[j] - got.at(L, p, j, d)));
      }
    }
  }
  return e;
}

double r3_scalar_reduction(Rng& rng) {
  const PointCloud cloud = rand_cloud(rng, 6, 0.6);
  const FeatureField f = rand_field(rng, 6, 2, 2);
  const KernelBasisSpec spec = gaussian_basis({3}, 1.0);
  double e = 0.0;
  for (int r = 0; r < 3; ++r) {
    const FeatureField g = r3_component(cloud, f, spec, 0, r, 0);
    const ScalarKernel k = [&](const Vec3& t) { return eval_kernel(spec, 0, r, t)[0]; };
    for (int l = 0; l <= 2; ++l) {
      for (int a = 0; a < 2 * l + 1; ++a) {
        for (int b = 0; b < 2 * l + 1; ++b) {
          for (int c = 0; c < 2; ++c) {
            std::vector<double> s(6);
            for (std::size_t p = 0; p < 6; ++p) s[p] = f.at(l, p, a, b, c);
            const std::vector<double> conv = pointcloud_conv(cloud, s, k);
            for (std::size_t p = 0; p < 6; ++p) e = std::max(e, std::abs(conv[p] - g.at(l, p, a, b, c)));
          }
        }
      }
    }
  }
  return e;
}

double layer_linearity(Rng& rng) {
  const PointCloud cloud = rand_cloud(rng, 6, 0.6);
  const KernelBasisSpec spec = zernike_basis({2, 2}, 1.0);
  const FeatureField f = rand_field(rng, 6, 2, 2), g = rand_field(rng, 6, 2, 2);
  TFNWeights v1 = rand_tfn_weights(rng, 2, 2, spec.radial_counts(), 3);
  TFNWeights v2 = rand_tfn_weights(rng, 2, 2, spec.radial_counts(), 3);
  v1.bias().assign(2, 0.0);
  v2.bias().assign(2, 0.0);
  const double a = 0.7, b = -1.3;
  FeatureField fg = f;
  fg *= a;
  FeatureField gb = g;
  gb *= b;
  fg += gb;
  FeatureField lhs = tfn_layer(cloud, fg, v1, spec);
  FeatureField rhs = tfn_layer(cloud, f, v1, spec);
  rhs *= a;
  FeatureField t2 = tfn_layer(cloud, g, v1, spec);
  t2 *= b;
  rhs += t2;
  double e = max_abs_diff(lhs, rhs);

  TFNWeights v12 = v1;
  for (const auto& [key, blk] : v2.blocks()) {
    const auto [l, lp, L] = key;
    auto& dst = v12.block(l, lp, L);
    const auto& s1 = v1.block(l, lp, L);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a * s1[i] + b * blk[i];
  }
  FeatureField w_lhs = tfn_layer(cloud, f, v12, spec);
  FeatureField w_rhs = tfn_layer(cloud, f, v1, spec);
  w_rhs *= a;
  FeatureField w2 = tfn_layer(cloud, f, v2, spec);
  w2 *= b;
  w_rhs += w2;
  return std::max(e, max_abs_diff(w_lhs, w_rhs));
}

// -------------------------------------------------------------- equivalence

struct LayerCase {
  PointCloud cloud;
  FeatureField field;
  KernelBasisSpec spec;
  int lmax_out;
};

LayerCase rand_layer_case(Rng& rng, int lmax, std::size_t n, int channels) {
  const bool zern = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const int lp_max = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<int> counts;
  for (int l = 0; l <= lp_max; ++l) counts.push_back(std::uniform_int_distribution<int>(1, 2)(rng));
  KernelBasisSpec spec = zern ? zernike_basis(counts, 1.0) : gaussian_basis(counts, 1.0);
  return {rand_cloud(rng, n, 0.6), rand_field(rng, n, lmax, channels), spec, lmax + lp_max};
}

double se3_vs_tfn(Rng& rng) {
  double e = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int lmax = 1 + t % 3;
    const LayerCase c = rand_layer_case(rng, lmax, 5, 2);
    const SE3Weights w = rand_se3_weights(rng, 2, 2, c.spec.radial_counts(), c.lmax_out);
    e = std::max(e, max_abs_diff(se3_conv_layer(c.cloud, c.field, w, c.spec), tfn_layer(c.cloud, c.field, iota(w), c.spec)));
  }
  return e;
}

double tfn_vs_se3(Rng& rng) {
  double e = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int lmax = 1 + t % 3;
    const LayerCase c = rand_layer_case(rng, lmax, 5, 2);
    const TFNWeights v = rand_tfn_weights(rng, 2, 2, c.spec.radial_counts(), c.lmax_out);
    e = std::max(e, max_abs_diff(tfn_layer(c.cloud, c.field, v, c.spec), se3_conv_layer(c.cloud, c.field, iota_inv(v), c.spec)));
  }
  return e;
}

double iota_roundtrip(Rng& rng) {
  double e = 0.0;
  for (int t = 0; t < 6; ++t) {
    std::vector<int> radial;
    for (int l = 0; l <= t % 4; ++l) radial.push_back(1 + (t + l) % 2);
    const int lmax_out = 1 + t % 4;
    const SE3Weights w = rand_se3_weights(rng, 2, 3, radial, lmax_out);
    e = std::max(e, max_abs_diff(iota_inv(iota(w)), w));
    const TFNWeights v = rand_tfn_weights(rng, 2, 3, radial, lmax_out);
    e = std::max(e, max_abs_diff(iota(iota_inv(v)), v));
  }
  return e;
}

// ------------------------------------------------------------- separability

double separable_vs_bruteforce(Rng& rng) {
  const PointCloud cloud = rand_cloud(rng, 5, 0.6);
  const FeatureField f = rand_field(rng, 5, 1, 1);
  const KernelBasisSpec spec = gaussian_basis({1, 2}, 1.0);
  const int lp = 1, r = 1, mp = 0;
  // theta moments for degrees 0..2.
  std::vector<Eigen::MatrixXd> theta;
  for (int l = 0; l <= 2; ++l) theta.push_back(Eigen::MatrixXd::NullaryExpr(2 * l + 1, 2 * l + 1, [&]() { return normal(rng); }));
  const FeatureField two_pass = so3_component(r3_component(cloud, f, spec, lp, r, mp), theta);

  FeatureField theta_synth = FeatureField::uniform(1, 2, 1);
  for (int l = 0; l <= 2; ++l) theta_synth.set_matrix(l, 0, 0, (2 * l + 1) * theta[l]);
  const RotationSampleSet grid = exact_euler_grid(3);
  const SE3Kernel g = [&](const Vec3& t, const Rotation& h) {
    Eigen::MatrixXd k(1, 1);
    k(0, 0) = eval_kernel(spec, lp, r, t)[mp] * oracle_synthesize(theta_synth, 0, 0, h);
    return k;
  };
  const RotationDomainSignal bf = brute_force_se3_conv(cloud, oracle_sample(f, grid), g, 1);
  const RotationDomainSignal mine = oracle_sample(two_pass, grid);
  double e = 0.0;
  for (std::size_t i = 0; i < bf.values.size(); ++i) e = std::max(e, std::abs(bf.values[i] - mine.values[i]));
  return e;
}

double layer_factorization(Rng& rng) {
  double e = 0.0;
  for (int t = 0; t < 3; ++t) {
    const LayerCase c = rand_layer_case(rng, 1 + t % 2, 5, 2);
    const auto ks = kernel_indices(c.spec);
    const int mid = 3, D = 2;
    int J = 0;
    for (int L = 0; L <= c.lmax_out; ++L) J += (2 * L + 1) * (2 * L + 1);
    const Tensor3 A = rand_tensor(rng, mid, static_cast<int>(ks.size()), 2);
    const Tensor3 B = rand_tensor(rng, D, J, mid);
    const std::vector<double> b = rand_vector(rng, D);
    const FeatureField two = so3_layer(r3_layer(c.cloud, c.field, c.spec, A, std::vector<double>(mid, 0.0)),
                                       wigner_theta_basis(c.lmax_out), B, b);
    const FeatureField one = se3_conv_layer(c.cloud, c.field, separable_weights(B, A, c.spec, c.lmax_out, b), c.spec);
    e = std::max(e, max_abs_diff(one, two));
  }
  return e;
}

double se3_layer_vs_bruteforce(Rng& rng) {
  const PointCloud cloud = rand_cloud(rng, 4, 0.6);
  const FeatureField f = rand_field(rng, 4, 1, 2);
  const KernelBasisSpec spec = zernike_basis({1, 1}, 1.0);
  const SE3Weights w = rand_se3_weights(rng, 2, 2, spec.radial_counts(), 2);
  const FeatureField out = se3_conv_layer(cloud, f, w, spec);
  const RotationSampleSet grid = exact_euler_grid(3);
  const RotationDomainSignal bf = brute_force_se3_conv(cloud, oracle_sample(f, grid), se3_layer_kernel(w, spec), 2);
  const RotationDomainSignal mine = oracle_sample(out, grid);
  double e = 0.0;
  for (std::size_t p = 0; p < bf.n_points; ++p) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      for (int d = 0; d < 2; ++d) e = std::max(e, std::abs(bf.at(p, k, d) + w.bias()[d] - mine.at(p, k, d)));
    }
  }
  return e;
}

// -------------------------------------------------------------- equivariance

double layer_equivariance(Rng& rng, bool tfn_form) {
  const PointCloud cloud = rand_cloud(rng, 12, 0.6);
  const FeatureField f = rand_field(rng, 12, 2, 2);
  const KernelBasisSpec spec = gaussian_basis({2, 2, 1}, 1.0);
  const SE3Weights w = rand_se3_weights(rng, 2, 2, spec.radial_counts(), 4);
  const TFNWeights v = rand_tfn_weights(rng, 2, 2, spec.radial_counts(), 4);
  LayerClosure layer;
  if (tfn_form) {
    layer = [&](const PointCloud& c, const FeatureField& x) { return tfn_layer(c, x, v, spec); };
  } else {
    layer = [&](const PointCloud& c, const FeatureField& x) { return se3_conv_layer(c, x, w, spec); };
  }
  return equivariance_check("", layer, cloud, f, 20, 1e-8, rng()).max_abs_error;
}

// --------------------------------------------------------------- activation

double wt_roundtrip(Rng& rng) {
  const FeatureField f = rand_field(rng, 2, 3, 2);
  const RotationSampleSet grid = exact_euler_grid(7);
  return max_abs_diff(forward_wt(inverse_wt(f, grid), 3), f);
}

double wt_decompose_agreement(Rng& rng) {
  const RotationSampleSet grid = exact_euler_grid(3);
  RotationDomainSignal s{grid, 2, 2, rand_vector(rng, 2 * grid.size() * 2)};
  return max_abs_diff(forward_wt(s, 3), numeric_wigner_decompose(s, 3));
}

double relu_ico_equivariance(Rng& rng) {
  const RotationSampleSet ico = icosahedral_group();
  double e = 0.0;
  for (int t = 0; t < 3; ++t) {
    const FeatureField f = rand_field(rng, 2, 2 + t % 2, 2);
    const FeatureField base = relu_activation(f, ico);
    for (const auto& g : ico.rotations) {
      e = std::max(e, max_abs_diff(relu_activation(rotate_coefficients(f, g), ico), rotate_coefficients(base, g)));
    }
  }
  return e;
}

Measure relu_density_trend(Rng& rng) {
  const RotationSampleSet ico = icosahedral_group();
  const RotationSampleSet fps = fps_rotations(256, 0);
  double e60 = 0.0, e256 = 0.0;
  // Band limit 3: at degree 1 the group is exact for all products that
  // occur, so the ordering reverses there.
  for (int t = 0; t < 10; ++t) {
    const FeatureField f = rand_field(rng, 1, 3, 1);
    const FeatureField b60 = relu_activation(f, ico), b256 = relu_activation(f, fps);
    for (int k = 0; k < 10; ++k) {
      const Rotation r = rand_rot(rng);
      const FeatureField rf = rotate_coefficients(f, r);
      e60 = std::max(e60, max_abs_diff(relu_activation(rf, ico), rotate_coefficients(b60, r)));
      e256 = std::max(e256, max_abs_diff(relu_activation(rf, fps), rotate_coefficients(b256, r)));
    }
  }
  // Pass iff e256 < e60.
  return {e256, std::nextafter(e60, 0.0)};
}

// ---------------------------------------------------------------- multiview

ScalarStack rand_stack(Rng& rng, int layers, int cin, bool relu) {
  ScalarStack s;
  s.relu = relu;
  int c = cin;
  for (int li = 0; li < layers; ++li) {
    ScalarConvLayer layer;
    for (int k = 0; k < 3; ++k) {
      const Vec3 a = rand_vec(rng) * 0.3;
      const Vec3 b = rand_vec(rng);
      const double width = 0.5 + 0.2 * k;
      layer.kernels.push_back([a, b, width](const Vec3& t) { return std::exp(-(t - a).squaredNorm() / width) * (1.0 + b.dot(t)); });
    }
    const int out = 2 + li;
    layer.weights = rand_tensor(rng, out, 3, c);
    layer.bias = rand_vector(rng, out);
    s.layers.push_back(std::move(layer));
    c = out;
  }
  return s;
}

double multiview_check(Rng& rng, int layers, bool relu) {
  const PointCloud cloud = rand_cloud(rng, 8, 1.0);
  const Eigen::MatrixXd values = Eigen::MatrixXd::NullaryExpr(8, 2, [&]() { return normal(rng); });
  const ScalarStack stack = rand_stack(rng, layers, 2, relu);
  double e = 0.0;
  for (int t = 0; t < 5; ++t) {
    const Rotation r = rand_rot(rng);
    PointCloud rotated;
    for (const auto& x : cloud) rotated.push_back(r * x);
    const Eigen::MatrixXd ref = plain_cnn(rotated, values, stack);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      e = std::max(e, (multiview_eval(cloud, values, stack, r, i) - ref.row(i).transpose()).cwiseAbs().maxCoeff());
    }
  }
  return e;
}

// ---------------------------------------------------------------- structure

double ico_size(Rng&) { return std::abs(static_cast<double>(icosahedral_group().size()) - 60.0); }

double ico_axioms(Rng&) {
  const RotationSampleSet g = icosahedral_group();
  auto find = [&](const Mat3& m) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : g.rotations) best = std::min(best, (e.matrix() - m).cwiseAbs().maxCoeff());
    return best;
  };
  double e = find(Mat3::Identity());
  for (const auto& a : g.rotations) {
    e = std::max(e, find(a.matrix().transpose()));
    for (const auto& b : g.rotations) e = std::max(e, find(a.matrix() * b.matrix()));
    // Orders 1, 2, 3, 5 correspond to angles 0, pi, 2pi/3, 2pi/5, 4pi/5.
    double d = std::numeric_limits<double>::infinity();
    for (double ang : {0.0, std::numbers::pi, 2 * std::numbers::pi / 3, 2 * std::numbers::pi / 5, 4 * std::numbers::pi / 5}) {
      d = std::min(d, std::abs(a.angle() - ang));
    }
    e = std::max(e, d);
  }
  double wsum = 0.0;
  for (double w : g.weights) wsum += w;
  return std::max(e, std::abs(wsum - 1.0));
}

double wigner_block_dims(Rng& rng) {
  double e = 0.0;
  const Rotation r = rand_rot(rng);
  for (int l = 0; l <= 8; ++l) {
    const Eigen::MatrixXd d = wigner_D_real(l, r);
    e = std::max({e, std::abs(static_cast<double>(d.rows() - (2 * l + 1))), std::abs(static_cast<double>(d.cols() - (2 * l + 1)))});
    e = std::max(e, std::abs(static_cast<double>(eval_real_spherical_harmonics(l, Vec3(0.1, 0.2, 0.3)).size() - (2 * l + 1))));
  }
  return e;
}

double cg_existence(Rng&) {
  double mismatches = 0.0;
  for (int l = 0; l <= 4; ++l) {
    for (int lp = 0; lp <= 4; ++lp) {
      for (int L = 0; L <= 9; ++L) {
        const bool expect = std::abs(l - lp) <= L && L <= l + lp;
        bool built = true;
        try {
          const auto q = cg_tensor_real(l, lp, L);
          if (q->flat().rows() != (2 * l + 1) * (2 * lp + 1) || q->flat().cols() != 2 * L + 1) mismatches += 1.0;
        } catch (const TriangleViolation&) {
          built = false;
        }
        if (built != expect) mismatches += 1.0;
      }
    }
  }
  return mismatches;
}

double grid_properties(Rng&) {
  double e = 0.0;
  for (int B = 1; B <= 9; ++B) {
    const RotationSampleSet g = exact_euler_grid(B);
    e = std::max(e, std::abs(static_cast<double>(g.size()) - 4.0 * B * B * B));
    double s = 0.0;
    for (double w : g.weights) s += w;
    e = std::max(e, std::abs(s - 1.0));
  }
  // Exactness band: l + l' < 2B at B = 4.
  return std::max(e, schur_orthogonality(4, 3));
}

double fps_properties(Rng&) {
  double e = 0.0;
  const RotationSampleSet one = fps_rotations(1, 7);
  e = std::max(e, (one.rotations[0].matrix() - Mat3::Identity()).cwiseAbs().maxCoeff());
  const RotationSampleSet two = fps_rotations(2, 7);
  e = std::max(e, std::abs(geodesic_distance(two.rotations[0], two.rotations[1]) - std::numbers::pi));
  const RotationSampleSet a = fps_rotations(64, 3), b = fps_rotations(64, 3);
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, (a.rotations[i].matrix() - b.rotations[i].matrix()).cwiseAbs().maxCoeff());
  double prev = std::numbers::pi;
  for (int n : {2, 4, 8, 16, 32, 64}) {
    const double d = min_pairwise_distance(fps_rotations(n, 0));
    if (d > prev + 1e-12) e = std::max(e, d - prev);
    prev = d;
  }
  return e;
}

// ----------------------------------------------------------------- registry

using Body = std::function<double(Rng&)>;

Check make_check(std::string name, std::string suite, int criterion, double tol, Body body) {
  Check c;
  c.name = name;
  c.suite = std::move(suite);
  c.criterion = criterion;
  c.run = [name, tol, body](std::uint64_t seed) {
    Rng rng(seed ^ fnv1a(name));
    const auto t0 = std::chrono::steady_clock::now();
    const double err = body(rng);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return make_result(name, err, tol, ms);
  };
  return c;
}

std::vector<Check> build_registry() {
  std::vector<Check> r;
  r.push_back(make_check("sh_steerability", "harmonics", 1, 1e-9, steerability));
  r.push_back(make_check("sh_orthonormality", "harmonics", 0, 1e-9, sh_orthonormality));
  r.push_back(make_check("sh_homogeneity", "harmonics", 0, 1e-12, sh_homogeneity));
  r.push_back(make_check("sh_legendre_oracle", "harmonics", 0, 1e-12, sh_legendre_oracle));
  r.push_back(make_check("euler_roundtrip", "harmonics", 0, 1e-12, euler_roundtrip));
  r.push_back(make_check("wigner_representation", "wigner", 2, 1e-9, wigner_representation));
  r.push_back(make_check("wigner_unitarity", "wigner", 2, 1e-9, wigner_unitarity));
  r.push_back(make_check("wigner_schur_grid_b9", "wigner", 3, 1e-9, [](Rng&) { return schur_orthogonality(9, 4); }));
  r.push_back(make_check("cg_orthogonality", "clebsch", 4, 1e-10, cg_orthogonality));
  r.push_back(make_check("cg_completeness", "clebsch", 4, 1e-10, cg_completeness));
  r.push_back(make_check("cg_decomposition", "clebsch", 4, 1e-9, cg_decomposition));
  r.push_back(make_check("cg_symmetries", "clebsch", 5, 1e-12, cg_symmetries));
  r.push_back(make_check("cg_reference_values", "clebsch", 0, 1e-14, cg_reference_values));
  r.push_back(make_check("cg_scaled_orthogonality", "clebsch", 0, 1e-10, cg_scaled_orthogonality));
  r.push_back(make_check("kernel_steerability", "basis", 0, 1e-9, kernel_steerability));
  r.push_back(make_check("zernike_radial_orthogonality", "basis", 13, 1e-8, zernike_radial_orthogonality));
  r.push_back(make_check("zernike_ball_orthogonality", "basis", 13, 1e-8, zernike_ball_orthogonality));
  r.push_back(make_check("gaussian_shell_normalization", "basis", 0, 1e-10, gaussian_shell_normalization));
  r.push_back(make_check("pointcloud_conv_oracle", "conv", 0, 1e-12, pointcloud_conv_oracle));
  r.push_back(make_check("so3_conv_coefficients", "conv", 6, 1e-8, so3_conv_identity));
  r.push_back(make_check("vector_tfn_oracle", "conv", 0, 1e-12, vector_tfn_oracle));
  r.push_back(make_check("r3_scalar_reduction", "conv", 0, 1e-12, r3_scalar_reduction));
  r.push_back(make_check("layer_linearity", "conv", 0, 1e-12, layer_linearity));
  r.push_back(make_check("se3_equals_tfn_iota", "equivalence", 8, 1e-10, se3_vs_tfn));
  r.push_back(make_check("tfn_equals_se3_iota_inv", "equivalence", 8, 1e-10, tfn_vs_se3));
  r.push_back(make_check("iota_roundtrip", "equivalence", 8, 1e-10, iota_roundtrip));
  r.push_back(make_check("separable_vs_bruteforce", "separability", 7, 1e-8, separable_vs_bruteforce));
  r.push_back(make_check("layer_factorization", "separability", 7, 1e-10, layer_factorization));
  r.push_back(make_check("se3_layer_vs_bruteforce", "separability", 0, 1e-8, se3_layer_vs_bruteforce));
  r.push_back(make_check("tfn_layer_equivariance", "equivariance", 9, 1e-8, [](Rng& g) { return layer_equivariance(g, true); }));
  r.push_back(make_check("se3_layer_equivariance", "equivariance", 9, 1e-8, [](Rng& g) { return layer_equivariance(g, false); }));
  r.push_back(make_check("wt_roundtrip_grid", "activation", 0, 1e-9, wt_roundtrip));
  r.push_back(make_check("wt_decompose_agreement", "activation", 0, 1e-12, wt_decompose_agreement));
  r.push_back(make_check("relu_ico_equivariance", "activation", 10, 1e-10, relu_ico_equivariance));
  {
    Check c;
    c.name = "relu_density_trend";
    c.suite = "activation";
    c.criterion = 10;
    c.run = [](std::uint64_t seed) {
      Rng rng(seed ^ fnv1a("relu_density_trend"));
      const auto t0 = std::chrono::steady_clock::now();
      const Measure m = relu_density_trend(rng);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return make_result("relu_density_trend", m.err, m.tol, ms);
    };
    r.push_back(std::move(c));
  }
  r.push_back(make_check("multiview_two_layer", "multiview", 11, 1e-9, [](Rng& g) { return multiview_check(g, 2, true); }));
  r.push_back(make_check("multiview_linear", "multiview", 0, 1e-12, [](Rng& g) { return multiview_check(g, 1, false); }));
  r.push_back(make_check("ico_size", "structure", 12, 0.0, ico_size));
  r.push_back(make_check("wigner_block_dims", "structure", 12, 0.0, wigner_block_dims));
  r.push_back(make_check("cg_existence", "structure", 12, 0.0, cg_existence));
  r.push_back(make_check("ico_group_axioms", "sampling", 0, 1e-9, ico_axioms));
  r.push_back(make_check("grid_properties", "sampling", 0, 1e-10, grid_properties));
  r.push_back(make_check("fps_properties", "sampling", 0, 1e-12, fps_properties));
  return r;
}

}  // namespace

const std::vector<Check>& registered_checks() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : registered_checks()) {
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  }
  return out;
}

VerificationReport run_verification(const std::string& suite, std::uint64_t seed, std::ostream* progress) {
  const bool all = suite.empty() || suite == "all";
  if (!all) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw std::invalid_argument("unknown suite: " + suite);
  }
  VerificationReport report;
  for (const auto& c : registered_checks()) {
    if (!all && c.suite != suite) continue;
    CheckResult res;
    try {
      res = c.run(seed);
    } catch (const std::exception& ex) {
      res = make_result(c.name, std::numeric_limits<double>::infinity(), 0.0);
      if (progress) *progress << "# " << c.name << " threw: " << ex.what() << "\n";
    }
    if (progress) {
      VerificationReport one{{res}};
      std::ostringstream line;
      one.write(line);
      *progress << line.str().substr(0, line.str().find("SUMMARY"));
      progress->flush();
    }
    report.checks.push_back(res);
  }
  return report;
}

}  // namespace se3conv
