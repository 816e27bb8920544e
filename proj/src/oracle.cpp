#include "se3conv/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"

namespace se3conv {

CheckResult make_result(std::string name, double err, double tol, double ms) {
  CheckResult r;
  r.name = std::move(name);
  r.max_abs_error = err;
  r.tolerance = tol;
  r.pass = std::isfinite(err) && err <= tol;
  r.runtime_ms = ms;
  return r;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

void VerificationReport::write(std::ostream& os) const {
  char buf[512];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof(buf), "CHECK %s err=%.3e tol=%.3e %s %.0fms\n", c.name.c_str(), c.max_abs_error,
                  c.tolerance, c.pass ? "PASS" : "FAIL", c.runtime_ms);
    os << buf;
  }
  os << "SUMMARY " << passed() << "/" << checks.size() << "\n";
}

Eigen::MatrixXd oracle_wigner_real(int l, const Rotation& r) {
  const EulerZYZ e = euler_from_rotation(r);
  const Eigen::MatrixXcd dh = wigner_D_complex(l, e);
  const Eigen::MatrixXcd c = transition_matrix(l);
  const int n = 2 * l + 1;
  Eigen::MatrixXd out(n, n);
  // D_{mn} = sum_{a,b} C_{am} Dhat_{ab} conj(C_{bn}); C_{am} is nonzero only
  // for a = +-m.
  for (int m = -l; m <= l; ++m) {
    for (int k = -l; k <= l; ++k) {
      std::complex<double> s = 0.0;
      for (int a : {m, -m}) {
        for (int b : {k, -k}) {
          s += c(a + l, m + l) * dh(a + l, b + l) * std::conj(c(b + l, k + l));
          if (k == 0) break;
        }
        if (m == 0) break;
      }
      out(m + l, k + l) = s.real();
    }
  }
  return out;
}

double oracle_synthesize(const FeatureField& f, std::size_t p, int c, const Rotation& r) {
  double s = 0.0;
  for (int l = 0; l <= f.max_degree(); ++l) {
    if (c >= f.channels(l)) continue;
    const Eigen::MatrixXd d = oracle_wigner_real(l, r);
    for (int i = 0; i < 2 * l + 1; ++i) {
      for (int j = 0; j < 2 * l + 1; ++j) s += f.at(l, p, i, j, c) * d(i, j);
    }
  }
  return s;
}

RotationDomainSignal brute_force_se3_conv(const PointCloud& cloud, const RotationDomainSignal& f, const SE3Kernel& g,
                                          int out_channels) {
  const auto& set = f.set;
  if (f.n_points != cloud.size() || f.values.size() != f.n_points * set.size() * f.channels) {
    throw SizeMismatch("sampled field does not match the cloud and grid");
  }
  RotationDomainSignal out{set, cloud.size(), out_channels, {}};
  out.values.assign(cloud.size() * set.size() * out_channels, 0.0);
  std::vector<Rotation> inv;
  for (const auto& h : set.rotations) inv.push_back(h.inverse());
  for (std::size_t p = 0; p < cloud.size(); ++p) {
    for (std::size_t k = 0; k < set.size(); ++k) {
      Eigen::VectorXd acc = Eigen::VectorXd::Zero(out_channels);
      for (std::size_t q = 0; q < cloud.size(); ++q) {
        for (std::size_t h = 0; h < set.size(); ++h) {
          const Eigen::MatrixXd kern = g(inv[h] * (cloud[p] - cloud[q]), inv[h] * set.rotations[k]);
          Eigen::VectorXd fv(f.channels);
          for (int c = 0; c < f.channels; ++c) fv[c] = f.at(q, h, c);
          acc += set.weights[h] * (kern * fv);
        }
      }
      for (int d = 0; d < out_channels; ++d) out.at(p, k, d) = acc[d];
    }
  }
  return out;
}

RotationDomainSignal brute_force_so3_conv(const RotationDomainSignal& f, const std::function<double(const Rotation&)>& g) {
  const auto& set = f.set;
  if (f.values.size() != f.n_points * set.size() * f.channels) throw SizeMismatch("sampled function has the wrong size");
  RotationDomainSignal out = f;
  std::fill(out.values.begin(), out.values.end(), 0.0);
  for (std::size_t k = 0; k < set.size(); ++k) {
    std::vector<double> gk(set.size());
    for (std::size_t h = 0; h < set.size(); ++h) gk[h] = set.weights[h] * g(set.rotations[h].inverse() * set.rotations[k]);
    for (std::size_t p = 0; p < f.n_points; ++p) {
      for (int c = 0; c < f.channels; ++c) {
        double s = 0.0;
        for (std::size_t h = 0; h < set.size(); ++h) s += f.at(p, h, c) * gk[h];
        out.at(p, k, c) = s;
      }
    }
  }
  return out;
}

FeatureField numeric_wigner_decompose(const RotationDomainSignal& samples, int lmax) {
  const auto& set = samples.set;
  FeatureField out = FeatureField::uniform(samples.n_points, lmax, samples.channels);
  for (int l = 0; l <= lmax; ++l) {
    std::vector<Eigen::MatrixXd> d;
    for (const auto& r : set.rotations) d.push_back(oracle_wigner_real(l, r));
    for (int i = 0; i < 2 * l + 1; ++i) {
      for (int j = 0; j < 2 * l + 1; ++j) {
        for (std::size_t p = 0; p < samples.n_points; ++p) {
          for (int c = 0; c < samples.channels; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < set.size(); ++k) s += set.weights[k] * samples.at(p, k, c) * d[k](i, j);
            out.at(l, p, i, j, c) = (2 * l + 1) * s;
          }
        }
      }
    }
  }
  return out;
}

RotationDomainSignal oracle_sample(const FeatureField& f, const RotationSampleSet& set) {
  int C = 0;
  for (int c : f.channel_counts()) C = std::max(C, c);
  RotationDomainSignal s{set, f.num_points(), C, {}};
  s.values.assign(f.num_points() * set.size() * C, 0.0);
  for (std::size_t p = 0; p < f.num_points(); ++p) {
    for (std::size_t k = 0; k < set.size(); ++k) {
      for (int c = 0; c < C; ++c) s.at(p, k, c) = oracle_synthesize(f, p, c, set.rotations[k]);
    }
  }
  return s;
}

SE3Kernel se3_layer_kernel(const SE3Weights& w, const KernelBasisSpec& spec) {
  return [w, spec](const Vec3& t, const Rotation& h) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(w.out_channels(), w.in_channels());
    std::vector<Eigen::MatrixXd> d;
    for (int L = 0; L <= w.max_out_degree(); ++L) d.push_back((2 * L + 1) * oracle_wigner_real(L, h));
    for (int lp = 0; lp <= spec.max_degree; ++lp) {
      for (int r = 0; r < spec.radial_count(lp); ++r) {
        const Eigen::VectorXd kap = eval_kernel(spec, lp, r, t);
        for (int L = 0; L <= w.max_out_degree(); ++L) {
          for (int n = 0; n < 2 * L + 1; ++n) {
            for (int d_ = 0; d_ < w.out_channels(); ++d_) {
              for (int c = 0; c < w.in_channels(); ++c) {
                double s = 0.0;
                for (int mp = 0; mp < 2 * lp + 1; ++mp) {
                  for (int M = 0; M < 2 * L + 1; ++M) s += w.at(lp, L, n, d_, c, r, mp, M) * kap[mp] * d[L](M, n);
                }
                g(d_, c) += s;
              }
            }
          }
        }
      }
    }
    return g;
  };
}

namespace {

Rotation random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  return Rotation::from_matrix(q.toRotationMatrix());
}

}  // namespace

CheckResult equivariance_check(const std::string& name, const LayerClosure& layer, const PointCloud& cloud,
                               const FeatureField& field, int trials, double tolerance, std::uint64_t seed,
                               const std::vector<Rotation>& rotations) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const FeatureField base = layer(cloud, field);
  const std::size_t n = cloud.size();
  const int count = rotations.empty() ? trials : static_cast<int>(rotations.size());
  double err = 0.0;
  for (int t = 0; t < count; ++t) {
    const Rotation r = rotations.empty() ? random_rotation(rng) : rotations[t];
    const Vec3 shift(u(rng), u(rng), u(rng));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    // Moved cloud: point k of the new cloud is R X_{perm[k]} + t.
    PointCloud moved(n);
    FeatureField moved_field(n, field.channel_counts());
    for (std::size_t k = 0; k < n; ++k) moved[k] = r * cloud[perm[k]] + shift;
    for (int l = 0; l <= field.max_degree(); ++l) {
      const Eigen::MatrixXd d = oracle_wigner_real(l, r);
      for (std::size_t k = 0; k < n; ++k) {
        for (int c = 0; c < field.channels(l); ++c) moved_field.set_matrix(l, k, c, d * field.matrix(l, perm[k], c));
      }
    }
    const FeatureField got = layer(moved, moved_field);
    if (got.channel_counts() != base.channel_counts() || got.num_points() != n) {
      throw ShapeMismatch("layer output shape changed under the group action");
    }
    for (int L = 0; L <= base.max_degree(); ++L) {
      const Eigen::MatrixXd d = oracle_wigner_real(L, r);
      for (std::size_t k = 0; k < n; ++k) {
        for (int c = 0; c < base.channels(L); ++c) {
          const Eigen::MatrixXd expect = d * base.matrix(L, perm[k], c);
          err = std::max(err, (got.matrix(L, k, c) - expect).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return make_result(name, err, tolerance, ms);
}

Eigen::MatrixXd plain_cnn(const PointCloud& cloud, const Eigen::MatrixXd& values, const ScalarStack& stack) {
  Eigen::MatrixXd x = values;
  for (std::size_t li = 0; li < stack.layers.size(); ++li) {
    const auto& layer = stack.layers[li];
    Eigen::MatrixXd y(x.rows(), layer.weights.d0);
    for (Eigen::Index p = 0; p < x.rows(); ++p) {
      for (int i = 0; i < layer.weights.d0; ++i) {
        double s = layer.bias[i];
        for (Eigen::Index q = 0; q < x.rows(); ++q) {
          const Vec3 t = cloud[p] - cloud[q];
          for (std::size_t k = 0; k < layer.kernels.size(); ++k) {
            const double kv = layer.kernels[k](t);
            for (Eigen::Index c = 0; c < x.cols(); ++c) s += layer.weights(i, static_cast<int>(k), static_cast<int>(c)) * kv * x(q, c);
          }
        }
        y(p, i) = s;
      }
    }
    if (stack.relu && li + 1 < stack.layers.size()) y = y.cwiseMax(0.0);
    x = std::move(y);
  }
  return x;
}

}  // namespace se3conv
