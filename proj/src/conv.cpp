#include "se3conv/conv.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/errors.hpp"

namespace se3conv {

std::vector<double> pointcloud_conv(const PointCloud& cloud, const std::vector<double>& f, const ScalarKernel& kappa) {
  if (f.size() != cloud.size()) throw SizeMismatch("scalar field length differs from the cloud size");
  std::vector<double> out(cloud.size(), 0.0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = 0; j < cloud.size(); ++j) out[i] += f[j] * kappa(cloud[i] - cloud[j]);
  }
  return out;
}

CompositeArray::CompositeArray(std::size_t n_points, int max_degree, const std::vector<int>& radial_counts,
                               int channels)
    : n_(n_points), lmax_(max_degree), radial_(radial_counts), c_(channels) {
  for (int l = 0; l <= lmax_; ++l) {
    for (std::size_t lp = 0; lp < radial_.size(); ++lp) {
      offsets_.push_back(blocks_.size());
      const std::size_t nl = 2 * l + 1, np = 2 * lp + 1;
      for (int r = 0; r < radial_[lp]; ++r) blocks_.emplace_back(n_ * nl * nl * np * c_, 0.0);
    }
  }
}

namespace {

void check_cloud_field(const PointCloud& cloud, const FeatureField& field) {
  validate_cloud(cloud);
  if (field.num_points() != cloud.size()) {
    throw ShapeMismatch("field has " + std::to_string(field.num_points()) + " points, cloud has " +
                        std::to_string(cloud.size()));
  }
}

int output_degree(const FeatureField& field, int lp_max, const LayerOptions& opts) {
  int L = field.max_degree() + lp_max;
  if (opts.truncate) {
    if (*opts.truncate < 0) throw BandLimitMismatch("truncation degree must be nonnegative");
    L = std::min(L, *opts.truncate);
  }
  return L;
}

// P[i][m][c] = sum_{a,b} Q^{L,(l,l')}_{i,a,b} A[p][a][m][b][c]
std::vector<double> project_point(const CompositeArray& comp, std::size_t p, int l, int lp, int r, int L,
                                  const CGTensorReal& q) {
  const int nl = 2 * l + 1, np = 2 * lp + 1, nL = 2 * L + 1, C = comp.channels();
  std::vector<double> out(static_cast<std::size_t>(nL) * nl * C, 0.0);
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < np; ++b) {
      const auto row = q.flat().row(a * np + b);
      for (int m = 0; m < nl; ++m) {
        for (int c = 0; c < C; ++c) {
          const double v = comp.at(l, lp, r, p, a, m, b, c);
          if (v == 0.0) continue;
          for (int i = 0; i < nL; ++i) out[(static_cast<std::size_t>(i) * nl + m) * C + c] += row(i) * v;
        }
      }
    }
  }
  return out;
}

// G[i][mp][M][c] = sum_l sum_m P^{l}[i][m][c] Q^{(l,l'),L}_{m,mp,M}
std::vector<double> r3_point(const CompositeArray& comp, std::size_t p, int lp, int r, int L) {
  const int np = 2 * lp + 1, nL = 2 * L + 1, C = comp.channels();
  std::vector<double> g(static_cast<std::size_t>(nL) * np * nL * C, 0.0);
  for (int l = 0; l <= comp.max_degree(); ++l) {
    if (!triangle_ok(l, lp, L)) continue;
    const auto q = cg_tensor_real(l, lp, L);
    const std::vector<double> P = project_point(comp, p, l, lp, r, L, *q);
    const int nl = 2 * l + 1;
    for (int i = 0; i < nL; ++i) {
      for (int m = 0; m < nl; ++m) {
        for (int c = 0; c < C; ++c) {
          const double v = P[(static_cast<std::size_t>(i) * nl + m) * C + c];
          if (v == 0.0) continue;
          for (int mp = 0; mp < np; ++mp) {
            for (int M = 0; M < nL; ++M) g[((static_cast<std::size_t>(i) * np + mp) * nL + M) * C + c] += v * q->at(m, mp, M);
          }
        }
      }
    }
  }
  return g;
}

}  // namespace

CompositeArray steerable_feature_conv(const PointCloud& cloud, const FeatureField& field, const KernelBasisSpec& spec,
                                      bool exclude_self) {
  check_cloud_field(cloud, field);
  spec.validate();
  const int C = field.uniform_channels();
  CompositeArray comp(cloud.size(), field.max_degree(), spec.radial_counts(), C);
  for (std::size_t p = 0; p < cloud.size(); ++p) {
    for (std::size_t q = 0; q < cloud.size(); ++q) {
      if (exclude_self && p == q) continue;
      const auto kern = eval_kernel_all(spec, cloud[p] - cloud[q]);
      for (int l = 0; l <= field.max_degree(); ++l) {
        const int nl = 2 * l + 1;
        for (int lp = 0; lp <= spec.max_degree; ++lp) {
          for (int r = 0; r < spec.radial_count(lp); ++r) {
            const Eigen::VectorXd& k = kern[lp][r];
            if (k.isZero(0.0)) continue;
            for (int a = 0; a < nl; ++a) {
              for (int m = 0; m < nl; ++m) {
                for (int c = 0; c < C; ++c) {
                  const double f = field.at(l, q, a, m, c);
                  if (f == 0.0) continue;
                  for (int b = 0; b < 2 * lp + 1; ++b) comp.at(l, lp, r, p, a, m, b, c) += f * k[b];
                }
              }
            }
          }
        }
      }
    }
  }
  return comp;
}

FeatureField tfn_layer(const PointCloud& cloud, const FeatureField& field, const TFNWeights& v,
                       const KernelBasisSpec& spec, const LayerOptions& opts) {
  check_cloud_field(cloud, field);
  const int C = field.uniform_channels();
  if (C != v.in_channels()) throw ShapeMismatch("field channels differ from the weight input channels");
  if (spec.radial_counts() != v.radial_counts()) throw ShapeMismatch("kernel radial counts differ from the weights");
  const int Lout = output_degree(field, spec.max_degree, opts);
  const int D = v.out_channels();
  const CompositeArray comp = steerable_feature_conv(cloud, field, spec, opts.exclude_self);
  FeatureField out = FeatureField::uniform(cloud.size(), Lout, D);

  for (std::size_t p = 0; p < cloud.size(); ++p) {
    for (int l = 0; l <= field.max_degree(); ++l) {
      for (int lp = 0; lp <= spec.max_degree; ++lp) {
        for (int r = 0; r < spec.radial_count(lp); ++r) {
          for (int L = std::abs(l - lp); L <= std::min({l + lp, Lout, v.max_out_degree()}); ++L) {
            const auto q = cg_tensor_real(l, lp, L);
            const std::vector<double> P = project_point(comp, p, l, lp, r, L, *q);
            const int nl = 2 * l + 1, nL = 2 * L + 1;
            for (int i = 0; i < nL; ++i) {
              for (int j = 0; j < nL; ++j) {
                for (int d = 0; d < D; ++d) {
                  double s = 0.0;
                  for (int c = 0; c < C; ++c) {
                    for (int m = 0; m < nl; ++m) {
                      s += P[(static_cast<std::size_t>(i) * nl + m) * C + c] * v.at(l, lp, L, j, d, c, r, m);
                    }
                  }
                  out.at(L, p, i, j, d) += s;
                }
              }
            }
          }
        }
      }
    }
    for (int d = 0; d < D; ++d) out.at(0, p, 0, 0, d) += v.bias()[d];
  }
  return out;
}

FeatureField se3_conv_layer(const PointCloud& cloud, const FeatureField& field, const SE3Weights& w,
                            const KernelBasisSpec& spec, const LayerOptions& opts) {
  check_cloud_field(cloud, field);
  const int C = field.uniform_channels();
  if (C != w.in_channels()) throw ShapeMismatch("field channels differ from the weight input channels");
  if (spec.radial_counts() != w.radial_counts()) throw ShapeMismatch("kernel radial counts differ from the weights");
  const int Lout = output_degree(field, spec.max_degree, opts);
  const int D = w.out_channels();
  const CompositeArray comp = steerable_feature_conv(cloud, field, spec, opts.exclude_self);
  FeatureField out = FeatureField::uniform(cloud.size(), Lout, D);

  // Separable route: spatial components g = r3(f, kappa^{l'}_{r m'}) first,
  // then the rotational part picks column M of g^L into column j.
  for (std::size_t p = 0; p < cloud.size(); ++p) {
    for (int lp = 0; lp <= spec.max_degree; ++lp) {
      for (int r = 0; r < spec.radial_count(lp); ++r) {
        for (int L = 0; L <= std::min(Lout, w.max_out_degree()); ++L) {
          const std::vector<double> g = r3_point(comp, p, lp, r, L);
          const int np = 2 * lp + 1, nL = 2 * L + 1;
          for (int i = 0; i < nL; ++i) {
            for (int j = 0; j < nL; ++j) {
              for (int d = 0; d < D; ++d) {
                double s = 0.0;
                for (int c = 0; c < C; ++c) {
                  for (int mp = 0; mp < np; ++mp) {
                    for (int M = 0; M < nL; ++M) {
                      s += g[((static_cast<std::size_t>(i) * np + mp) * nL + M) * C + c] * w.at(lp, L, j, d, c, r, mp, M);
                    }
                  }
                }
                out.at(L, p, i, j, d) += s;
              }
            }
          }
        }
      }
    }
    for (int d = 0; d < D; ++d) out.at(0, p, 0, 0, d) += w.bias()[d];
  }
  return out;
}

FeatureField so3_component(const FeatureField& field, const std::vector<Eigen::MatrixXd>& theta) {
  if (static_cast<int>(theta.size()) != field.max_degree() + 1) {
    throw BandLimitMismatch("kernel moments cover degrees 0.." + std::to_string(static_cast<int>(theta.size()) - 1) +
                            ", field covers 0.." + std::to_string(field.max_degree()));
  }
  FeatureField out(field.num_points(), field.channel_counts());
  for (int l = 0; l <= field.max_degree(); ++l) {
    if (theta[l].rows() != 2 * l + 1 || theta[l].cols() != 2 * l + 1) {
      throw ShapeMismatch("kernel moment block must be (2l+1) x (2l+1)");
    }
    for (std::size_t p = 0; p < field.num_points(); ++p) {
      for (int c = 0; c < field.channels(l); ++c) out.set_matrix(l, p, c, field.matrix(l, p, c) * theta[l]);
    }
  }
  return out;
}

namespace {

// One spatial component, degrees 0..min(Lout, lmax + l').
FeatureField r3_from_composite(const CompositeArray& comp, int lp, int r, int mp, int Lout) {
  const int C = comp.channels();
  const int top = std::min(Lout, comp.max_degree() + lp);
  FeatureField out = FeatureField::uniform(comp.num_points(), std::max(top, 0), C);
  const int np = 2 * lp + 1;
  for (std::size_t p = 0; p < comp.num_points(); ++p) {
    for (int L = 0; L <= top; ++L) {
      const std::vector<double> g = r3_point(comp, p, lp, r, L);
      const int nL = 2 * L + 1;
      for (int i = 0; i < nL; ++i) {
        for (int M = 0; M < nL; ++M) {
          for (int c = 0; c < C; ++c) out.at(L, p, i, M, c) = g[((static_cast<std::size_t>(i) * np + mp) * nL + M) * C + c];
        }
      }
    }
  }
  return out;
}

}  // namespace

FeatureField r3_component(const PointCloud& cloud, const FeatureField& field, const KernelBasisSpec& spec, int lp,
                          int r, int mp, const LayerOptions& opts) {
  if (lp < 0 || lp > spec.max_degree || r < 0 || r >= spec.radial_count(lp) || mp < 0 || mp > 2 * lp) {
    throw IndexOutOfRange("spatial kernel index out of range");
  }
  const CompositeArray comp = steerable_feature_conv(cloud, field, spec, opts.exclude_self);
  return r3_from_composite(comp, lp, r, mp, output_degree(field, lp, opts));
}

std::vector<KernelIndex> kernel_indices(const KernelBasisSpec& spec) {
  std::vector<KernelIndex> out;
  for (int lp = 0; lp <= spec.max_degree; ++lp) {
    for (int r = 0; r < spec.radial_count(lp); ++r) {
      for (int mp = 0; mp < 2 * lp + 1; ++mp) out.push_back({lp, r, mp});
    }
  }
  return out;
}

FeatureField r3_layer(const PointCloud& cloud, const FeatureField& field, const KernelBasisSpec& spec,
                      const Tensor3& A, const std::vector<double>& bias, const LayerOptions& opts) {
  check_cloud_field(cloud, field);
  const int C = field.uniform_channels();
  const auto ks = kernel_indices(spec);
  if (A.d1 != static_cast<int>(ks.size()) || A.d2 != C || static_cast<int>(bias.size()) != A.d0) {
    throw ShapeMismatch("spatial layer weights do not match the kernel basis and channels");
  }
  const int Lout = output_degree(field, spec.max_degree, opts);
  const CompositeArray comp = steerable_feature_conv(cloud, field, spec, opts.exclude_self);
  FeatureField out = FeatureField::uniform(cloud.size(), Lout, A.d0);
  for (std::size_t k = 0; k < ks.size(); ++k) {
    const FeatureField g = r3_from_composite(comp, ks[k].lp, ks[k].r, ks[k].mp, Lout);
    for (int L = 0; L <= g.max_degree(); ++L) {
      const int nL = 2 * L + 1;
      for (std::size_t p = 0; p < cloud.size(); ++p) {
        for (int a = 0; a < nL; ++a) {
          for (int b = 0; b < nL; ++b) {
            for (int i = 0; i < A.d0; ++i) {
              double s = 0.0;
              for (int c = 0; c < C; ++c) s += A(i, static_cast<int>(k), c) * g.at(L, p, a, b, c);
              out.at(L, p, a, b, i) += s;
            }
          }
        }
      }
    }
  }
  for (std::size_t p = 0; p < cloud.size(); ++p) {
    for (int i = 0; i < A.d0; ++i) out.at(0, p, 0, 0, i) += bias[i];
  }
  return out;
}

FeatureField so3_layer(const FeatureField& field, const std::vector<std::vector<Eigen::MatrixXd>>& thetas,
                       const Tensor3& B, const std::vector<double>& bias) {
  const int C = field.uniform_channels();
  if (B.d1 != static_cast<int>(thetas.size()) || B.d2 != C || static_cast<int>(bias.size()) != B.d0) {
    throw ShapeMismatch("rotational layer weights do not match the kernel basis and channels");
  }
  FeatureField out = FeatureField::uniform(field.num_points(), field.max_degree(), B.d0);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const FeatureField g = so3_component(field, thetas[j]);
    for (int l = 0; l <= field.max_degree(); ++l) {
      const int nl = 2 * l + 1;
      for (std::size_t p = 0; p < field.num_points(); ++p) {
        for (int a = 0; a < nl; ++a) {
          for (int b = 0; b < nl; ++b) {
            for (int i = 0; i < B.d0; ++i) {
              double s = 0.0;
              for (int c = 0; c < C; ++c) s += B(i, static_cast<int>(j), c) * g.at(l, p, a, b, c);
              out.at(l, p, a, b, i) += s;
            }
          }
        }
      }
    }
  }
  for (std::size_t p = 0; p < field.num_points(); ++p) {
    for (int i = 0; i < B.d0; ++i) out.at(0, p, 0, 0, i) += bias[i];
  }
  return out;
}

std::vector<std::vector<Eigen::MatrixXd>> wigner_theta_basis(int lmax) {
  std::vector<std::vector<Eigen::MatrixXd>> out;
  for (int L = 0; L <= lmax; ++L) {
    for (int M = 0; M < 2 * L + 1; ++M) {
      for (int n = 0; n < 2 * L + 1; ++n) {
        std::vector<Eigen::MatrixXd> theta;
        for (int l = 0; l <= lmax; ++l) theta.push_back(Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1));
        theta[L](M, n) = 1.0;
        out.push_back(std::move(theta));
      }
    }
  }
  return out;
}

SE3Weights separable_weights(const Tensor3& B, const Tensor3& A, const KernelBasisSpec& spec, int lmax_out,
                             const std::vector<double>& bias) {
  const auto ks = kernel_indices(spec);
  int J = 0;
  for (int L = 0; L <= lmax_out; ++L) J += (2 * L + 1) * (2 * L + 1);
  if (B.d1 != J || B.d2 != A.d0 || A.d1 != static_cast<int>(ks.size()) || static_cast<int>(bias.size()) != B.d0) {
    throw ShapeMismatch("separable factors do not match the kernel bases");
  }
  SE3Weights w(A.d2, B.d0, spec.radial_counts(), lmax_out);
  int jbase = 0;
  for (int L = 0; L <= lmax_out; ++L) {
    const int nL = 2 * L + 1;
    for (int M = 0; M < nL; ++M) {
      for (int n = 0; n < nL; ++n) {
        const int jt = jbase + M * nL + n;
        for (std::size_t k = 0; k < ks.size(); ++k) {
          for (int d = 0; d < B.d0; ++d) {
            for (int c = 0; c < A.d2; ++c) {
              double s = 0.0;
              for (int m = 0; m < A.d0; ++m) s += B(d, jt, m) * A(m, static_cast<int>(k), c);
              w.at(ks[k].lp, L, n, d, c, ks[k].r, ks[k].mp, M) = s;
            }
          }
        }
      }
    }
    jbase += nL * nL;
  }
  w.bias() = bias;
  return w;
}

EmbeddedField embed_tfn_input(const VectorField& v) {
  int C = 0;
  for (int c : v.channel_counts()) C = std::max(C, c);
  EmbeddedField e{FeatureField::uniform(v.num_points(), v.max_degree(), std::max(C, 1)), v.channel_counts()};
  for (int l = 0; l <= v.max_degree(); ++l) {
    for (std::size_t p = 0; p < v.num_points(); ++p) {
      for (int m = 0; m < 2 * l + 1; ++m) {
        for (int c = 0; c < v.channels(l); ++c) e.field.at(l, p, m, l, c) = v.at(l, p, m, c);
      }
    }
  }
  return e;
}

VectorField extract_tfn_output(const FeatureField& f, const std::vector<int>& channels) {
  std::vector<int> ch = channels.empty() ? f.channel_counts() : channels;
  if (static_cast<int>(ch.size()) != f.max_degree() + 1) throw ShapeMismatch("channel bookkeeping differs from the field degrees");
  VectorField v(f.num_points(), ch);
  for (int l = 0; l <= f.max_degree(); ++l) {
    if (ch[l] > f.channels(l)) throw ShapeMismatch("requested more channels than the field holds");
    for (std::size_t p = 0; p < f.num_points(); ++p) {
      for (int m = 0; m < 2 * l + 1; ++m) {
        for (int c = 0; c < ch[l]; ++c) v.at(l, p, m, c) = f.at(l, p, m, l, c);
      }
    }
  }
  return v;
}

}  // namespace se3conv
