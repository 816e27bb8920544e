#include "se3conv/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/conv.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/layer_config.hpp"
#include "se3conv/text_io.hpp"
#include "se3conv/verify.hpp"
#include "se3conv/wigner_transform.hpp"

namespace se3conv {

namespace {

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  double tolerance = kDefaultTolerances.orth;
  bool rescale = false;
};

// Scale so the cloud diameter equals the kernel support radius.
void rescale_cloud(PointCloud& cloud, double support) {
  double diam = 0.0;
  for (const auto& a : cloud) {
    for (const auto& b : cloud) diam = std::max(diam, (a - b).norm());
  }
  if (diam == 0.0) return;
  for (auto& x : cloud) x *= support / diam;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& report_path, std::ostream& out) {
  std::ofstream report;
  if (!report_path.empty()) {
    report.open(report_path, std::ios::binary | std::ios::trunc);
    if (!report) throw ParseError("cannot write " + report_path);
  }
  out << "# seed " << g.seed << '\n';
  VerificationReport rep;
  try {
    rep = run_verification(suite, g.seed, &out);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  out << "SUMMARY " << rep.passed() << '/' << rep.checks.size() << '\n';
  if (report.is_open()) {
    report << "# seed " << g.seed << '\n';
    rep.write(report);
    if (!report) throw ParseError("write failed: " + report_path);
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& in, const std::string& outp) {
  const AnyWeights w = read_weights_file(in);
  const bool is_se3 = std::holds_alternative<SE3Weights>(w);
  if ((from == "se3") != is_se3) throw BlockHeaderMismatch("input file form does not match --from " + from);
  std::ostringstream s;
  if (to == "tfn") {
    write_weights(s, is_se3 ? iota(std::get<SE3Weights>(w)) : std::get<TFNWeights>(w));
  } else {
    write_weights(s, is_se3 ? std::get<SE3Weights>(w) : iota_inv(std::get<TFNWeights>(w)));
  }
  write_text_file(outp, s.str());
  return 0;
}

int cmd_conv(const Globals& g, const std::string& cloud_path, const std::string& field_path, const std::string& layer_path,
             const std::string& out_path) {
  PointCloud cloud = read_point_cloud_file(cloud_path);
  const FeatureField field = read_field_file(field_path);
  const LayerConfig cfg = load_layer_config(layer_path);
  const AnyWeights w = read_weights_file(cfg.weights_path);
  if ((cfg.weights_form == "se3") != std::holds_alternative<SE3Weights>(w)) {
    throw BlockHeaderMismatch("weights file form does not match weights.form");
  }
  if (cloud.size() != field.num_points()) throw ShapeMismatch("cloud and field sizes differ");
  validate_cloud(cloud);
  if (g.rescale) rescale_cloud(cloud, cfg.spec.support_radius);
  // Both forms run through the TFN engine; se3 weights are translated first.
  const TFNWeights v = std::holds_alternative<SE3Weights>(w) ? iota(std::get<SE3Weights>(w)) : std::get<TFNWeights>(w);
  if (v.radial_counts() != cfg.spec.radial_counts()) throw ShapeMismatch("weights radial counts differ from kernel.radial");
  if (v.in_channels() != field.uniform_channels()) throw ShapeMismatch("weights cin differs from field channels");
  FeatureField outf = tfn_layer(cloud, field, v, cfg.spec, cfg.options);
  if (cfg.activation.enabled) outf = relu_activation(outf, activation_samples(cfg.activation, g.seed));
  std::ostringstream s;
  write_field(s, outf);
  write_text_file(out_path, s.str());
  return 0;
}

int cmd_sample(const Globals& g, const std::string& kind, int param, const std::string& out_path, std::ostream& out) {
  RotationSampleSet set;
  if (kind == "grid") {
    if (param < 1) throw ParseError("--param must be positive for grid");
    set = exact_euler_grid(param);
  } else if (kind == "fps") {
    if (param < 1) throw ParseError("--param must be positive for fps");
    set = fps_rotations(param, g.seed);
  } else {
    set = icosahedral_group();
  }
  std::ostringstream s;
  write_rotation_set(s, set);
  if (out_path.empty()) {
    out << s.str();
  } else {
    write_text_file(out_path, s.str());
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SE(3) group convolution and tensor field network toolkit", "se3conv"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for random instances and FPS sampling")->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "Orthogonality tolerance for rotation inputs")->capture_default_str();
  app.add_flag("--rescale", g.rescale, "Scale input clouds to the kernel support");

  auto* verify = app.add_subcommand("verify", "Run the verification suite")->fallthrough();
  std::string suite, report;
  verify->add_option("--suite", suite, "Run one suite only");
  verify->add_option("--report", report, "Also write the report to FILE");

  auto* convert = app.add_subcommand("convert-weights", "Translate weights between se3 and tfn forms")->fallthrough();
  std::string from, to, cin_path, cout_path;
  convert->add_option("--from", from)->required()->check(CLI::IsMember({"se3", "tfn"}));
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"se3", "tfn"}));
  convert->add_option("input", cin_path)->required();
  convert->add_option("output", cout_path)->required();

  auto* conv = app.add_subcommand("conv", "Apply a configured layer to a feature field")->fallthrough();
  std::string cloud_path, field_path, layer_path, out_path;
  conv->add_option("--cloud", cloud_path)->required();
  conv->add_option("--field", field_path)->required();
  conv->add_option("--layer", layer_path)->required();
  conv->add_option("--out", out_path)->required();

  auto* eval = app.add_subcommand("eval-basis", "Print harmonics, Wigner matrices, CG or Zernike values")->fallthrough();
  std::vector<double> sh, wig, wig_mat;
  std::vector<int> cg, zern;
  bool complex_form = false;
  auto* o_sh = eval->add_option("--sh", sh, "l x y z")->expected(4);
  auto* o_cg = eval->add_option("--cg", cg, "l lp L [m mp M]")->expected(3, 6);
  auto* o_w = eval->add_option("--wigner", wig, "l alpha beta gamma (ZYZ)")->expected(4);
  auto* o_wm = eval->add_option("--wigner-matrix", wig_mat, "l r00 r01 ... r22")->expected(10);
  auto* o_z = eval->add_option("--zernike", zern, "n l: radial polynomial coefficients in r^2")->expected(2);
  eval->add_flag("--complex-form", complex_form, "Print the complex-basis CG tensor");
  for (auto* o : {o_sh, o_cg, o_w, o_wm, o_z}) {
    for (auto* p : {o_sh, o_cg, o_w, o_wm, o_z}) {
      if (o != p) o->excludes(p);
    }
  }

  auto* sample = app.add_subcommand("sample-rotations", "Emit a rotation sample set")->fallthrough();
  std::string kind = "ico";
  int param = 0;
  std::string sample_out;
  sample->add_option("--kind", kind)->check(CLI::IsMember({"grid", "ico", "fps"}));
  sample->add_option("--param", param, "B for grid, count for fps");
  sample->add_option("--out", sample_out);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Tolerances tol{g.tolerance, kDefaultTolerances.imag, kDefaultTolerances.rep, kDefaultTolerances.euler,
                         kDefaultTolerances.gimbal};
    if (*verify) return cmd_verify(g, suite, report, out);
    if (*convert) return cmd_convert(from, to, cin_path, cout_path);
    if (*conv) return cmd_conv(g, cloud_path, field_path, layer_path, out_path);
    if (*sample) return cmd_sample(g, kind, param, sample_out, out);
    if (*eval) {
      if (!sh.empty()) {
        const Eigen::VectorXd y = eval_real_spherical_harmonics(static_cast<int>(sh[0]), Vec3(sh[1], sh[2], sh[3]));
        write_matrix(out, y.transpose());
      } else if (!cg.empty()) {
        if (cg.size() == 6) {
          out << format_double(cg_scalar({cg[0], cg[1], cg[2], cg[3], cg[4], cg[5]})) << '\n';
        } else if (cg.size() == 3) {
          check_triangle(cg[0], cg[1], cg[2]);
          if (complex_form) {
            const CGTensorComplex q = cg_tensor_complex(cg[0], cg[1], cg[2]);
            Eigen::MatrixXd f((2 * cg[0] + 1) * (2 * cg[1] + 1), 2 * cg[2] + 1);
            for (int m = -cg[0]; m <= cg[0]; ++m) {
              for (int mp = -cg[1]; mp <= cg[1]; ++mp) {
                for (int M = -cg[2]; M <= cg[2]; ++M) f((m + cg[0]) * (2 * cg[1] + 1) + mp + cg[1], M + cg[2]) = q.at(m, mp, M);
              }
            }
            write_matrix(out, f);
          } else {
            write_matrix(out, cg_tensor_real(cg[0], cg[1], cg[2])->flat());
          }
        } else {
          throw ParseError("--cg takes 3 or 6 integers");
        }
      } else if (!wig.empty()) {
        write_matrix(out, wigner_D_real(static_cast<int>(wig[0]), rotation_from_euler({wig[1], wig[2], wig[3]})));
      } else if (!wig_mat.empty()) {
        Mat3 m;
        for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = wig_mat[1 + i];
        write_matrix(out, wigner_D_real(static_cast<int>(wig_mat[0]), Rotation::from_matrix(m, tol.orth), tol));
      } else if (!zern.empty()) {
        write_matrix(out, zernike_radial_coeffs(zern[0], zern[1]).transpose());
      } else {
        throw ParseError("eval-basis needs one of --sh, --cg, --wigner, --wigner-matrix, --zernike");
      }
      return 0;
    }
  } catch (const TriangleViolation& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const BlockHeaderMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ShapeMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const BandLimitMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace se3conv
