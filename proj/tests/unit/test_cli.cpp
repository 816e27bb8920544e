#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "se3conv/cli.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/text_io.hpp"

using namespace se3conv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "se3conv_cli_test";
  fs::create_directories(d);
  return d / name;
}

const fs::path kExample = fs::path(SE3CONV_SOURCE_DIR) / "docs" / "example";

}  // namespace

TEST_CASE("eval-basis values") {
  auto r = run({"eval-basis", "--sh", "0", "0", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.28209479177387814\n");
  r = run({"eval-basis", "--cg", "1", "1", "0", "1", "-1", "0"});
  CHECK(r.code == 0);
  CHECK(parse_double(r.out.substr(0, r.out.size() - 1)) == doctest::Approx(0.5773502691896257).epsilon(1e-15));
  CHECK(run({"eval-basis", "--cg", "1", "1", "3"}).code == 3);
  CHECK(run({"eval-basis", "--zernike", "3", "0"}).code == 2);
  r = run({"eval-basis", "--wigner", "1", "0", "0", "0"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::string tok;
      rows >> tok;
      CHECK(parse_double(tok) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("sample-rotations") {
  auto r = run({"sample-rotations", "--kind", "ico"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 60);
  r = run({"sample-rotations", "--kind", "grid", "--param", "2"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 32);
  CHECK(run({"--seed", "5", "sample-rotations", "--kind", "fps", "--param", "4"}).out ==
        run({"sample-rotations", "--kind", "fps", "--param", "4", "--seed", "5"}).out);
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "--suite", "clebsch"});
  CHECK(r.code == 0);
  CHECK(r.out.find("CHECK cg_symmetries") != std::string::npos);
  CHECK(r.out.find("CHECK sh_steerability") == std::string::npos);
  CHECK(r.out.find("SUMMARY 6/6") != std::string::npos);
  CHECK(run({"verify", "--suite", "clebsch", "--report", "/nonexistent/dir/r.txt"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const fs::path rep = scratch("report.txt");
  CHECK(run({"verify", "--suite", "structure", "--report", rep.string()}).code == 0);
  const std::string text = slurp(rep);
  CHECK(text.find("SUMMARY 3/3") != std::string::npos);
}

TEST_CASE("convert-weights round trip") {
  const fs::path se3 = scratch("w_se3.txt"), tfn = scratch("w_tfn.txt"), back = scratch("w_back.txt");
  CHECK(run({"convert-weights", "--from", "tfn", "--to", "se3", (kExample / "weights_tfn.txt").string(), se3.string()}).code == 0);
  CHECK(run({"convert-weights", "--from", "se3", "--to", "tfn", se3.string(), tfn.string()}).code == 0);
  CHECK(run({"convert-weights", "--from", "tfn", "--to", "se3", tfn.string(), back.string()}).code == 0);
  const auto a = std::get<SE3Weights>(read_weights_file(se3.string()));
  const auto b = std::get<SE3Weights>(read_weights_file(back.string()));
  CHECK(max_abs_diff(a, b) < 1e-10);
  CHECK(run({"convert-weights", "--from", "se3", "--to", "tfn", (kExample / "weights_tfn.txt").string(), tfn.string()}).code == 3);
  CHECK(run({"convert-weights", "--from", "se3", "--to", "tfn", "/nonexistent", tfn.string()}).code == 2);
  std::ofstream(scratch("zero.txt")) << "WEIGHTS form=se3 cin=1 cout=1 lmax_out=1 radial=1\nBIAS\n0\n";
  CHECK(run({"convert-weights", "--from", "se3", "--to", "tfn", scratch("zero.txt").string(), tfn.string()}).code == 0);
  const auto z = std::get<TFNWeights>(read_weights_file(tfn.string()));
  for (const auto& [k, blk] : z.blocks()) {
    for (double x : blk) CHECK(x == 0.0);
  }
}

TEST_CASE("conv worked example") {
  const fs::path out = scratch("out.txt");
  const auto r = run({"conv", "--cloud", (kExample / "cloud.txt").string(), "--field", (kExample / "field.txt").string(),
                      "--layer", (kExample / "layer_tfn.cfg").string(), "--out", out.string()});
  REQUIRE(r.code == 0);
  const FeatureField g = read_field_file(out.string());
  const double y0 = eval_real_spherical_harmonics(0, Vec3::Zero())[0];
  // Only the degree-0 kernel is non-zero at the origin: g^0 = b + 5 (2 y0),
  // g^1 = y0 f^1 V^T.
  CHECK(g.at(0, 0, 0, 0, 0) == doctest::Approx(0.5 + 10.0 * y0).epsilon(1e-15));
  const double expect[3][3] = {{1, 0, 0}, {4, 2, 0}, {0, 0, -3}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(g.at(1, 0, i, j, 0) == doctest::Approx(y0 * expect[i][j]).epsilon(1e-15));
  }
  CHECK(max_abs(g) < 4.0);
  for (double x : g.data(2)) CHECK(x == 0.0);
}

TEST_CASE("se3 config and its converted tfn config give identical bytes") {
  const fs::path w_tfn = scratch("conv_w_tfn.txt"), cfg = scratch("conv_tfn.cfg");
  const fs::path o1 = scratch("o_se3.txt"), o2 = scratch("o_tfn.txt");
  REQUIRE(run({"convert-weights", "--from", "se3", "--to", "tfn", (kExample / "weights_se3.txt").string(), w_tfn.string()}).code == 0);
  std::ofstream(cfg) << "kernel = gaussian\nkernel.radial = 1,1\nweights.form = tfn\nweights.file = " << w_tfn.string() << "\n";
  const std::string cloud = (kExample / "cloud.txt").string(), field = (kExample / "field.txt").string();
  REQUIRE(run({"conv", "--cloud", cloud, "--field", field, "--layer", (kExample / "layer_se3.cfg").string(), "--out", o1.string()}).code == 0);
  REQUIRE(run({"conv", "--cloud", cloud, "--field", field, "--layer", cfg.string(), "--out", o2.string()}).code == 0);
  CHECK(slurp(o1) == slurp(o2));
}

TEST_CASE("conv errors and zero input") {
  const fs::path field = scratch("zero_field.txt"), cloud2 = scratch("cloud2.txt"), out = scratch("o.txt");
  std::ofstream(field) << "FIELD N=1 LMAX=1 CHANNELS 0:1 1:1\n";
  std::ofstream(cloud2) << "0 0 0\n0.1 0 0\n";
  const std::string layer = (kExample / "layer_tfn.cfg").string();
  REQUIRE(run({"conv", "--cloud", (kExample / "cloud.txt").string(), "--field", field.string(), "--layer", layer, "--out", out.string()}).code == 0);
  const FeatureField g = read_field_file(out.string());
  CHECK(g.at(0, 0, 0, 0, 0) == 0.5);  // bias only
  CHECK(run({"conv", "--cloud", cloud2.string(), "--field", field.string(), "--layer", layer, "--out", out.string()}).code == 4);
  std::ofstream(scratch("nan_field.txt")) << "FIELD N=1 LMAX=0 CHANNELS 0:1\nPOINT 0 L 0 C 0\nnan\n";
  CHECK(run({"conv", "--cloud", (kExample / "cloud.txt").string(), "--field", scratch("nan_field.txt").string(), "--layer", layer,
             "--out", out.string()})
            .code == 2);
}
