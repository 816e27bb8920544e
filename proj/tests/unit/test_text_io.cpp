#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/layer_config.hpp"
#include "se3conv/text_io.hpp"

using namespace se3conv;

TEST_CASE("number parsing") {
  CHECK(parse_double("1.5e-3") == 1.5e-3);
  CHECK(parse_double("+2") == 2.0);
  CHECK_THROWS_AS(parse_double("nan"), ParseError);
  CHECK_THROWS_AS(parse_double("inf"), ParseError);
  CHECK_THROWS_AS(parse_double("1e999"), ParseError);
  CHECK_THROWS_AS(parse_double("1.0x"), ParseError);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("point clouds") {
  std::istringstream in("# c\n1 2 3\n\n4 5 6 # tail\n");
  const auto c = read_point_cloud(in);
  REQUIRE(c.size() == 2);
  CHECK(c[1].z() == 6.0);
  std::istringstream bad("1 2 3 4\n");
  CHECK_THROWS_AS(read_point_cloud(bad), ParseError);
}

TEST_CASE("field round trip is exact") {
  std::mt19937_64 rng(14);
  const auto f = testutil::random_field(rng, 3, 2, 2);
  std::ostringstream out;
  write_field(out, f);
  std::istringstream in(out.str());
  const auto g = read_field(in);
  CHECK(max_abs_diff(f, g) == 0.0);
  std::ostringstream again;
  write_field(again, g);
  CHECK(again.str() == out.str());
}

TEST_CASE("field parse errors") {
  std::istringstream dup("FIELD N=1 LMAX=0 CHANNELS 0:1\nPOINT 0 L 0 C 0\n1\nPOINT 0 L 0 C 0\n2\n");
  CHECK_THROWS_AS(read_field(dup), ParseError);
  std::istringstream shape("FIELD N=1 LMAX=0 CHANNELS 0:1\nPOINT 1 L 0 C 0\n1\n");
  CHECK_THROWS_AS(read_field(shape), ShapeMismatch);
  std::istringstream rows("FIELD N=1 LMAX=1 CHANNELS 0:1 1:1\nPOINT 0 L 1 C 0\n1 2 3\n4 5\n");
  CHECK_THROWS_AS(read_field(rows), ParseError);
}

TEST_CASE("weights round trip and header errors") {
  TFNWeights v(1, 2, {1, 1}, 2);
  v.at(1, 1, 2, 3, 1, 0, 0, 2) = 0.25;
  v.bias() = {1.0, -1.0};
  std::ostringstream out;
  write_weights(out, v);
  std::istringstream in(out.str());
  const auto back = read_weights(in);
  REQUIRE(std::holds_alternative<TFNWeights>(back));
  CHECK(max_abs_diff(std::get<TFNWeights>(back), v) == 0.0);

  std::istringstream tri("WEIGHTS form=tfn cin=1 cout=1 lmax_out=2 radial=1,1\nBLOCK l=0 lp=0 L=2\n0\n0\n0\n0\n0\n");
  CHECK_THROWS_AS(read_weights(tri), TriangleViolation);
  std::istringstream wrong("WEIGHTS form=se3 cin=1 cout=1 lmax_out=1 radial=1\nBLOCK l=0 lp=0 L=0\n0\n");
  CHECK_THROWS_AS(read_weights(wrong), BlockHeaderMismatch);
  std::istringstream dupe("WEIGHTS form=se3 cin=1 cout=1 lmax_out=0 radial=1\nBLOCK lp=0 L=0\n1\nBLOCK lp=0 L=0\n1\n");
  CHECK_THROWS_AS(read_weights(dupe), BlockHeaderMismatch);
  std::istringstream range("WEIGHTS form=se3 cin=1 cout=1 lmax_out=0 radial=1\nBLOCK lp=1 L=0\n1\n");
  CHECK_THROWS_AS(read_weights(range), BlockHeaderMismatch);
  std::istringstream missing("WEIGHTS form=se3 cin=1 cout=1 lmax_out=1 radial=1\nBIAS\n3\n");
  const auto m = read_weights(missing);
  CHECK(std::get<SE3Weights>(m).bias()[0] == 3.0);
  CHECK(std::get<SE3Weights>(m).block(0, 1)[0] == 0.0);
}

TEST_CASE("layer config") {
  std::istringstream in(
      "# layer\nkernel = zernike\nkernel.radial = 2, 1\nweights.form = se3\nweights.file = w.txt\n"
      "activation = relu_wt(set = fps:16)\ntruncate = 2\nexclude_self = true\n");
  const auto c = parse_layer_config(in, "/data");
  CHECK(c.kernel == "zernike");
  CHECK(c.spec.radial_counts() == std::vector<int>{2, 1});
  CHECK(c.weights_path == "/data/w.txt");
  CHECK(c.activation.enabled);
  CHECK(c.activation.set == SampleKind::fps);
  CHECK(c.activation.param == 16);
  CHECK(*c.options.truncate == 2);
  CHECK(c.options.exclude_self);
  std::istringstream bad("kernel = fourier\nkernel.radial = 1\nweights.file = w\n");
  CHECK_THROWS_AS(parse_layer_config(bad), ParseError);
  std::istringstream unknown("kernel.radial = 1\nweights.file = w\ncolour = red\n");
  CHECK_THROWS_AS(parse_layer_config(unknown), ParseError);
}
