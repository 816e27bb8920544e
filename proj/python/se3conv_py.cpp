#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "se3conv/cli.hpp"
#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/errors.hpp"
#include "se3conv/harmonics.hpp"
#include "se3conv/so3_sampling.hpp"
#include "se3conv/steerable_basis.hpp"
#include "se3conv/verify.hpp"

namespace py = pybind11;
using namespace se3conv;

namespace {

py::tuple sample_set(const RotationSampleSet& s) {
  std::vector<Eigen::Matrix3d> mats;
  for (const auto& r : s.rotations) mats.push_back(r.matrix());
  return py::make_tuple(mats, s.weights);
}

}  // namespace

PYBIND11_MODULE(_se3conv, m) {
  m.doc() = "SE(3) group convolution and tensor field network primitives";

  static py::exception<Error> base(m, "Se3convError", PyExc_RuntimeError);
  py::register_exception<TriangleViolation>(m, "TriangleViolation", base.ptr());
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
  py::register_exception<NotARotation>(m, "NotARotation", base.ptr());
  py::register_exception<BadZernikeIndex>(m, "BadZernikeIndex", base.ptr());
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", base.ptr());

  m.def("real_spherical_harmonics",
        [](int l, const Eigen::Vector3d& x) -> Eigen::VectorXd { return eval_real_spherical_harmonics(l, x); },
        py::arg("l"), py::arg("x"));
  m.def("wigner_D_real",
        [](int l, const Eigen::Matrix3d& r) -> Eigen::MatrixXd { return wigner_D_real(l, Rotation::from_matrix(r)); },
        py::arg("l"), py::arg("rotation"));
  m.def("rotation_from_euler",
        [](double a, double b, double g) -> Eigen::Matrix3d { return rotation_from_euler({a, b, g}).matrix(); },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
  m.def("cg_scalar",
        [](int l, int lp, int L, int mm, int mp, int M) { return cg_scalar({l, lp, L, mm, mp, M}); });
  m.def("cg_tensor_real", [](int l, int lp, int L) -> Eigen::MatrixXd { return cg_tensor_real(l, lp, L)->flat(); },
        "Rows a*(2lp+1)+b, columns M.");
  m.def("zernike_radial_coeffs", [](int n, int l) -> Eigen::VectorXd { return zernike_radial_coeffs(n, l); });
  m.def("icosahedral_group", [] { return sample_set(icosahedral_group()); });
  m.def("exact_euler_grid", [](int B) { return sample_set(exact_euler_grid(B)); }, py::arg("B"));
  m.def("fps_rotations", [](int n, std::uint64_t seed) { return sample_set(fps_rotations(n, seed)); }, py::arg("n"),
        py::arg("seed") = 0);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        py::list out;
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = run_verification(suite, seed);
        }
        for (const auto& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["err"] = c.max_abs_error;
          d["tol"] = c.tolerance;
          d["pass"] = c.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = kDefaultSeed);
  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
