#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "holext/boundary.hpp"
#include "holext/cli.hpp"
#include "holext/errors.hpp"
#include "holext/exttest.hpp"
#include "holext/funcspec.hpp"
#include "holext/reconstruct.hpp"
#include "holext/report_json.hpp"
#include "holext/spectral.hpp"

namespace py = pybind11;
using namespace holext;

namespace {

CPoint to_point(const std::vector<cplx>& v) { return CPoint(v); }

BoundaryFunction make_function(const std::string& spec, std::size_t dim) { return parse_function(spec, dim); }

}  // namespace

PYBIND11_MODULE(_holext, m) {
  m.doc() = "Holomorphic extension tests for functions on the unit sphere";

  static py::object error_type = py::reinterpret_borrow<py::object>(
      py::handle(PyErr_NewException("holext.HolextError", PyExc_RuntimeError, nullptr)));
  m.attr("HolextError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = error_type(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  m.def("parse_complex", &parse_complex, py::arg("text"));
  m.def(
      "parse_point", [](const std::string& s, std::size_t dim) {
        const CPoint p = parse_point(s, dim);
        return std::vector<cplx>(p.coords().begin(), p.coords().end());
      },
      py::arg("text"), py::arg("dim") = 0);

  py::class_<BoundaryFunction>(m, "Function")
      .def(py::init(&make_function), py::arg("spec"), py::arg("dim") = 2)
      .def_property_readonly("dim", &BoundaryFunction::dim)
      .def_property_readonly("label", &BoundaryFunction::label)
      .def_property_readonly("smoothness",
                             [](const BoundaryFunction& f) { return std::string(to_string(f.smoothness())); })
      .def(
          "__call__", [](const BoundaryFunction& f, const std::vector<cplx>& z) { return eval(f, to_point(z)); },
          py::arg("z"))
      .def("__repr__", [](const BoundaryFunction& f) { return "<holext.Function " + f.label() + ">"; });

  m.def(
      "f_nu",
      [](const BoundaryFunction& f, int nu, cplx z1, std::size_t n_phi) { return f_nu(f, nu, z1, n_phi); },
      py::arg("f"), py::arg("nu"), py::arg("z1"), py::arg("n_phi") = kDefaultNPhi);
  m.def(
      "_vanishing_order",
      [](const BoundaryFunction& f, int nu, double r_a, double r_b) {
        const auto e = vanishing_order(f, nu, r_a, r_b);
        return py::make_tuple(e.nu, e.k, e.exponent, e.residual);
      },
      py::arg("f"), py::arg("nu"), py::arg("r_a") = 0.9, py::arg("r_b") = 0.95);

  m.def(
      "_moment_test",
      [](const BoundaryFunction& f, const std::vector<cplx>& point, const std::vector<cplx>& dir,
         std::size_t n_samples, double tol) {
        return to_json(holomorphic_extension_test(f, ComplexLine(to_point(point), to_point(dir)), n_samples, tol))
            .dump();
      },
      py::arg("f"), py::arg("point"), py::arg("direction"), py::arg("n_samples") = 256,
      py::arg("tol") = kDefaultTol);
  m.def(
      "_bunch_test",
      [](const BoundaryFunction& f, const std::vector<cplx>& a, std::size_t lines, double tol, std::uint64_t seed) {
        return to_json(bunch_test(f, to_point(a), lines, 256, tol, seed), false).dump();
      },
      py::arg("f"), py::arg("a"), py::arg("lines") = 32, py::arg("tol") = kDefaultTol, py::arg("seed") = 1);
  m.def(
      "_classify",
      [](const BoundaryFunction& f, const std::vector<cplx>& a, const std::vector<cplx>& b, int max_nu, double tol,
         std::uint64_t seed) {
        ClassifyOptions opt;
        opt.max_nu = max_nu;
        opt.tol = tol;
        opt.seed = seed;
        py::gil_scoped_release release;
        return to_json(two_bunch_classify(f, to_point(a), to_point(b), opt)).dump();
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("max_nu") = 12, py::arg("tol") = kDefaultTol,
      py::arg("seed") = 1);

  py::class_<ExtensionModel>(m, "ExtensionModel")
      .def_readonly("V", &ExtensionModel::V)
      .def_readonly("M", &ExtensionModel::M)
      .def_readonly("boundary_error", &ExtensionModel::boundary_error)
      .def_readonly("n_phi", &ExtensionModel::n_phi)
      .def("coefficient", &ExtensionModel::coeff, py::arg("nu"), py::arg("mu"))
      .def(
          "__call__", [](const ExtensionModel& e, const std::vector<cplx>& z) { return eval_extension(e, to_point(z)); },
          py::arg("z"))
      .def("_json", [](const ExtensionModel& e) { return to_json(e).dump(); });
  m.def(
      "reconstruct",
      [](const BoundaryFunction& f, int V, int M, double tol, std::uint64_t seed) {
        py::gil_scoped_release release;
        return assemble_extension(f, V, M, GridSpec{}, tol, seed);
      },
      py::arg("f"), py::arg("V") = 12, py::arg("M") = 12, py::arg("tol") = kDefaultTol, py::arg("seed") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
