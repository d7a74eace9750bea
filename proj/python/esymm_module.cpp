#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "esymm/errors.hpp"
#include "esymm/moyal.hpp"
#include "esymm/orbit.hpp"
#include "esymm/reports.hpp"

namespace py = pybind11;
using namespace esymm;

namespace {

Rational rational_from_object(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(static_cast<long long>(obj.cast<long long>()));
    return Rational::from_string(obj.cast<std::string>());
}

Mat mat_from_lists(const std::vector<std::vector<py::object>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = rational_from_object(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<std::string>> mat_to_lists(const Mat& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).str());
    return rows;
}

} // namespace

PYBIND11_MODULE(_esymm, m) {
    m.doc() = "extrinsic symplectic symmetric spaces: exact construction, "
              "verification, and star quantization";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<DimensionError>(m, "DimensionError");

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& o) { return rational_from_object(o); }))
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__float__", &Rational::to_double)
        .def_property_readonly("numerator", [](const Rational& r) { return r.numerator().get_str(); })
        .def_property_readonly("denominator",
                               [](const Rational& r) { return r.denominator().get_str(); });

    py::class_<Mat>(m, "Matrix")
        .def(py::init([](const std::vector<std::vector<py::object>>& rows) {
            return mat_from_lists(rows);
        }))
        .def_static("identity", &Mat::identity)
        .def_property_readonly("rows", &Mat::rows)
        .def_property_readonly("cols", &Mat::cols)
        .def("tolist", &mat_to_lists)
        .def("__mul__", [](const Mat& a, const Mat& b) { return a * b; })
        .def("__add__", [](const Mat& a, const Mat& b) { return a + b; })
        .def("__sub__", [](const Mat& a, const Mat& b) { return a - b; })
        .def("__eq__", [](const Mat& a, const Mat& b) { return a == b; })
        .def("transpose", &Mat::transpose)
        .def("solve", [](const Mat& a, const Mat& rhs) { return a.solve(rhs); })
        .def("inverse", &Mat::inverse)
        .def("rank", &Mat::rank)
        .def("is_nilpotent", [](const Mat& a) { return is_nilpotent(a); })
        .def("__repr__", [](const Mat& a) { return a.str(); });

    m.def("nilpotent_exp", &nilpotent_exp, py::arg("matrix"),
          "exact exponential of a nilpotent matrix");

    // report-level entry points mirroring the command-line subcommands;
    // inputs and outputs are JSON text
    m.def(
        "check_lambda",
        [](const std::string& family_json, std::uint64_t seed) {
            return run_check_lambda(family_json, seed).dump(2);
        },
        py::arg("family_json"), py::arg("seed") = 0);
    m.def(
        "surface",
        [](const std::string& surface_json, std::size_t verify_pairs, std::uint64_t seed) {
            return run_surface(surface_json, verify_pairs, seed).dump(2);
        },
        py::arg("surface_json"), py::arg("verify_pairs") = 50, py::arg("seed") = 0);
    m.def(
        "orbit",
        [](const std::string& input_json, std::size_t samples, std::uint64_t seed) {
            return run_orbit(input_json, samples, seed).dump(2);
        },
        py::arg("input_json"), py::arg("samples") = 10, py::arg("seed") = 0);
    m.def(
        "classify_codim2",
        [](std::size_t n, std::size_t count, std::uint64_t seed, const std::string& mode) {
            return run_classify_codim2(n, count, seed, mode).dump(2);
        },
        py::arg("n") = 2, py::arg("count") = 100, py::arg("seed") = 0,
        py::arg("mode") = "exact");
    m.def(
        "star",
        [](const std::string& input_json, bool on_sigma, const std::vector<std::string>& checks,
           std::uint64_t seed) { return run_star(input_json, on_sigma, checks, seed).dump(2); },
        py::arg("input_json"), py::arg("on_sigma") = false,
        py::arg("checks") = std::vector<std::string>{}, py::arg("seed") = 0);

    // direct star product on polynomials given as JSON term lists
    m.def(
        "moyal_star",
        [](std::size_t n, std::size_t p, const std::string& u_json, const std::string& v_json) {
            SympSpace sp(n, p);
            MultiPoly u = poly_from_json(json::parse(u_json), sp.dim(), "u");
            MultiPoly v = poly_from_json(json::parse(v_json), sp.dim(), "v");
            return poly_to_json(moyal_star(sp, u, v).series).dump(2);
        },
        py::arg("n"), py::arg("p"), py::arg("u_json"), py::arg("v_json"),
        "Moyal star product on the ambient space of a (n, p) block model");
    m.def(
        "poisson_bracket",
        [](std::size_t n, std::size_t p, const std::string& u_json, const std::string& v_json) {
            SympSpace sp(n, p);
            MultiPoly u = poly_from_json(json::parse(u_json), sp.dim(), "u");
            MultiPoly v = poly_from_json(json::parse(v_json), sp.dim(), "v");
            return poly_to_json(poisson_bracket(sp, u, v)).dump(2);
        },
        py::arg("n"), py::arg("p"), py::arg("u_json"), py::arg("v_json"));
}
