// Python bindings for the main library operations.  The module exposes the
// closed forms, the verification entry point, and small summary queries;
// structured results are returned as plain tuples / dicts so the Python side
// stays dependency-free.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <vector>

#include "ngonstar/limit_field.hpp"
#include "ngonstar/linalg2.hpp"
#include "ngonstar/linearized.hpp"
#include "ngonstar/ngon_geometry.hpp"
#include "ngonstar/onion.hpp"
#include "ngonstar/tetra3d.hpp"
#include "ngonstar/verify.hpp"
#include "ngonstar/version.hpp"
#include "ngonstar/wells.hpp"

namespace py = pybind11;

namespace {

ngonstar::TetraAxis parse_axis(const std::string& axis) {
    if (axis == "x3") return ngonstar::TetraAxis::X3;
    if (axis == "vertex") return ngonstar::TetraAxis::Vertex;
    throw std::invalid_argument("axis must be 'x3' or 'vertex'");
}

std::array<std::array<double, 2>, 2> to_rows(const ngonstar::Mat2& m) {
    return {{{m.a11, m.a12}, {m.a21, m.a22}}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nested n-gon star constructions: closed forms, maps, and scans";
    m.attr("__version__") = ngonstar::kVersion;

    m.def("radius_ratio", &ngonstar::radius_ratio, py::arg("n"), py::arg("alpha"),
          "Inner/outer circumradius ratio of the compatible shell.");
    m.def("stretch", &ngonstar::stretch_a, py::arg("n"), py::arg("alpha"),
          "Edge-length ratio a = l1/l2 of the shell triangles.");
    m.def("alpha_of_stretch", &ngonstar::alpha_of_a, py::arg("n"), py::arg("a"),
          "Twist fraction with the given edge-length ratio.");
    m.def(
        "quartic_root_summary",
        [](int n, double alpha) {
            const auto report = ngonstar::quartic_roots(n, alpha);
            py::dict d;
            d["admissible_count"] = report.admissible_count;
            d["admissible_index"] = report.admissible_index;
            d["admissible_value"] =
                report.admissible_index >= 0
                    ? py::cast(report.roots[static_cast<std::size_t>(report.admissible_index)]
                                   .value)
                    : py::none();
            return d;
        },
        py::arg("n"), py::arg("alpha"),
        "Admissibility summary of the four closed-form radius-ratio candidates.");
    m.def("anisotropy_ratio", &ngonstar::nlce_anisotropy, py::arg("n"), py::arg("alpha"),
          "Nematic-elastomer anisotropy parameter matching the well set.");
    m.def(
        "noniterability_gap",
        [](int n, double alpha) {
            const auto gap = ngonstar::noniterability_gap(n, alpha);
            return py::make_tuple(gap.outer, gap.inner);
        },
        py::arg("n"), py::arg("alpha"),
        "(outer, inner) well distances of the once-iterated shell gradients.");
    m.def(
        "energy_summary",
        [](int n, double alpha, int layers) {
            const auto report = ngonstar::energy_report(n, alpha, layers);
            py::dict d;
            d["layers"] = report.layers;
            d["elastic"] = report.elastic;
            d["bound"] = report.bound;
            d["surface"] = report.surface;
            d["ratio"] = report.ratio;
            return d;
        },
        py::arg("n"), py::arg("alpha"), py::arg("layers") = 0,
        "Elastic / bound / interface energies of the truncated onion.");
    m.def(
        "limit_gradient",
        [](double alpha, double x, double y) {
            return to_rows(ngonstar::limit_gradient(alpha, {x, y}));
        },
        py::arg("alpha"), py::arg("x"), py::arg("y"),
        "Gradient of the limit deformation at (x, y), as row-major 2x2.");
    m.def(
        "limit_deformation",
        [](double alpha, double x, double y) {
            const auto v = ngonstar::limit_deformation(alpha, {x, y});
            return py::make_tuple(v.x, v.y);
        },
        py::arg("alpha"), py::arg("x"), py::arg("y"),
        "Limit deformation on the annulus 1/2 <= |x| <= 1.");
    m.def(
        "strain_well",
        [](int n, int j) {
            const auto e = ngonstar::strain_well(n, j);
            return py::make_tuple(e.e11, e.e12);
        },
        py::arg("n"), py::arg("j"),
        "Free components (e11, e12) of the j-th trace-free strain well.");
    m.def("orbit_count", &ngonstar::orbit_count, py::arg("n"),
          "Number of distinct strain wells in the dihedral orbit.");
    m.def(
        "scan_min_disparity",
        [](const std::string& axis, int theta_steps, int r_steps) {
            return ngonstar::scan_singular_values(parse_axis(axis), theta_steps, r_steps)
                .min_disparity;
        },
        py::arg("axis"), py::arg("theta_steps") = 50, py::arg("r_steps") = 50,
        "Minimum sigma_min disparity over the default (theta, r) scan window.");
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            const auto report = ngonstar::run_verify(suite, seed);
            return py::make_tuple(report.all_pass, report.text);
        },
        py::arg("suite") = "all", py::arg("seed") = 7,
        "Runs a verification suite; returns (all_pass, report_text).");
}
