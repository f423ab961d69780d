#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conicfx/conic.hpp"
#include "conicfx/ellipse.hpp"
#include "conicfx/flatness.hpp"
#include "conicfx/hyperbola.hpp"
#include "conicfx/minsky.hpp"

namespace py = pybind11;
using namespace conicfx;

namespace {

using Pair = std::pair<double, double>;
using RawPair = std::pair<std::int32_t, std::int32_t>;

PointFx fx(Pair p) { return point_from_float(p.first, p.second); }
RealPoint real(Pair p) { return {p.first, p.second}; }
Pair pair(RealPoint p) { return {p.x, p.y}; }

py::list points_out(const Polyline& poly, bool raw) {
    py::list out;
    for (const PointFx& p : poly.points) {
        if (raw)
            out.append(py::make_tuple(p.x.raw, p.y.raw));
        else
            out.append(py::make_tuple(to_float(p.x), to_float(p.y)));
    }
    return out;
}

// Explicit k wins; otherwise k comes from the flatness settings.
int pick_k(const ConjugateEllipse& e, std::optional<int> k, double flatness, int kmax, bool strict) {
    if (k)
        return *k;
    const ConjugateEllipse rel = to_center_relative(e);
    return angular_inc(rel.p, rel.q, FlatnessConfig::make(flatness, kmax, strict));
}

RawPair state(GenState s) { return {s.u.raw, s.v.raw}; }
GenState state(std::int32_t u, std::int32_t v) { return {Fixed::from_raw(u), Fixed::from_raw(v)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Shift-and-add conic plotting in 16.16 fixed point";

    // The module attribute keeps the type alive.
    static PyObject* conic_error = py::exception<Error>(m, "ConicError", PyExc_ValueError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            // args = (code, message)
            const py::tuple args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
            PyErr_SetObject(conic_error, args.ptr());
        }
    });

    m.attr("FIX_2PI") = FIX_2PI.raw;
    m.attr("MAX_STEP_EXPONENT") = max_step_exponent;

    // fixed point
    m.def("from_float", [](double v) { return from_float(v).raw; }, py::arg("value"),
          "16.16 raw value, truncated toward zero");
    m.def("to_float", [](std::int32_t raw) { return to_float(Fixed::from_raw(raw)); }, py::arg("raw"));
    m.def("shr", [](std::int32_t raw, int k) { return shr(Fixed::from_raw(raw), k).raw; }, py::arg("raw"),
          py::arg("k"));

    // generators on raw values
    m.def("circle_step_forward", [](std::int32_t u, std::int32_t v, int k) {
        check_step_exponent(k);
        return state(circle_step_forward(state(u, v), k));
    }, py::arg("u"), py::arg("v"), py::arg("k"));
    m.def("circle_step_reverse", [](std::int32_t u, std::int32_t v, int k) {
        check_step_exponent(k);
        return state(circle_step_reverse(state(u, v), k));
    }, py::arg("u"), py::arg("v"), py::arg("k"));
    m.def("hyper_step_forward", [](std::int32_t u, std::int32_t v, int k) {
        check_step_exponent(k);
        return state(hyper_step_forward(state(u, v), k));
    }, py::arg("u"), py::arg("v"), py::arg("k"));
    m.def("hyper_step_reverse", [](std::int32_t u, std::int32_t v, int k) {
        check_step_exponent(k);
        return state(hyper_step_reverse(state(u, v), k));
    }, py::arg("u"), py::arg("v"), py::arg("k"));
    m.def("initial_value", [](std::int32_t u0, std::int32_t v0, int k) {
        check_step_exponent(k);
        return initial_value(Fixed::from_raw(u0), Fixed::from_raw(v0), k).raw;
    }, py::arg("u0"), py::arg("v0"), py::arg("k"));
    m.def("hyper_initial_value", [](std::int32_t u0, std::int32_t v0, int k) {
        check_step_exponent(k);
        return hyper_initial_value(Fixed::from_raw(u0), Fixed::from_raw(v0), k).raw;
    }, py::arg("u0"), py::arg("v0"), py::arg("k"));
    m.def("closed_form_circle", &closed_form_circle, py::arg("u0"), py::arg("v0"), py::arg("eps"), py::arg("n"));
    m.def("closed_form_hyper", &closed_form_hyper, py::arg("u0"), py::arg("v0"), py::arg("eps"), py::arg("n"));
    m.def("circle_step_angle", &circle_step_angle, py::arg("k"));
    m.def("hyper_step_angle", &hyper_step_angle, py::arg("k"));

    // flatness
    m.def("vlen", [](double x, double y) { return to_float(vlen(from_float(x), from_float(y))); }, py::arg("x"),
          py::arg("y"));
    m.def("aux_radius", [](Pair p, Pair q) { return to_float(aux_radius(fx(p), fx(q))); }, py::arg("p"),
          py::arg("q"), "shift-add estimate from center-relative P, Q");
    m.def("aux_radius_exact", [](Pair p, Pair q) { return aux_radius_exact(real(p), real(q)); }, py::arg("p"),
          py::arg("q"));
    m.def("angular_inc", [](Pair p, Pair q, double flatness, int kmax, bool strict) {
        const AngularIncInfo info = angular_inc_info(fx(p), fx(q), FlatnessConfig::make(flatness, kmax, strict));
        py::dict d;
        d["k"] = info.k;
        d["radius"] = info.radius;
        d["capped"] = info.capped;
        return d;
    }, py::arg("p"), py::arg("q"), py::arg("flatness"), py::arg("kmax") = default_kmax, py::arg("strict") = false);
    m.def("kmax_for", &kmax_for, py::arg("r_max"), py::arg("delta_min"));
    m.def("chord_to_arc_exact", &chord_to_arc_exact, py::arg("r"), py::arg("eps"));

    // plotting; points are window-relative pixels
    m.def("plot_ellipse", [](Pair center, Pair p, Pair q, std::optional<int> k, double flatness, int kmax, bool strict,
                             bool raw) {
        const ConjugateEllipse e{fx(center), fx(p), fx(q)};
        return points_out(plot_ellipse(e, pick_k(e, k, flatness, kmax, strict)), raw);
    }, py::arg("center"), py::arg("p"), py::arg("q"), py::kw_only(), py::arg("k") = py::none(),
          py::arg("flatness") = 0.25, py::arg("kmax") = default_kmax, py::arg("strict") = false,
          py::arg("raw") = false);
    m.def("plot_elliptic_arc", [](Pair center, Pair p, Pair q, double start, double sweep, std::optional<int> k,
                                  double flatness, int kmax, bool strict, bool raw) {
        const ConjugateEllipse e{fx(center), fx(p), fx(q)};
        return points_out(plot_elliptic_arc(e, {start, sweep}, pick_k(e, k, flatness, kmax, strict)), raw);
    }, py::arg("center"), py::arg("p"), py::arg("q"), py::arg("start"), py::arg("sweep"), py::kw_only(),
          py::arg("k") = py::none(), py::arg("flatness") = 0.25, py::arg("kmax") = default_kmax,
          py::arg("strict") = false, py::arg("raw") = false);
    m.def("plot_hyperbolic_arc", [](Pair center, Pair p, Pair q, double start, double sweep, int k,
                                    long reseed_interval, bool raw) {
        const ConjugateHyperbola h{fx(center), fx(p), fx(q)};
        return points_out(plot_hyperbolic_arc(h, start, sweep, k, {reseed_interval}), raw);
    }, py::arg("center"), py::arg("p"), py::arg("q"), py::arg("start"), py::arg("sweep"), py::kw_only(),
          py::arg("k"), py::arg("reseed_interval") = -1, py::arg("raw") = false);

    // conversions
    py::class_<ImplicitConic>(m, "ImplicitConic")
        .def(py::init([](double a, double b, double c, double d, double e, double f) {
                 return ImplicitConic{a, b, c, d, e, f};
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d") = 0.0, py::arg("e") = 0.0, py::arg("f") = 0.0)
        .def_readwrite("a", &ImplicitConic::a)
        .def_readwrite("b", &ImplicitConic::b)
        .def_readwrite("c", &ImplicitConic::c)
        .def_readwrite("d", &ImplicitConic::d)
        .def_readwrite("e", &ImplicitConic::e)
        .def_readwrite("f", &ImplicitConic::f)
        .def("__call__", &ImplicitConic::operator(), py::arg("x"), py::arg("y"))
        .def("is_ellipse", [](const ImplicitConic& c) { return is_ellipse(c); })
        .def("__repr__", [](const ImplicitConic& c) {
            return "ImplicitConic(a=" + py::repr(py::float_(c.a)).cast<std::string>() +
                   ", b=" + py::repr(py::float_(c.b)).cast<std::string>() +
                   ", c=" + py::repr(py::float_(c.c)).cast<std::string>() +
                   ", d=" + py::repr(py::float_(c.d)).cast<std::string>() +
                   ", e=" + py::repr(py::float_(c.e)).cast<std::string>() +
                   ", f=" + py::repr(py::float_(c.f)).cast<std::string>() + ")";
        });

    m.def("implicit_from_conjugate", [](Pair p, Pair q) { return implicit_from_conjugate(real(p), real(q)); },
          py::arg("p"), py::arg("q"), "origin-centered coefficients from center-relative P, Q");
    m.def("implicit_from_ellipse", [](Pair center, Pair p, Pair q) {
        return implicit_from_ellipse({real(center), real(p), real(q)});
    }, py::arg("center"), py::arg("p"), py::arg("q"), "p and q are center-relative");
    m.def("ellipse_from_implicit", [](const ImplicitConic& c, bool strict) {
        const CenteredEllipse e =
            ellipse_from_implicit(c, strict ? CalibrationPolicy::strict : CalibrationPolicy::automatic);
        py::dict d;
        d["center"] = pair(e.center);
        d["p"] = pair(e.p);
        d["q"] = pair(e.q);
        return d;
    }, py::arg("conic"), py::arg("strict") = false, "center plus center-relative P, Q");
    m.def("translate_to_origin", [](const ImplicitConic& c) {
        const CenteredConic t = translate_to_origin(c);
        return std::make_pair(t.conic, pair(t.center));
    }, py::arg("conic"));
    m.def("calibration_number", &calibration_number, py::arg("conic"));
    m.def("calibrate", &calibrate, py::arg("conic"));
    m.def("coefficient_distance", &coefficient_distance, py::arg("x"), py::arg("y"));
}
