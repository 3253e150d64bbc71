#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dp5/constants.hpp"
#include "dp5/enumerator.hpp"
#include "dp5/heights.hpp"
#include "dp5/io.hpp"
#include "dp5/torsor.hpp"

namespace py = pybind11;
using namespace dp5;

namespace {

Integer to_integer(const py::int_& x) { return Integer(py::str(static_cast<py::handle>(x)).cast<std::string>(), 10); }

py::int_ to_py(const Integer& x) { return py::int_(py::module_::import("builtins").attr("int")(x.get_str())); }

py::object to_fraction(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(rational_string(q));
}

py::tuple interval_to_py(const Interval& x) { return py::make_tuple(to_fraction(x.lo), to_fraction(x.hi)); }

ProjectivePoint point(const py::int_& a, const py::int_& b, const py::int_& c) {
    return ProjectivePoint::from_triple(to_integer(a), to_integer(b), to_integer(c));
}

CoxTuple tuple_from(const std::vector<py::int_>& v) {
    if (v.size() != 10) throw std::invalid_argument("a Cox tuple has ten entries");
    CoxTuple a;
    for (int i = 0; i < 10; ++i) a[i] = to_integer(v[i]);
    return a;
}

py::list tuple_to(const CoxTuple& a) {
    py::list l;
    for (const auto& x : a.v) l.append(to_py(x));
    return l;
}

HeightSet make_height_set(const py::object& source) {
    if (py::isinstance<py::str>(source)) return HeightSet::builtin(height_set_id_from_string(source.cast<std::string>()));
    std::vector<QuadraticForm> forms;
    for (const auto& row : source) {
        std::array<Integer, 6> c;
        int k = 0;
        for (const auto& x : row) {
            if (k == 6) throw std::invalid_argument("each form needs six coefficients");
            c[k++] = to_integer(x.cast<py::int_>());
        }
        if (k != 6) throw std::invalid_argument("each form needs six coefficients");
        forms.emplace_back(c);
    }
    return HeightSet::custom(std::move(forms));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "integral points on the quintic del Pezzo surface";

    py::class_<HeightSet>(m, "HeightSet")
        .def(py::init(&make_height_set), py::arg("source"))
        .def_property_readonly("id", &HeightSet::name)
        .def_property_readonly("kappa", [](const HeightSet& ps) { return to_py(ps.kappa()); })
        .def_property_readonly("forms", [](const HeightSet& ps) {
            py::list out;
            for (const auto& f : ps.forms()) {
                py::list row;
                for (const auto& c : f.c) row.append(to_py(c));
                out.append(row);
            }
            return out;
        });

    m.def("height_projective", [](const HeightSet& ps, const py::int_& a, const py::int_& b, const py::int_& c) {
        return to_fraction(height_projective(ps, point(a, b, c)));
    });
    m.def("gcd_identity_check", [](const HeightSet& ps, const py::int_& a, const py::int_& b, const py::int_& c) {
        return gcd_identity_check(ps, point(a, b, c));
    });
    m.def("height_cox", [](const HeightSet& ps, const std::vector<py::int_>& t) {
        return to_py(height_cox(ps, tuple_from(t)));
    });

    m.def("chart_lift", [](const py::int_& a, const py::int_& b, const py::int_& c) {
        return tuple_to(chart_lift(point(a, b, c)));
    });
    m.def("blow_down", [](const std::vector<py::int_>& t) {
        auto y = blow_down(tuple_from(t));
        return py::make_tuple(to_py(y.y1), to_py(y.y2), to_py(y.y3));
    });
    m.def("is_integral", [](const py::int_& a, const py::int_& b, const py::int_& c) {
        return is_integral(point(a, b, c));
    });
    m.def("pluecker_residuals", [](const std::vector<py::int_>& t) {
        py::list l;
        for (const auto& r : pluecker_residuals(tuple_from(t))) l.append(to_py(r));
        return l;
    });
    m.def("coprimality_check", [](const std::vector<py::int_>& t) { return coprimality_check(tuple_from(t)); });
    m.def("canonicalize_orbit", [](const std::vector<py::int_>& t) {
        return tuple_to(canonicalize_orbit(tuple_from(t)));
    });

    m.def(
        "count_torsor",
        [](std::uint64_t B, const HeightSet& ps, unsigned threads) {
            py::gil_scoped_release nogil;
            return count_torsor(B, ps, EnumOptions{threads}).count;
        },
        py::arg("B"), py::arg("ps"), py::arg("threads") = 1);
    m.def(
        "count_direct",
        [](std::uint64_t B, const HeightSet& ps, unsigned threads) {
            py::gil_scoped_release nogil;
            return count_direct(B, ps, EnumOptions{threads}).count;
        },
        py::arg("B"), py::arg("ps"), py::arg("threads") = 1);
    m.def(
        "count_series",
        [](const std::vector<std::uint64_t>& bounds, const HeightSet& ps, unsigned threads) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
            {
                py::gil_scoped_release nogil;
                for (const auto& r : count_series(bounds, ps, EnumOptions{threads}))
                    out.emplace_back(r.bound, r.count);
            }
            return out;
        },
        py::arg("bounds"), py::arg("ps"), py::arg("threads") = 1);

    m.def("alpha_exact", [] { return to_fraction(alpha_exact()); });
    m.def("euler_local_factor", [](std::uint64_t p) { return to_fraction(euler_local_factor(p)); });
    m.def("euler_product", [](std::uint64_t cutoff) { return interval_to_py(euler_product(cutoff)); });
    m.def("ff_surface_count", [](std::uint32_t p) {
        auto c = ff_surface_count(p);
        return py::make_tuple(c.x_count, c.u_count);
    });
    m.def("padic_density_check", [](std::uint32_t p) { return padic_density_check(p); });
    m.def(
        "archimedean_density",
        [](const HeightSet& ps, double tol, std::uint64_t threshold) {
            QuadratureOptions o;
            o.threshold = threshold;
            return interval_to_py(archimedean_density(ps, tol, o));
        },
        py::arg("ps"), py::arg("tol"), py::arg("threshold") = 1);
    m.def(
        "leading_constant",
        [](const HeightSet& ps, std::uint64_t cutoff, double tol) {
            auto j = constant_report_to_json(leading_constant(ps, cutoff, tol));
            return py::module_::import("json").attr("loads")(j.dump());
        },
        py::arg("ps"), py::arg("prime_cutoff"), py::arg("tol"));
}
