#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <vector>

#include "repbasis/builder.hpp"
#include "repbasis/certificate_io.hpp"
#include "repbasis/repcount.hpp"
#include "repbasis/target_config.hpp"
#include "repbasis/useq.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Python int <-> arbitrary-precision integer, through the decimal string.
template <>
struct type_caster<repbasis::Int> {
    PYBIND11_TYPE_CASTER(repbasis::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
        value = repbasis::parse_int(std::string(py::str(src)));
        return true;
    }

    static handle cast(const repbasis::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// Non-negative int or math.inf.
template <>
struct type_caster<repbasis::ExtCount> {
    PYBIND11_TYPE_CASTER(repbasis::ExtCount, const_name("int | float"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) {
            if (!std::isinf(PyFloat_AsDouble(src.ptr())) || PyFloat_AsDouble(src.ptr()) < 0) return false;
            value = repbasis::ExtCount::infinity();
            return true;
        }
        if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
        long long v = PyLong_AsLongLong(src.ptr());
        if (PyErr_Occurred() || v < 0) {
            PyErr_Clear();
            return false;
        }
        value = repbasis::ExtCount(static_cast<std::uint64_t>(v));
        return true;
    }

    static handle cast(const repbasis::ExtCount& v, return_value_policy, handle) {
        if (v.is_infinite()) return PyFloat_FromDouble(INFINITY);
        return PyLong_FromUnsignedLongLong(v.value());
    }
};

}  // namespace pybind11::detail

namespace {

using namespace repbasis;

FiniteSet to_set(const std::vector<Int>& elements) { return FiniteSet(elements); }

std::vector<Int> to_list(const FiniteSet& set) { return {set.begin(), set.end()}; }

py::list checks_to_python(const Certificate& cert) {
    py::list out;
    for (const auto& c : cert.checks) out.append(py::make_tuple(c.name, c.passed, c.witness));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive bases with a prescribed representation function";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<TargetFunction>(m, "TargetFunction")
        .def(py::init<>())
        .def(py::init<ExtCount>(), py::arg("default"))
        .def(py::init<std::int64_t, std::int64_t, std::vector<ExtCount>, ExtCount>(), py::arg("window_lo"),
             py::arg("window_hi"), py::arg("values"), py::arg("default"))
        .def_static("parse", [](const std::string& text) { return parse_target_config(text).f; })
        .def("render", [](const TargetFunction& f) { return render_target_config(f, std::nullopt); })
        .def("eval", py::overload_cast<const Int&>(&TargetFunction::eval, py::const_), py::arg("n"))
        .def("__call__", py::overload_cast<const Int&>(&TargetFunction::eval, py::const_), py::arg("n"))
        .def("delta", &TargetFunction::delta)
        .def("d0", &TargetFunction::d0);

    py::class_<SparsityBound>(m, "SparsityBound")
        .def(py::init([](const std::string& family, const std::vector<std::string>& params) {
                 std::vector<Rational> parsed;
                 for (const auto& p : params) parsed.push_back(parse_rational(p));
                 return SparsityBound(parse_phi_family(family), std::move(parsed));
             }),
             py::arg("family"), py::arg("params"))
        .def("at_least", [](const SparsityBound& phi, const Int& x, const Int& t) { return phi.at_least(x, Rational(t)); },
             py::arg("x"), py::arg("t"))
        .def("approx", &SparsityBound::approx, py::arg("x"))
        .def_property_readonly("family", [](const SparsityBound& phi) { return std::string(to_string(phi.family())); })
        .def_property_readonly("params", &SparsityBound::params_text);

    m.def("sparsity_threshold", &sparsity_threshold, py::arg("phi"), py::arg("k"));

    m.def("v_decompose", [](std::int64_t mm) {
        const VIndex v = v_decompose(mm);
        return py::make_tuple(v.s, v.r);
    }, py::arg("m"));
    m.def("u_stream", &u_stream, py::arg("f"), py::arg("count"));
    m.def("u_bound_check", &u_bound_check, py::arg("f"), py::arg("count"));

    m.def("count_unordered", [](const std::vector<Int>& a, unsigned h, const Int& n) { return count_unordered(to_set(a), h, n); },
          py::arg("set"), py::arg("h"), py::arg("n"));
    m.def("count_ordered", [](const std::vector<Int>& a, unsigned h, const Int& n) { return count_ordered(to_set(a), h, n); },
          py::arg("set"), py::arg("h"), py::arg("n"));
    m.def("count_restricted", [](const std::vector<Int>& a, unsigned h, const Int& n) { return count_restricted(to_set(a), h, n); },
          py::arg("set"), py::arg("h"), py::arg("n"));
    m.def("count_restricted_ordered",
          [](const std::vector<Int>& a, unsigned h, const Int& n) { return count_restricted_ordered(to_set(a), h, n); },
          py::arg("set"), py::arg("h"), py::arg("n"));
    m.def("histogram", [](const std::vector<Int>& a, unsigned h) {
        py::dict out;
        for (const auto& [n, c] : histogram(to_set(a), h).counts) out[py::cast(n)] = c;
        return out;
    }, py::arg("set"), py::arg("h"));
    m.def("is_sidon", [](const std::vector<Int>& a, unsigned h) { return is_sidon(to_set(a), h); }, py::arg("set"), py::arg("h"));
    m.def("sidon_extension_bound", [](const std::vector<Int>& a, unsigned h) { return sidon_extension_bound(to_set(a), h); },
          py::arg("set"), py::arg("h"));
    m.def("counting_fn", [](const std::vector<Int>& a, const Int& y, const Int& x) { return counting_fn(to_set(a), y, x); },
          py::arg("set"), py::arg("y"), py::arg("x"));

    m.def("choose_c", [](std::int64_t u, const Int& d, const Int& w, unsigned h, const std::string& policy,
                         std::uint64_t seed, std::uint64_t slack) {
        CSelectionPolicy p{parse_policy_mode(policy), seed, slack};
        std::mt19937_64 rng(seed);
        return choose_c(u, d, w, h, p, rng);
    }, py::arg("u"), py::arg("d"), py::arg("w"), py::arg("h"), py::arg("policy") = "minimal", py::arg("seed") = 0,
          py::arg("slack") = 1000);

    m.def("build", [](const std::string& config_text) {
        const BuilderConfig config = parse_builder_config(config_text);
        BuildResult result;
        {
            py::gil_scoped_release release;
            result = build(config);
        }
        return py::make_tuple(to_list(result.set), render_certificate(result.certificate), result.certificate.passed());
    }, py::arg("config_text"), "Run the construction; returns (set, certificate_text, passed).");

    m.def("verify_certificate", [](const std::string& text) {
        const CertificateInput input = parse_certificate(text);
        const Certificate cert = verify(input.set, input.steps, input.config);
        return py::make_tuple(cert.passed(), checks_to_python(cert));
    }, py::arg("text"), "Replay a certificate; returns (passed, [(name, passed, witness), ...]).");
}
