// Python bindings. Exact values cross the boundary as strings; the package
// __init__ turns them into fractions.Fraction and int.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "detmult/errors.hpp"
#include "detmult/multiplicity.hpp"
#include "detmult/oracle.hpp"
#include "detmult/tableaux.hpp"
#include "detmult/version.hpp"

namespace py = pybind11;
using namespace detmult;

namespace {

ProblemSpec make_spec(const std::string& kind, int n, int t, std::optional<int> m) {
    const KindType k = parse_kind(kind);
    ProblemSpec spec;
    spec.t = t;
    if (k == KindType::generic) {
        if (!m) throw DomainError("m is required for the generic kind");
        spec.kind = MatrixKind::generic(*m, n);
    } else {
        if (m && *m != n) throw DomainError("m must equal n for a square kind");
        spec.kind = k == KindType::symmetric ? MatrixKind::symmetric(n) : MatrixKind::pfaffian(n);
    }
    return spec;
}

py::dict evaluation(const Evaluation& e) {
    py::dict d;
    d["value"] = e.value.to_string();
    d["engine"] = e.engine;
    d["simplex_count"] = e.simplex_count;
    d["note"] = e.note;
    return d;
}

Layer parse_layer(const std::string& name) {
    if (name == "j") return Layer::j_layer;
    if (name == "eps") return Layer::eps_layer;
    throw DomainError("layer must be 'j' or 'eps'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact multiplicities of determinantal ideals";
    mod.attr("__version__") = DETMULT_VERSION;

    auto domain = py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
    py::register_exception<OutOfScope>(mod, "OutOfScope", domain);
    py::register_exception<ScaleRefused>(mod, "ScaleRefused", domain);

    mod.def(
        "j",
        [](const std::string& kind, int n, int t, std::optional<int> m, const std::string& engine) {
            return evaluation(evaluate_j(make_spec(kind, n, t, m), parse_engine_choice(engine)));
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("m") = py::none(),
        py::arg("engine") = "monomial");
    mod.def(
        "epsilon",
        [](const std::string& kind, int n, int t, std::optional<int> m, const std::string& engine) {
            return evaluation(evaluate_epsilon(make_spec(kind, n, t, m), parse_engine_choice(engine)));
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("m") = py::none(),
        py::arg("engine") = "monomial");
    mod.def(
        "fiber",
        [](const std::string& kind, int n, int t, std::optional<int> m, const std::string& engine) {
            return evaluation(evaluate_fiber(make_spec(kind, n, t, m), parse_engine_choice(engine)));
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("m") = py::none(),
        py::arg("engine") = "monomial");
    mod.def(
        "report",
        [](const std::string& kind, int n, int t, std::optional<int> m, const std::string& engine) {
            const MultiplicityReport r = multiplicity_report(make_spec(kind, n, t, m), parse_engine_choice(engine));
            py::dict d;
            d["kind"] = std::string(to_string(r.spec.kind.type));
            d["m"] = r.spec.kind.m;
            d["n"] = r.spec.kind.n;
            d["t"] = r.spec.t;
            d["j"] = r.j.to_string();
            d["epsilon"] = r.epsilon.to_string();
            d["fiber_degree"] = r.fiber_degree ? py::object(py::str(r.fiber_degree->to_string())) : py::none();
            d["c"] = r.c.to_string();
            d["valid_range"] = r.valid_range;
            d["notes"] = r.notes;
            return d;
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("m") = py::none(),
        py::arg("engine") = "monomial");

    mod.def("scroll_j", [](std::vector<long> a) { return scroll_j(std::move(a)).get_str(); }, py::arg("a"));
    mod.def(
        "selberg",
        [](int m, int n) {
            const SelbergCheck c = selberg_identity(m, n);
            return std::make_pair(c.lhs.to_string(), c.rhs.to_string());
        },
        py::arg("m"), py::arg("n"));
    mod.def("series", [](int m, int n) { return j_series_submaximal(m, n).to_string(); }, py::arg("m"), py::arg("n"));

    mod.def(
        "layer_count",
        [](const std::string& kind, int n, int t, long s, std::optional<int> m, const std::string& layer) {
            return layer_count(make_spec(kind, n, t, m), s, parse_layer(layer)).get_str();
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("s"), py::arg("m") = py::none(),
        py::arg("layer") = "j");
    mod.def(
        "j_estimate",
        [](const std::string& kind, int n, int t, long s, std::optional<int> m) {
            return j_estimate(make_spec(kind, n, t, m), s).to_string();
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("s"), py::arg("m") = py::none());
    mod.def(
        "epsilon_estimate",
        [](const std::string& kind, int n, int t, long s, std::optional<int> m) {
            return epsilon_estimate(make_spec(kind, n, t, m), s).to_string();
        },
        py::arg("kind"), py::kw_only(), py::arg("n"), py::arg("t"), py::arg("s"), py::arg("m") = py::none());

    mod.def(
        "tableau_count",
        [](int n, std::vector<long> row_counts) { return W(n, RowCounts(std::move(row_counts))).get_str(); },
        py::arg("n"), py::arg("row_counts"));
}
