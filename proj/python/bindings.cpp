#include "potstab/errors.hpp"
#include "potstab/graph_expr.hpp"
#include "potstab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace potstab;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

DegreeSequence to_seq(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_sequence(o.cast<std::string>());
    return DegreeSequence(o.cast<std::vector<int>>());
}

} // namespace

PYBIND11_MODULE(_potstab, m) {
    m.doc() = "Potential-number stability engine";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

    m.def("parse_sequence", [](const py::object& s) { return to_seq(s).terms(); });
    m.def("format_sequence", [](const py::object& s) { return format_sequence(to_seq(s)); });
    m.def("is_graphic", [](const py::object& s) { return is_graphic(to_seq(s)); });
    m.def("layoff", [](const py::object& s, std::size_t i) { return layoff(to_seq(s), i).terms(); });
    m.def("l1_distance", [](const py::object& a, const py::object& b) { return l1_distance(to_seq(a), to_seq(b)); });

    m.def("graph_json", [](const std::string& g, int cap) { return dump(to_json(parse_graph(g, cap))); },
          py::arg("graph"), py::arg("cap") = default_build_cap);
    m.def("analyze_json", [](const std::string& g) { return dump(analyze_report(parse_graph(g))); });
    m.def("target_family_json", [](const std::string& g, int n) {
        Json out = Json::array();
        for (const auto& t : target_family(parse_graph(g), n)) out.push_back(to_json(t));
        return dump(out);
    });
    m.def("rho_json", [](const std::string& g, int n) { return dump(to_json(rho(parse_graph(g), n))); });

    m.def("potentially_json", [](const py::object& s, const std::string& g) {
        const DegreeSequence seq = to_seq(s);
        const SmallGraph h = parse_graph(g);
        py::gil_scoped_release release;
        return dump(to_json(potentially(seq, h)));
    });
    m.def(
        "sigma_exact_json",
        [](const std::string& g, int n, int threads) {
            const SmallGraph h = parse_graph(g);
            py::gil_scoped_release release;
            return dump(to_json(sigma_exact(h, n, {}, threads)));
        },
        py::arg("graph"), py::arg("n"), py::arg("threads") = 1);
    m.def(
        "probe_json",
        [](const py::object& s, const std::string& g, std::optional<std::int64_t> f, double epsilon,
           std::optional<double> delta) {
            ProbeConfig cfg;
            cfg.f_override = f;
            cfg.epsilon = epsilon;
            cfg.delta = delta;
            const DegreeSequence seq = to_seq(s);
            const SmallGraph h = parse_graph(g);
            ProbeResult r;
            {
                py::gil_scoped_release release;
                r = run_probe(seq, h, cfg);
            }
            Json j;
            j["verdict"] = to_json(r.verdict);
            j["trace"] = to_json(r.trace);
            return dump(j);
        },
        py::arg("sequence"), py::arg("graph"), py::arg("f_override") = py::none(), py::arg("epsilon") = 0.25,
        py::arg("delta") = py::none());
}
