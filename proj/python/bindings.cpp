#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arq/arq.hpp"

namespace py = pybind11;

namespace {

arq::ValuedQuiver make_quiver(int n, const std::vector<std::tuple<int, int, int, int>>& arrows) {
    std::vector<arq::Arrow> list;
    for (const auto& [s, d, a, b] : arrows) list.push_back({s, d, {a, b}});
    return arq::ValuedQuiver::validate(n, std::move(list));
}

std::vector<std::tuple<int, int, int, int>> arrow_list(const arq::ValuedQuiver& q) {
    std::vector<std::tuple<int, int, int, int>> out;
    for (const auto& a : q.arrows()) out.emplace_back(a.src, a.dst, a.val.a, a.val.b);
    return out;
}

py::dict hammock_dict(const arq::HammockResult& h) {
    py::dict d;
    std::map<std::pair<int, int>, long long> table;
    for (const auto& [v, value] : h.table) table[{v.level, v.base}] = value;
    std::vector<std::pair<int, int>> vertices;
    for (const auto& v : arq::hammock_vertices(h)) vertices.emplace_back(v.level, v.base);
    d["k"] = h.k;
    d["table"] = table;
    d["terminator"] = std::make_pair(h.terminator.level, h.terminator.base);
    d["m"] = h.m_of;
    d["rho"] = h.rho_pair;
    d["vertices"] = vertices;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Auslander-Reiten quivers of Dynkin ext-quivers";

    // Message starts with the error kind, e.g. "TwoCycle at line 3: ...".
    py::register_exception<arq::Error>(m, "ArqError", PyExc_ValueError);

    py::class_<arq::ValuedQuiver>(m, "ValuedQuiver")
        .def(py::init(&make_quiver), py::arg("n"), py::arg("arrows"))
        .def_property_readonly("n", &arq::ValuedQuiver::n)
        .def_property_readonly("arrows", &arrow_list)
        .def("__eq__", [](const arq::ValuedQuiver& a, const arq::ValuedQuiver& b) { return a == b; })
        .def("__repr__", [](const arq::ValuedQuiver& q) {
            return "ValuedQuiver(n=" + std::to_string(q.n()) + ", arrows=" + std::to_string(q.arrows().size()) + ")";
        });

    m.def("parse", &arq::parse, py::arg("text"));
    m.def("opposite", &arq::opposite, py::arg("q"));
    m.def("arrow_counts", [](const arq::ValuedQuiver& q, int x, int y) {
        auto c = arq::arrow_counts(q, x, y);
        return std::make_pair(c.aplus, c.aminus);
    });
    m.def("classify", [](const arq::ValuedQuiver& q) -> py::object {
        auto d = arq::classify_dynkin(arq::underlying_graph(q));
        if (!d) return py::none();
        return py::make_tuple(std::string(1, arq::family_letter(d->family)), d->rank, d->relabel);
    });
    m.def("knit_hammock", [](const arq::ValuedQuiver& q, int k) { return hammock_dict(arq::knit_hammock(q, k)); });
    m.def("closed_form_rho_m", [](const arq::ValuedQuiver& q) {
        auto r = arq::closed_form_rho_m(q);
        return std::make_pair(r.m, r.rho);
    });
    m.def("coxeter", [](const arq::ValuedQuiver& q) {
        const auto arq = arq::build(q);
        const auto cd = arq::coxeter_matrix(arq);
        py::dict d;
        d["matrix"] = cd.cox;
        d["cartan"] = cd.cartan;
        d["order"] = cd.order;
        d["order_identity"] = arq::order_identity_check(arq, cd);
        return d;
    });
    m.def(
        "report_json", [](const arq::ValuedQuiver& q, bool hammocks) { return arq::to_json(arq::make_report(q, hammocks)); },
        py::arg("q"), py::arg("hammocks") = false);
    m.def("dot", [](const arq::ValuedQuiver& q) { return arq::to_dot(arq::build(q)); });
    m.def("check", [](const arq::ValuedQuiver& q) {
        const auto rep = arq::run_all_checks(q);
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : rep.checks) out.emplace_back(c.name, c.pass, c.where);
        return out;
    });
}
