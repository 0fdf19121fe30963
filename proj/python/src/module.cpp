#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropdimer/almost_toric.hpp"
#include "tropdimer/catalog.hpp"
#include "tropdimer/cli.hpp"
#include "tropdimer/errors.hpp"
#include "tropdimer/io.hpp"
#include "tropdimer/kasteleyn.hpp"
#include "tropdimer/mutation.hpp"
#include "tropdimer/render.hpp"

#include <sstream>

namespace py = pybind11;
using namespace tropdimer;

namespace {

py::object fraction(const Rat& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::str(r.str()));
}

py::tuple point(const Vec2& v) { return py::make_tuple(fraction(v.x), fraction(v.y)); }

std::vector<std::pair<long long, long long>> classes(const std::vector<H1Class>& cs) {
    std::vector<std::pair<long long, long long>> out;
    for (const auto& c : cs) out.push_back({c.a, c.b});
    return out;
}

std::vector<H1Class> from_pairs(const std::vector<std::pair<long long, long long>>& ps) {
    std::vector<H1Class> out;
    for (const auto& [a, b] : ps) out.push_back({a, b});
    return out;
}

py::list polygon(const RatPolygon& p) {
    py::list out;
    for (const auto& v : p.vertices()) out.append(point(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_tropdimer, m) {
    m.doc() = "Dual dimers, tropical fans, Kasteleyn determinants and almost-toric diagrams";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<DualDimer>(m, "Dimer")
        .def_static("from_json", [](const std::string& text) { return parse_dimer(text).dimer; }, py::arg("text"))
        .def_static("catalog", &catalog_dimer, py::arg("name"))
        .def("to_json", [](const DualDimer& d) { return serialize_dimer(d); })
        .def_property_readonly("denominator", [](const DualDimer& d) { return d.denominator; })
        .def_property_readonly("polytopes", [](const DualDimer& d) {
            py::list out;
            for (const auto& p : d.polytopes) out.append(py::make_tuple(color_name(p.color), polygon(p.polygon)));
            return out;
        })
        .def("validate", [](const DualDimer& d) {
            ValidationReport r = validate(d);
            py::dict axioms;
            for (const auto& a : r.axioms) axioms[py::str(a.name)] = a.passed;
            py::dict out;
            out["ok"] = r.ok();
            out["self_intersecting"] = r.self_intersecting;
            out["axioms"] = axioms;
            out["overlaps"] = r.overlaps;
            return out;
        })
        .def("zigzags", [](const DualDimer& d) {
            std::vector<H1Class> cs;
            for (const auto& z : zigzag_paths(d)) cs.push_back(z.cls);
            return classes(cs);
        })
        .def("fan", [](const DualDimer& d) {
            py::list out;
            for (const auto& [r, k] : fan_rays(dimer_to_tropical_fan(d))) out.append(py::make_tuple(point(r), k));
            return out;
        })
        .def("graph_size", [](const DualDimer& d) {
            DimerGraph g = build_graph(d);
            return py::make_tuple(g.whites.size() + g.blacks.size(), g.edges.size());
        })
        .def("face_count", [](const DualDimer& d) { return faces(d).size(); })
        .def("euler_characteristic", &euler_characteristic)
        .def("determinant", [](const DualDimer& d, const std::string& gauge) {
            return determinant(kasteleyn_matrix(d, Gauge::parse(gauge))).str();
        }, py::arg("gauge") = "paper")
        .def("normalized_determinant", [](const DualDimer& d, const std::string& gauge) {
            return normalize_determinant(determinant(kasteleyn_matrix(d, Gauge::parse(gauge)))).str();
        }, py::arg("gauge") = "paper")
        .def("matching_count", [](const DualDimer& d) { return enumerate_matchings(d, build_graph(d)).size(); })
        .def("mutate", [](const DualDimer& d, int face) {
            MutationResult r = mutate_face(d, face);
            return py::make_tuple(r.dimer, r.immersed);
        }, py::arg("face"))
        .def("mutation_directions", [](const DualDimer& d) { return classes(mutation_directions(d)); })
        .def("svg", [](const DualDimer& d, const std::vector<std::string>& layers) {
            RenderOptions opt;
            if (!layers.empty()) opt.layers = {layers.begin(), layers.end()};
            return render_dimer_svg(d, opt);
        }, py::arg("layers") = std::vector<std::string>{});

    m.def("catalog_names", &catalog_names);
    m.def("del_pezzo_names", &del_pezzo_names);
    m.def("genus", &genus_degree, py::arg("degree"));
    m.def("seed_directions", [](const std::string& name) { return classes(seed_directions(del_pezzo(name).polygon)); },
          py::arg("name"));
    m.def("seed_dimer", [](const std::string& name) { return del_pezzo(name).seed; }, py::arg("name"));
    m.def("compare_up_to_unimodular", [](const std::vector<std::pair<long long, long long>>& a,
                                         const std::vector<std::pair<long long, long long>>& b) -> py::object {
        auto g = compare_up_to_unimodular(from_pairs(a), from_pairs(b));
        if (!g) return py::none();
        return py::cast(std::vector<std::vector<long long>>{{g->m[0][0], g->m[0][1]}, {g->m[1][0], g->m[1][1]}});
    }, py::arg("a"), py::arg("b"));
    m.def("x3333_classes", [] { return classes(x3333_classes()); });

    m.def("outer_torus", [](const std::string& name) {
        BaseDiagram d = del_pezzo(name).traded;
        return serialize_diagram({d, build_outer_torus(d)});
    }, py::arg("name"));
    m.def("inner_torus", [](const std::string& name) {
        BaseDiagram d = del_pezzo(name).traded;
        return serialize_diagram({d, build_inner_torus(d)});
    }, py::arg("name"));
    m.def("exchange", [](const std::string& text, const std::vector<int>& nodes) {
        DiagramDocument doc = parse_diagram(text);
        if (!doc.curve) throw DomainError("diagram has no curve");
        return serialize_diagram({doc.diagram, nodal_trade_exchange(*doc.curve, doc.diagram, nodes)});
    }, py::arg("text"), py::arg("nodes"));
    m.def("same_curve", [](const std::string& a, const std::string& b) {
        DiagramDocument x = parse_diagram(a), y = parse_diagram(b);
        if (!x.curve || !y.curve) throw DomainError("diagram has no curve");
        return same_curve(*x.curve, *y.curve);
    });
    m.def("diagram_status", [](const std::string& text) {
        DiagramDocument doc = parse_diagram(text);
        if (!doc.curve) throw DomainError("diagram has no curve");
        return py::make_tuple(balanced_on_base(*doc.curve, doc.diagram), admissible(*doc.curve, doc.diagram));
    });
    m.def("section_examples", [] {
        return py::make_tuple(validate_section(two_chart_example()), validate_section(two_chart_nonexample()));
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
