// Python face of the library. Reports come back as plain dicts and lists
// mirroring the CLI's JSON, so scripting and shell output stay comparable.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "abelgraph/corpus.hpp"
#include "abelgraph/json_io.hpp"

namespace py = pybind11;
using namespace abelgraph;

namespace {

py::object to_py(const Json& j) {
    if (j.is_object()) {
        py::dict d;
        for (const auto& [key, value] : j.items()) d[py::str(key)] = to_py(value);
        return d;
    }
    if (j.is_array()) {
        py::list l;
        for (const Json& item : j) l.append(to_py(item));
        return l;
    }
    if (j.is_string()) return py::str(j.get<std::string>());
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_number_integer()) return py::int_(j.get<long long>());
    if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
    if (j.is_number_float()) return py::float_(j.get<double>());
    return py::none();
}

py::int_ big_to_py(const BigInt& v) {
    // Route through the decimal string; the value can exceed 64 bits.
    std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

PointOnCurve pick_point(const std::optional<std::string>& component, const std::string& label,
                        const std::optional<std::string>& node) {
    if (node && component)
        fail(ErrorCode::ParseError, "pick either a component or a node, not both");
    if (node) return PointOnCurve::at_node(*node);
    if (component) return PointOnCurve::smooth_point(*component, label);
    fail(ErrorCode::ParseError, "pick a point: component= or node=");
}

}  // namespace

PYBIND11_MODULE(abelgraph, m) {
    m.doc() = "dual graphs of nodal curves: degree class groups, balanced multidegrees, "
              "and images of the degree-1 map";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (is_invariant_violation(e.code()))
                PyErr_SetString(PyExc_RuntimeError, e.what());
            else
                PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PointOnCurve>(m, "Point")
        .def_static("smooth", &PointOnCurve::smooth_point, py::arg("component"),
                    py::arg("label") = "p")
        .def_static("node", &PointOnCurve::at_node, py::arg("edge"))
        .def("__repr__", [](const PointOnCurve& p) {
            if (p.kind == PointOnCurve::Kind::node) return "Point.node('" + p.edge + "')";
            return "Point.smooth('" + p.component + "', '" + p.label + "')";
        });

    py::class_<DualGraph>(m, "Graph")
        .def(py::init([](const std::string& json_text) { return parse_graph(json_text); }),
             py::arg("json_text"))
        .def_property_readonly("genus", [](const DualGraph& g) { return g.genus(); })
        .def_property_readonly("components", &DualGraph::vertex_count)
        .def_property_readonly("nodes", &DualGraph::edge_count)
        .def_property_readonly("stability",
                               [](const DualGraph& g) {
                                   return std::string(stability_name(g.stability()));
                               })
        .def("component_ids",
             [](const DualGraph& g) {
                 std::vector<std::string> ids;
                 for (size_t v = 0; v < g.vertex_count(); ++v) ids.push_back(g.vertex(v).id);
                 return ids;
             })
        .def("node_ids",
             [](const DualGraph& g) {
                 std::vector<std::string> ids;
                 for (size_t e = 0; e < g.edge_count(); ++e) ids.push_back(g.edge(e).id);
                 return ids;
             })
        .def("to_json", [](const DualGraph& g) { return serialize_graph(g); })
        .def("class_group", [](const DualGraph& g) { return to_py(class_group_to_json(g)); })
        .def("spanning_trees",
             [](const DualGraph& g) { return big_to_py(spanning_tree_count(g)); })
        .def("canonical_representative",
             [](const DualGraph& g, std::vector<long long> d, size_t base) {
                 return canonical_representative(g, Multidegree(std::move(d)), base).values;
             },
             py::arg("multidegree"), py::arg("base") = 0)
        .def("classes_equal",
             [](const DualGraph& g, std::vector<long long> a, std::vector<long long> b) {
                 return classes_equal(g, Multidegree(std::move(a)), Multidegree(std::move(b)));
             },
             py::arg("a"), py::arg("b"))
        .def("balanced",
             [](const DualGraph& g, long long degree) {
                 BalancedSet bs = enumerate_balanced(g, degree);
                 if (!g.is_stable()) return to_py(balanced_to_json(g, bs, nullptr));
                 GeneralityReport gen = is_d_general(g, degree);
                 return to_py(balanced_to_json(g, bs, &gen));
             },
             py::arg("degree") = 1)
        .def("is_general",
             [](const DualGraph& g, long long degree) {
                 return is_d_general(g, degree).d_general;
             },
             py::arg("degree") = 1)
        .def("abel_multidegree",
             [](const DualGraph& g, const std::string& component) {
                 return to_py(degree_map(g, abel_multidegree(g, g.vertex_index(component))));
             },
             py::arg("component"))
        .def("abel_image",
             [](const DualGraph& g, const std::optional<std::string>& component,
                const std::string& label, const std::optional<std::string>& node) {
                 return to_py(abel_image_to_json(abel_image(g, pick_point(component, label, node))));
             },
             py::arg("component") = py::none(), py::arg("label") = "p",
             py::arg("node") = py::none())
        .def("images_equal",
             [](const DualGraph& g, const PointOnCurve& a, const PointOnCurve& b) {
                 return abel_images_equal(g, a, b);
             },
             py::arg("a"), py::arg("b"))
        .def("fibers", [](const DualGraph& g) { return to_py(fibers_to_json(abel_fibers(g))); })
        .def("vine",
             [](const DualGraph& g, long long degree, std::optional<long long> a0) {
                 return to_py(vine_to_json(g, degree, a0));
             },
             py::arg("degree"), py::arg("a0") = py::none())
        .def("analysis",
             [](const DualGraph& g, std::vector<long long> degrees, const std::string& base) {
                 size_t b = base.empty() ? 0 : g.vertex_index(base);
                 return to_py(analysis_to_json(g, degrees, b));
             },
             py::arg("degrees") = std::vector<long long>{1}, py::arg("base") = "")
        .def("blow_up",
             [](const DualGraph& g, const std::string& edge) { return blow_up(g, edge).graph; },
             py::arg("edge"))
        .def("__repr__", [](const DualGraph& g) {
            return "Graph(components=" + std::to_string(g.vertex_count()) +
                   ", nodes=" + std::to_string(g.edge_count()) +
                   ", genus=" + std::to_string(g.genus()) + ")";
        });

    m.def("generate_corpus",
          [](uint64_t seed, int count, int genus_min, int genus_max, int vertices_max) {
              CorpusSpec spec;
              spec.seed = seed;
              spec.count = count;
              spec.genus_min = genus_min;
              spec.genus_max = genus_max;
              spec.vertices_max = vertices_max;
              return generate_corpus(spec);
          },
          py::arg("seed"), py::arg("count"), py::arg("genus_min") = 2, py::arg("genus_max") = 6,
          py::arg("vertices_max") = 8);
    m.def("set_enumeration_limit", &set_enumeration_limit, py::arg("limit"));
    m.def("enumeration_limit", &enumeration_limit);

    m.attr("__version__") = "0.1.0";
}
