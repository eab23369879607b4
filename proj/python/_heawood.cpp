// Python bindings. Graphs and results cross the boundary as JSON text in the
// same documents the command-line tool reads and writes; the package wrapper
// turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heawood/audit.hpp"
#include "heawood/counting.hpp"
#include "heawood/generators.hpp"
#include "heawood/io.hpp"
#include "heawood/polygon_ops.hpp"
#include "heawood/solver.hpp"

namespace py = pybind11;
using namespace heawood;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Triangulation graph(const std::string& text) { return triangulation_from_json(parse(text)); }

std::string generate(const std::string& kind, int depth, std::optional<std::uint64_t> seed, int v, int inner,
                     int outer, int level) {
    if (kind == "complete4") return to_json(complete4()).dump();
    if (kind == "octahedron") return to_json(octahedron()).dump();
    if (kind == "icosahedron") return to_json(icosahedron()).dump();
    if (kind == "stacked") return to_json(stacked(depth, seed)).dump();
    if (kind == "polygon-pair") return to_json(polygon_pair(v, inner, outer)).dump();
    if (kind == "octahedral") return to_json(octahedral_family(level)).dump();
    throw Error(ErrorCode::BadParams, "unknown generator '" + kind + "'");
}

std::string solve(const std::string& text, std::optional<std::pair<int, int>> base) {
    const Triangulation tri = graph(text);
    SolveOptions options;
    if (base) options.base = VertexPair{base->first, base->second};
    const SolveResult r = four_color(tri, options);
    return Json{{"schema", kSchemaVersion}, {"coloring", to_json(r.coloring)}, {"trace", to_json(r.trace)}}.dump();
}

std::string split(const std::string& text, std::optional<std::vector<int>> circuit,
                  std::optional<std::pair<int, int>> base) {
    const Triangulation tri = graph(text);
    if (!circuit) {
        circuit = find_hamilton_circuit(tri);
        if (!circuit) throw Error(ErrorCode::NoHamiltonCircuit, "no Hamilton circuit");
    }
    std::optional<VertexPair> b;
    if (base) b = VertexPair{base->first, base->second};
    return to_json(split_by_circuit(tri, *circuit, b)).dump();
}

std::optional<std::vector<int>> hamilton_circuit(const std::string& text) { return find_hamilton_circuit(graph(text)); }

std::string convert(const std::string& graph_text, const std::string& doc, const std::string& to, int edge,
                    int edge_color, int vertex, int vertex_color) {
    const Json g = parse(graph_text);
    const ColoringSeed seed{edge, static_cast<std::uint8_t>(edge_color), vertex, static_cast<std::uint8_t>(vertex_color)};
    const SchemeDocument in = read_scheme_document(parse(doc));
    if (is_polygon_json(g)) {
        const PolygonTriangulation p = polygon_from_json(g);
        return convert_scheme(p, &p, in, to, seed).dump();
    }
    return convert_scheme(triangulation_from_json(g), nullptr, in, to, seed).dump();
}

std::string run_audit(const std::string& statement, int max_v, int max_triangles, double budget, int jobs,
                      bool timing) {
    return to_json(audit(statement, {max_v, max_triangles, budget, jobs}), timing).dump();
}

std::vector<std::string> polygons(int v) {
    std::vector<std::string> out;
    enumerate_polygons_on_base(v, [&](const PolygonTriangulation& p) { out.push_back(to_json(p).dump()); });
    return out;
}

bool coloring_is_proper(const std::string& graph_text, const std::string& values) {
    return is_proper(graph(graph_text), vertex_coloring_from_json(parse(values)));
}

std::string dot(const std::string& graph_text, std::optional<std::string> coloring) {
    const Triangulation tri = graph(graph_text);
    std::optional<VertexColoring> c;
    if (coloring) c = vertex_coloring_from_json(parse(*coloring));
    return to_dot(tri, c ? &*c : nullptr, nullptr, &tri.labels());
}

}  // namespace

PYBIND11_MODULE(_heawood, m) {
    m.doc() = "Core routines of the heawood library";
    m.attr("SCHEMA") = std::string(kSchemaVersion);

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error)(py::str(e.what()));
            exc.attr("code") = std::string(to_string(e.code()));
            exc.attr("witness") = e.witness();
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("generate", &generate, py::arg("kind"), py::arg("depth") = 0, py::arg("seed") = py::none(), py::arg("v") = 0,
          py::arg("inner") = 0, py::arg("outer") = 0, py::arg("level") = 0);
    m.def("solve", &solve, py::arg("graph"), py::arg("base") = py::none());
    m.def("split", &split, py::arg("graph"), py::arg("circuit") = py::none(), py::arg("base") = py::none());
    m.def("hamilton_circuit", &hamilton_circuit, py::arg("graph"));
    m.def("convert", &convert, py::arg("graph"), py::arg("document"), py::arg("to"), py::arg("edge") = 0,
          py::arg("edge_color") = 0, py::arg("vertex") = 0, py::arg("vertex_color") = 0);
    m.def("audit", &run_audit, py::arg("statement"), py::arg("max_v") = 0, py::arg("max_triangles") = 0,
          py::arg("budget") = 0.0, py::arg("jobs") = 0, py::arg("timing") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("statements", [] { return statement_ids(); });
    m.def("polygons", &polygons, py::arg("v"));
    m.def("is_proper", &coloring_is_proper, py::arg("graph"), py::arg("coloring"));
    m.def("to_dot", &dot, py::arg("graph"), py::arg("coloring") = py::none());
    m.def("closed_form_count", &closed_form_count, py::arg("t"), py::arg("target"));
    m.def("brute_force_count", &brute_force_count, py::arg("t"), py::arg("target"), py::arg("bound") = 24);
}
