#include "heawood/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "heawood/polygon_ops.hpp"

namespace heawood {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) parse_error(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const Json& x : j) out.push_back(as_int(x, what));
    return out;
}

std::vector<Triple> triples(const Json& j) {
    if (!j.is_array()) parse_error("triangles must be an array");
    std::vector<Triple> out;
    for (const Json& t : j) {
        const auto xs = int_list(t, "triangle");
        if (xs.size() != 3) parse_error("a triangle needs 3 vertices");
        out.push_back({xs[0], xs[1], xs[2]});
    }
    return out;
}

VertexPair pair(const Json& j, const char* what) {
    const auto xs = int_list(j, what);
    if (xs.size() != 2) parse_error(std::string(what) + " needs 2 vertices");
    return {xs[0], xs[1]};
}

Json triples_json(std::span<const Triple> ts) {
    Json out = Json::array();
    for (const Triple& t : ts) out.push_back({t[0], t[1], t[2]});
    return out;
}

template <typename Parse>
auto indexed(const Json& j, const char* what, Parse parse) {
    using Value = decltype(parse(j));
    if (!j.is_object()) parse_error(std::string(what) + " must be an object keyed by index");
    std::vector<std::optional<Value>> slots(j.size());
    for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        int i = -1;
        try {
            i = std::stoi(key, &pos);
        } catch (const std::exception&) {
            parse_error(std::string(what) + " key \"" + key + "\" is not an index");
        }
        if (pos != key.size() || i < 0 || static_cast<std::size_t>(i) >= slots.size() || slots[static_cast<std::size_t>(i)]) {
            parse_error(std::string(what) + " keys must be 0..n-1");
        }
        slots[static_cast<std::size_t>(i)] = parse(value);
    }
    std::vector<Value> out;
    for (auto& s : slots) out.push_back(*s);
    return out;
}

char single_char(const Json& j, const char* what) {
    if (!j.is_string() || j.get<std::string>().size() != 1) parse_error(std::string(what) + " must be one character");
    return j.get<std::string>()[0];
}

template <typename Value, typename Format>
Json keyed(const std::vector<Value>& values, Format format) {
    Json out = Json::object();
    for (std::size_t i = 0; i < values.size(); ++i) out[std::to_string(i)] = format(values[i]);
    return out;
}

Json twins_json(const TriangleMesh& m) { return Json(std::vector<int>(m.twins().begin(), m.twins().end())); }

const char* fill_name(std::uint8_t c) {
    static constexpr const char* names[] = {"cyan", "magenta", "yellow", "black"};
    return names[c];
}

const char* edge_name(std::uint8_t c) {
    static constexpr const char* names[] = {"red", "green", "blue"};
    return names[c];
}

}  // namespace

Json to_json(const Triangulation& tri) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["v"] = tri.vertex_count();
    j["triangles"] = triples_json(tri.triangles());
    if (tri.has_multi_edges()) j["twins"] = twins_json(tri);
    if (!tri.labels().empty()) j["labels"] = tri.labels();
    return j;
}

Triangulation triangulation_from_json(const Json& j) {
    const int v = as_int(field(j, "v"), "v");
    auto ts = triples(field(j, "triangles"));
    Triangulation tri = j.contains("twins") ? Triangulation::from_mesh(v, ts, int_list(j.at("twins"), "twins"))
                                            : build_triangulation(v, ts);
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) parse_error("labels must be an array");
        std::vector<std::string> labels;
        for (const Json& x : j.at("labels")) {
            if (!x.is_string()) parse_error("labels must be strings");
            labels.push_back(x.get<std::string>());
        }
        tri = tri.with_labels(std::move(labels));
    }
    return tri;
}

Json to_json(const PolygonTriangulation& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["v"] = p.vertex_count();
    j["perimeter"] = std::vector<int>(p.perimeter().begin(), p.perimeter().end());
    j["base"] = {p.base().first, p.base().second};
    Json diagonals = Json::array();
    for (const auto& [a, b] : p.diagonals()) diagonals.push_back({a, b});
    j["diagonals"] = diagonals;
    j["triangles"] = triples_json(p.triangles());
    if (p.has_multi_edges()) j["twins"] = twins_json(p);
    return j;
}

PolygonTriangulation polygon_from_json(const Json& j) {
    const auto perimeter = int_list(field(j, "perimeter"), "perimeter");
    const VertexPair base = pair(field(j, "base"), "base");
    if (!j.contains("triangles")) {
        std::vector<VertexPair> diagonals;
        for (const Json& d : field(j, "diagonals")) diagonals.push_back(pair(d, "diagonal"));
        auto p = PolygonTriangulation::from_diagonals(perimeter, base, diagonals);
        if (!std::equal(perimeter.begin(), perimeter.end(), p.perimeter().begin(), p.perimeter().end())) parse_error("base must run from the last perimeter vertex to the first");
        return p;
    }
    const int v = j.contains("v") ? as_int(j.at("v"), "v") : static_cast<int>(perimeter.size());
    auto ts = triples(j.at("triangles"));
    PolygonTriangulation p = j.contains("twins")
                                 ? PolygonTriangulation::from_mesh(v, perimeter, ts, int_list(j.at("twins"), "twins"))
                                 : PolygonTriangulation::from_triangles(v, perimeter, ts);
    if (p.base() != base) parse_error("base must run from the last perimeter vertex to the first");
    if (j.contains("diagonals")) {
        std::vector<VertexPair> diagonals;
        for (const Json& d : j.at("diagonals")) {
            const auto [a, b] = pair(d, "diagonal");
            diagonals.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(diagonals.begin(), diagonals.end());
        if (diagonals != p.diagonals()) parse_error("diagonals disagree with the triangles");
    }
    return p;
}

Json to_json(const VertexColoring& c) {
    return keyed(c.colors, [](std::uint8_t x) { return std::string(1, vertex_color_char(x)); });
}

Json to_json(const EdgeColoring& c) {
    return keyed(c.colors, [](std::uint8_t x) { return std::string(1, edge_color_char(x)); });
}

Json to_json(const OrientationAssignment& a) {
    return keyed(a.values, [](std::uint8_t x) { return static_cast<int>(x); });
}

Json to_json(const VertexNumbering& n) {
    return keyed(n.values, [](std::int8_t x) { return static_cast<int>(x); });
}

VertexColoring vertex_coloring_from_json(const Json& j) {
    return {indexed(j, "vertex colouring", [](const Json& x) { return parse_vertex_color(single_char(x, "colour")); })};
}

EdgeColoring edge_coloring_from_json(const Json& j) {
    return {indexed(j, "edge colouring", [](const Json& x) { return parse_edge_color(single_char(x, "colour")); })};
}

OrientationAssignment assignment_from_json(const Json& j) {
    return {indexed(j, "assignment", [](const Json& x) {
        const int v = as_int(x, "orientation");
        if (v != 1 && v != 2) parse_error("orientation values are 1 or 2");
        return static_cast<std::uint8_t>(v);
    })};
}

VertexNumbering numbering_from_json(const Json& j) {
    return {indexed(j, "numbering", [](const Json& x) {
        const int v = as_int(x, "numbering value");
        if (v < 0 || v > 2) parse_error("numbering values are 0, 1 or 2");
        return static_cast<std::int8_t>(v);
    })};
}

Json scheme_document(std::string_view scheme, const Json& values) {
    return Json{{"schema", kSchemaVersion}, {"scheme", scheme}, {"values", values}};
}

SchemeDocument read_scheme_document(const Json& j) {
    if (!j.is_object()) parse_error("scheme document must be an object");
    const Json& scheme = field(j, "scheme");
    if (!scheme.is_string()) parse_error("scheme must be a string");
    const auto name = scheme.get<std::string>();
    if (name != "v4c" && name != "e3c" && name != "ct2" && name != "cv3") parse_error("unknown scheme \"" + name + "\"");
    return {name, field(j, "values")};
}

Json convert_scheme(const TriangleMesh& mesh, const PolygonTriangulation* polygon, const SchemeDocument& in,
                    std::string_view to, const ColoringSeed& seed) {
    if (to != "v4c" && to != "e3c" && to != "ct2" && to != "cv3") {
        throw Error(ErrorCode::BadParams, "unknown target scheme \"" + std::string(to) + "\"");
    }
    // Everything goes through the orientation assignment except v4c <-> e3c,
    // which keeps the input colours instead of reseeding them.
    std::optional<VertexColoring> v4c;
    std::optional<EdgeColoring> e3c;
    OrientationAssignment ct2;
    if (in.scheme == "v4c") {
        v4c = vertex_coloring_from_json(in.values);
        e3c = v4c_to_e3c(mesh, *v4c);
        ct2 = e3c_to_ct2(mesh, *e3c);
    } else if (in.scheme == "e3c") {
        e3c = edge_coloring_from_json(in.values);
        ct2 = e3c_to_ct2(mesh, *e3c);
    } else if (in.scheme == "ct2") {
        ct2 = assignment_from_json(in.values);
    } else {
        if (polygon == nullptr) throw Error(ErrorCode::BadParams, "cv3 input needs a polygon graph");
        ct2 = decode_cv3_to_ct2(*polygon, numbering_from_json(in.values));
    }
    if (to == "ct2") return scheme_document(to, to_json(ct2));
    if (to == "cv3") return scheme_document(to, to_json(cv3_from_ct2(mesh, ct2)));
    if (!e3c) e3c = ct2_to_e3c(mesh, ct2, seed.edge, seed.edge_color);
    if (to == "e3c") return scheme_document(to, to_json(*e3c));
    if (!v4c) v4c = e3c_to_v4c(mesh, *e3c, seed.vertex, seed.vertex_color);
    return scheme_document(to, to_json(*v4c));
}

bool is_polygon_json(const Json& j) { return j.is_object() && j.contains("perimeter"); }

Json to_json(const HamiltonSplit& s) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["circuit"] = s.circuit;
    j["base"] = {s.base.first, s.base.second};
    j["inner"] = to_json(s.inner);
    j["outer"] = to_json(s.outer);
    j["inner_source"] = s.inner_source;
    j["outer_source"] = s.outer_source;
    return j;
}

HamiltonSplit split_from_json(const Json& j) {
    return {int_list(field(j, "circuit"), "circuit"),
            pair(field(j, "base"), "base"),
            polygon_from_json(field(j, "inner")),
            polygon_from_json(field(j, "outer")),
            int_list(field(j, "inner_source"), "inner_source"),
            int_list(field(j, "outer_source"), "outer_source")};
}

Json to_json(const SolveTrace& t) {
    Json j;
    if (t.separating) {
        j["separating"] = {{"vertices", t.separating->vertices}, {"edges", t.separating->edges}};
        j["child_permutation"] = t.child_permutation;
        j["parent"] = to_json(t.parts.at(0));
        j["child"] = to_json(t.parts.at(1));
    } else {
        j["circuit"] = t.circuit;
        j["base"] = {t.base.first, t.base.second};
        Json ears = Json::array();
        for (const auto& e : t.ears) ears.push_back({e.triangle, e.tip});
        j["ears"] = ears;
        j["degenerate_assignment"] = to_json(t.degenerate_assignment);
        j["assignment"] = to_json(t.assignment);
        j["seed_edge"] = t.seed_edge;
        j["seed_color"] = std::string(1, edge_color_char(t.seed_color));
        j["closure_color"] = std::string(1, edge_color_char(t.closure_color));
    }
    j["coloring"] = to_json(t.coloring);
    return j;
}

SolveTrace trace_from_json(const Json& j) {
    SolveTrace t;
    t.coloring = vertex_coloring_from_json(field(j, "coloring"));
    if (j.contains("separating")) {
        const Json& s = j.at("separating");
        const auto vs = int_list(field(s, "vertices"), "separating vertices");
        const auto es = int_list(field(s, "edges"), "separating edges");
        if (vs.size() != 3 || es.size() != 3) parse_error("a separating triangle has 3 vertices and 3 edges");
        t.separating = SeparatingTriangle{{vs[0], vs[1], vs[2]}, {es[0], es[1], es[2]}};
        const auto perm = int_list(field(j, "child_permutation"), "child_permutation");
        if (perm.size() != 4) parse_error("child_permutation needs 4 entries");
        for (std::size_t i = 0; i < 4; ++i) {
            if (perm[i] < 0 || perm[i] > 3) parse_error("child_permutation entries are 0..3");
            t.child_permutation[i] = static_cast<std::uint8_t>(perm[i]);
        }
        t.parts.push_back(trace_from_json(field(j, "parent")));
        t.parts.push_back(trace_from_json(field(j, "child")));
        return t;
    }
    t.circuit = int_list(field(j, "circuit"), "circuit");
    t.base = pair(field(j, "base"), "base");
    for (const Json& e : field(j, "ears")) {
        const auto p = pair(e, "ear");
        t.ears.push_back({p.first, p.second});
    }
    t.degenerate_assignment = assignment_from_json(field(j, "degenerate_assignment"));
    t.assignment = assignment_from_json(field(j, "assignment"));
    t.seed_edge = as_int(field(j, "seed_edge"), "seed_edge");
    t.seed_color = parse_edge_color(single_char(field(j, "seed_color"), "seed_color"));
    t.closure_color = parse_edge_color(single_char(field(j, "closure_color"), "closure_color"));
    return t;
}

std::string to_dot(const TriangleMesh& mesh, const VertexColoring* vertices, const EdgeColoring* edges,
                   const std::vector<std::string>* labels) {
    if (vertices && !is_proper(mesh, *vertices)) throw Error(ErrorCode::ImproperInput, "vertex colouring is not proper");
    if (edges && !is_proper(mesh, *edges)) throw Error(ErrorCode::ImproperInput, "edge colouring is not proper");
    std::ostringstream out;
    out << "graph heawood {\n";
    out << "  node [shape=circle, style=filled, fillcolor=white];\n";
    for (VertexId u = 0; u < mesh.vertex_count(); ++u) {
        const std::string label = labels && !labels->empty() ? (*labels)[static_cast<std::size_t>(u)] : std::to_string(u);
        out << "  " << u << " [label=\"" << label << "\"";
        if (vertices) {
            const auto c = vertices->colors[static_cast<std::size_t>(u)];
            out << ", fillcolor=" << fill_name(c);
            if (c == vcolor::K) out << ", fontcolor=white";
        }
        out << "];\n";
    }
    for (EdgeId e = 0; e < mesh.edge_count(); ++e) {
        const EdgeRecord& r = mesh.edge(e);
        out << "  " << r.u << " -- " << r.v;
        if (edges) out << " [color=" << edge_name(edges->colors[static_cast<std::size_t>(e)]) << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) {
    const std::string text = read_text(path);
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        parse_error(path + ": " + e.what());
    }
}

void write_text(const std::string& path, std::string_view text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

}  // namespace heawood
