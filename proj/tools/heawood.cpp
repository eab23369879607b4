// heawood: command-line front end.
// Exit codes: 0 success/holds, 1 usage or input error, 2 counterexample or
// pipeline failure, 3 budget exhausted.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <thread>

#include "heawood/audit.hpp"
#include "heawood/generators.hpp"
#include "heawood/io.hpp"
#include "heawood/polygon_ops.hpp"

using namespace heawood;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
    std::optional<std::uint64_t> seed;
    int jobs = 0;
};

// A graph document is either a triangulation or a polygon.
struct Graph {
    std::optional<Triangulation> tri;
    std::optional<PolygonTriangulation> polygon;
    const TriangleMesh& mesh() const {
        if (tri) return *tri;
        return *polygon;
    }
};

Graph read_graph(const std::string& path) {
    const Json j = read_json(path);
    Graph g;
    if (is_polygon_json(j)) {
        g.polygon = polygon_from_json(j);
    } else {
        g.tri = triangulation_from_json(j);
    }
    return g;
}

Json graph_json(const Graph& g) { return g.tri ? to_json(*g.tri) : to_json(*g.polygon); }

std::optional<VertexPair> base_option(const std::vector<int>& b) {
    if (b.empty()) return std::nullopt;
    return VertexPair{b[0], b[1]};
}

std::uint8_t edge_color_option(const std::string& s) {
    if (s.size() != 1) throw Error(ErrorCode::BadParams, "edge colour is one of r, g, b");
    return parse_edge_color(s[0]);
}

std::uint8_t vertex_color_option(const std::string& s) {
    if (s.size() != 1) throw Error(ErrorCode::BadParams, "vertex colour is one of C, M, Y, K");
    return parse_vertex_color(s[0]);
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string kind;
    int depth = 1;
    int v = 0;
    std::optional<int> inner;
    std::optional<int> outer;
    int level = 1;
    std::string out = "-";
};

int run_gen(const GenArgs& a, const Globals& g) {
    Triangulation tri;
    if (a.kind == "complete4") {
        tri = complete4();
    } else if (a.kind == "octahedron") {
        tri = octahedron();
    } else if (a.kind == "icosahedron") {
        tri = icosahedron();
    } else if (a.kind == "stacked") {
        tri = stacked(a.depth, g.seed);
    } else if (a.kind == "octahedral") {
        tri = octahedral_family(a.level);
    } else {
        // polygon-pair: missing indices are drawn with the seed (0 by default).
        const auto count = static_cast<int>(catalan_count(a.v));
        std::mt19937_64 rng(g.seed.value_or(0));
        std::uniform_int_distribution<int> pick(0, count - 1);
        const int i = a.inner ? *a.inner : pick(rng);
        const int o = a.outer ? *a.outer : pick(rng);
        tri = polygon_pair(a.v, i, o);
    }
    write_text(a.out, dump(to_json(tri)));
    return 0;
}

// ---------------------------------------------------------------- enum

struct EnumArgs {
    int v = 0;
    bool count_only = false;
    std::string out = "-";
};

int run_enum(const EnumArgs& a) {
    if (a.v < 2) throw Error(ErrorCode::BadParams, "enum needs v >= 2");
    std::string text;
    std::uint64_t n = 0;
    if (a.count_only) {
        n = catalan_count(a.v);
        if (a.v <= 12) n = enumerate_polygons_on_base(a.v, [](const PolygonTriangulation&) {});
        text = std::to_string(n) + "\n";
    } else {
        enumerate_polygons_on_base(a.v, [&](const PolygonTriangulation& p) { text += to_json(p).dump() + "\n"; });
    }
    write_text(a.out, text);
    return 0;
}

// ---------------------------------------------------------------- split

struct SplitArgs {
    std::string input;
    std::vector<int> base;
    std::string out = "-";
};

int run_split(const SplitArgs& a) {
    const Triangulation tri = triangulation_from_json(read_json(a.input));
    const auto circuit = find_hamilton_circuit(tri);
    if (!circuit) throw Error(ErrorCode::NoHamiltonCircuit, "no Hamilton circuit found");
    write_text(a.out, dump(to_json(split_by_circuit(tri, *circuit, base_option(a.base)))));
    return 0;
}

// ---------------------------------------------------------------- convert

struct ConvertArgs {
    std::string graph;
    std::string input;
    std::string to;
    int edge = 0;
    std::string edge_color = "r";
    int vertex = 0;
    std::string vertex_color = "C";
    std::string out = "-";
};

int run_convert(const ConvertArgs& a) {
    const Graph g = read_graph(a.graph);
    const SchemeDocument doc = read_scheme_document(read_json(a.input));
    const ColoringSeed seed{a.edge, edge_color_option(a.edge_color), a.vertex, vertex_color_option(a.vertex_color)};
    const Json out = convert_scheme(g.mesh(), g.polygon ? &*g.polygon : nullptr, doc, a.to, seed);
    write_text(a.out, dump(out));
    return 0;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string input;
    std::vector<int> base;
    std::string out = "-";
    std::string trace;
    std::string dot;
    std::string all_circuits;
};

int run_solve(const SolveArgs& a) {
    const Triangulation tri = triangulation_from_json(read_json(a.input));
    SolveOptions options;
    options.base = base_option(a.base);
    int code = 0;
    if (!a.all_circuits.empty()) {
        // Retry every top-level circuit; the first failure decides the exit code.
        Json runs = Json::array();
        for_each_hamilton_circuit(tri, [&](const Circuit& c) {
            SolveOptions o = options;
            o.circuit = c;
            Json run{{"circuit", c}};
            try {
                const SolveResult r = four_color(tri, o);
                run["outcome"] = "ok";
                run["colors_used"] = colors_used(r.coloring);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::PipelineCounterexample) throw;
                run["outcome"] = "counterexample";
                run["message"] = e.what();
                code = 2;
            }
            runs.push_back(run);
            return true;
        });
        write_text(a.all_circuits, dump(Json{{"schema", kSchemaVersion}, {"circuits", runs}}));
    }
    const SolveResult r = four_color(tri, options);
    write_text(a.out, dump(scheme_document("v4c", to_json(r.coloring))));
    if (!a.trace.empty()) write_text(a.trace, dump(Json{{"schema", kSchemaVersion}, {"trace", to_json(r.trace)}}));
    if (!a.dot.empty()) write_text(a.dot, to_dot(tri, &r.coloring, nullptr, &tri.labels()));
    return code;
}

// ---------------------------------------------------------------- audit

struct AuditArgs {
    std::string statement;
    int max_v = 0;
    int max_triangles = 0;
    double budget = 0;
    std::string report;
    bool timing = false;
};

int run_audit(const AuditArgs& a, const Globals& g) {
    const AuditReport r = audit(a.statement, {a.max_v, a.max_triangles, a.budget, g.jobs});
    const Json j = to_json(r, a.timing);
    if (!a.report.empty()) write_text(a.report, dump(j));
    if (a.report != "-") {
        std::cout << r.statement << ": " << to_string(r.verdict) << " (" << r.instances << " instances)\n";
    }
    return exit_code(r.verdict);
}

// ---------------------------------------------------------------- export

struct ExportArgs {
    std::string input;
    std::string coloring;
    std::string edges;
    std::string format = "json";
    std::string out = "-";
};

int run_export(const ExportArgs& a) {
    const Graph g = read_graph(a.input);
    std::optional<VertexColoring> vc;
    std::optional<EdgeColoring> ec;
    auto load = [](const std::string& path, const char* scheme) {
        const SchemeDocument d = read_scheme_document(read_json(path));
        if (d.scheme != scheme) throw Error(ErrorCode::ParseError, std::string("expected a ") + scheme + " document");
        return d.values;
    };
    if (!a.coloring.empty()) {
        vc = vertex_coloring_from_json(load(a.coloring, "v4c"));
        if (!is_proper(g.mesh(), *vc)) throw Error(ErrorCode::ImproperInput, "vertex colouring is not proper");
    }
    if (!a.edges.empty()) {
        ec = edge_coloring_from_json(load(a.edges, "e3c"));
        if (!is_proper(g.mesh(), *ec)) throw Error(ErrorCode::ImproperInput, "edge colouring is not proper");
    }
    if (a.format == "dot") {
        const std::vector<std::string>* labels = g.tri && !g.tri->labels().empty() ? &g.tri->labels() : nullptr;
        write_text(a.out, to_dot(g.mesh(), vc ? &*vc : nullptr, ec ? &*ec : nullptr, labels));
        return 0;
    }
    Json j = graph_json(g);
    if (vc || ec) {
        j = Json{{"schema", kSchemaVersion}, {"graph", j}};
        if (vc) j["vertex_coloring"] = to_json(*vc);
        if (ec) j["edge_coloring"] = to_json(*ec);
    }
    write_text(a.out, dump(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colouring schemes, polygon triangulations and audits for planar triangulations"};
    app.require_subcommand(0, 1);
    app.fallthrough();  // global flags may follow the subcommand
    Globals globals;
    app.add_flag_callback(
        "--version",
        [] {
            std::cout << "heawood " << kVersion << " (schema " << kSchemaVersion << ")\n";
            throw CLI::Success();
        },
        "Print the version and the JSON schema version");
    app.add_option("--seed", globals.seed, "Seed for randomised corpus choices");
    app.add_option("--jobs", globals.jobs, "Worker threads (default: available execution units)")
        ->check(CLI::NonNegativeNumber);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a triangulation");
    gen_cmd->add_option("kind", gen.kind, "Instance kind")
        ->required()
        ->check(CLI::IsMember({"complete4", "octahedron", "icosahedron", "stacked", "polygon-pair", "octahedral"}));
    gen_cmd->add_option("--depth", gen.depth, "Stacked: number of vertex insertions");
    gen_cmd->add_option("--v", gen.v, "Polygon-pair: perimeter size");
    gen_cmd->add_option("--i", gen.inner, "Polygon-pair: inner polygon index");
    gen_cmd->add_option("--o", gen.outer, "Polygon-pair: outer polygon index");
    gen_cmd->add_option("--level", gen.level, "Octahedral family level");
    gen_cmd->add_option("--out", gen.out, "Output file, - for stdout");

    EnumArgs en;
    auto* enum_cmd = app.add_subcommand("enum", "Enumerate triangulated polygons on a base as JSON lines");
    enum_cmd->add_option("--v", en.v, "Number of perimeter vertices")->required();
    enum_cmd->add_flag("--count-only", en.count_only, "Print only the number of polygons");
    enum_cmd->add_option("-o,--out", en.out, "Output file, - for stdout");

    SplitArgs sp;
    auto* split_cmd = app.add_subcommand("split", "Split a triangulation along a Hamilton circuit");
    split_cmd->add_option("input", sp.input, "Triangulation JSON, - for stdin")->required();
    split_cmd->add_option("--base", sp.base, "Base edge on the circuit (two vertex ids)")->expected(2);
    split_cmd->add_option("-o,--out", sp.out, "Output file, - for stdout");

    ConvertArgs cv;
    auto* convert_cmd = app.add_subcommand("convert", "Convert a colouring between schemes");
    convert_cmd->add_option("--graph", cv.graph, "Triangulation or polygon JSON")->required();
    convert_cmd->add_option("--input", cv.input, "Scheme document, - for stdin")->required();
    convert_cmd->add_option("--to", cv.to, "Target scheme")->required()->check(CLI::IsMember({"v4c", "e3c", "ct2", "cv3"}));
    convert_cmd->add_option("--edge", cv.edge, "Seed edge id for ct2 -> e3c");
    convert_cmd->add_option("--edge-color", cv.edge_color, "Colour of the seed edge (r, g, b)");
    convert_cmd->add_option("--vertex", cv.vertex, "Seed vertex for e3c -> v4c");
    convert_cmd->add_option("--vertex-color", cv.vertex_color, "Colour of the seed vertex (C, M, Y, K)");
    convert_cmd->add_option("-o,--out", cv.out, "Output file, - for stdout");

    SolveArgs so;
    auto* solve_cmd = app.add_subcommand("solve", "Four-colour a triangulation");
    solve_cmd->add_option("input", so.input, "Triangulation JSON, - for stdin")->required();
    solve_cmd->add_option("--base", so.base, "Base edge of the top-level circuit (two vertex ids)")->expected(2);
    solve_cmd->add_option("-o,--out", so.out, "Colouring output, - for stdout");
    solve_cmd->add_option("--trace", so.trace, "Write the solve trace here");
    solve_cmd->add_option("--dot", so.dot, "Write a DOT drawing here");
    solve_cmd->add_option("--all-circuits", so.all_circuits, "Retry every top-level circuit; write the outcomes here");

    AuditArgs au;
    auto* audit_cmd = app.add_subcommand("audit", "Check a statement exhaustively on bounded instances");
    audit_cmd->add_option("--statement", au.statement, "T1, T2, T3, T4, C1, S8 or TBL42")->required();
    audit_cmd->add_option("--max-v", au.max_v, "Vertex bound (0 = statement default)")->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--max-triangles", au.max_triangles, "Triangle bound (0 = statement default)")
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--budget", au.budget, "Wall-clock budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--report", au.report, "Write the JSON report here, - for stdout");
    audit_cmd->add_flag("--timing", au.timing, "Include elapsed time in the report");

    ExportArgs ex;
    auto* export_cmd = app.add_subcommand("export", "Export a graph with optional colourings");
    export_cmd->add_option("input", ex.input, "Triangulation or polygon JSON, - for stdin")->required();
    export_cmd->add_option("--coloring", ex.coloring, "v4c scheme document");
    export_cmd->add_option("--edges", ex.edges, "e3c scheme document");
    export_cmd->add_option("--format", ex.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    export_cmd->add_option("-o,--out", ex.out, "Output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*gen_cmd) return run_gen(gen, globals);
        if (*enum_cmd) return run_enum(en);
        if (*split_cmd) return run_split(sp);
        if (*convert_cmd) return run_convert(cv);
        if (*solve_cmd) return run_solve(so);
        if (*audit_cmd) return run_audit(au, globals);
        if (*export_cmd) return run_export(ex);
        std::cout << app.help();
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::PipelineCounterexample ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
