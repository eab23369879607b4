#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "heawood/hamilton.hpp"
#include "heawood/polygon.hpp"
#include "heawood/schemes.hpp"
#include "heawood/solver.hpp"
#include "heawood/triangulation.hpp"

namespace heawood {

using Json = nlohmann::json;

/// Embedded in every JSON document written by the tools.
inline constexpr std::string_view kSchemaVersion = "heawood/1";

// Parse failures raise ParseError; structurally invalid graphs raise the
// graph-core errors.

Json to_json(const Triangulation& tri);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const PolygonTriangulation& p);
PolygonTriangulation polygon_from_json(const Json& j);

Json to_json(const VertexColoring& c);
Json to_json(const EdgeColoring& c);
Json to_json(const OrientationAssignment& a);
Json to_json(const VertexNumbering& n);
VertexColoring vertex_coloring_from_json(const Json& j);
EdgeColoring edge_coloring_from_json(const Json& j);
OrientationAssignment assignment_from_json(const Json& j);
VertexNumbering numbering_from_json(const Json& j);

// Scheme documents wrap one colouring-like value: {schema, scheme, values}
// with scheme one of v4c, e3c, ct2, cv3.
struct SchemeDocument {
    std::string scheme;
    Json values;
};
Json scheme_document(std::string_view scheme, const Json& values);
/// Errors: ParseError for unknown schemes or missing fields.
SchemeDocument read_scheme_document(const Json& j);

/// Converts a scheme document to `to` on `mesh`. `seed` fixes the free choices
/// (first edge colour, one vertex colour). cv3 input decodes only on a polygon,
/// so `polygon` must be given for it. Errors: ParseError, BadParams and the
/// scheme conversion errors.
Json convert_scheme(const TriangleMesh& mesh, const PolygonTriangulation* polygon, const SchemeDocument& in,
                    std::string_view to, const ColoringSeed& seed = {});

/// A triangulation or a polygon document, told apart by the perimeter field.
bool is_polygon_json(const Json& j);

Json to_json(const HamiltonSplit& s);
HamiltonSplit split_from_json(const Json& j);

Json to_json(const SolveTrace& t);
SolveTrace trace_from_json(const Json& j);

/// Undirected DOT graph; vertices filled by colour and edges drawn in their
/// colour when given. Errors: ImproperInput for improper colourings.
std::string to_dot(const TriangleMesh& mesh, const VertexColoring* vertices = nullptr,
                   const EdgeColoring* edges = nullptr, const std::vector<std::string>* labels = nullptr);

/// Stable text form: two-space indent and a trailing newline.
std::string dump(const Json& j);

/// Reads a whole file, or standard input for "-". Errors: ParseError.
std::string read_text(const std::string& path);
Json read_json(const std::string& path);
/// Writes to a file, or standard output for "-".
void write_text(const std::string& path, std::string_view text);

}  // namespace heawood
