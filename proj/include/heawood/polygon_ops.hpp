#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "heawood/polygon.hpp"
#include "heawood/schemes.hpp"

namespace heawood {

/// An ear: a triangle with two perimeter edges meeting at a tip of triangle
/// degree 1.
struct EarInfo {
    TriangleId triangle = kNone;
    VertexId tip = kNone;
    std::array<HalfEdgeId, 2> edges{};  // boundary half-edges into and out of the tip
    friend bool operator==(const EarInfo&, const EarInfo&) = default;
};

/// All ears of a polygon without inner vertices, one entry per tip, in
/// perimeter order. Errors: DegeneratePolygon.
std::vector<EarInfo> find_ears(const PolygonTriangulation& p);

/// Same polygon with another perimeter edge as base. Errors: InvalidPolygon.
PolygonTriangulation rebase(const PolygonTriangulation& p, VertexPair base);

// Pairing of non-base vertices with triangles obtained by cutting non-base
// ears toward the base, smallest perimeter index first.
struct VertexTriangleAssociation {
    std::vector<TriangleId> vertex_triangle;  // by vertex; kNone on base vertices
    std::vector<VertexId> triangle_vertex;    // by triangle
    std::vector<TriangleId> parent;           // triangle across the cut edge; kNone for the last
    std::vector<TriangleId> order;            // triangles in cutting order
    friend bool operator==(const VertexTriangleAssociation&, const VertexTriangleAssociation&) = default;
};

/// Errors: DegeneratePolygon (fewer than 3 perimeter vertices or inner vertices).
VertexTriangleAssociation associate(const PolygonTriangulation& p);

/// Unique assignment whose partial sums on the non-base vertices equal
/// `numbering` (indexed by vertex; base entries ignored).
/// Errors: DegeneratePolygon, IncompleteAssignment, NoPreimage.
OrientationAssignment decode_cv3_to_ct2(const PolygonTriangulation& p, const VertexNumbering& numbering);

/// Calls `visit` for every triangulated polygon with `v` vertices on a base, in
/// genealogical order. Vertices are numbered 0..v-1 along the perimeter and the
/// base runs v-1 -> 0. Returns the number visited.
std::uint64_t enumerate_polygons_on_base(int v, const std::function<void(const PolygonTriangulation&)>& visit);
std::vector<PolygonTriangulation> enumerate_polygons_on_base(int v);

/// Diagonal sets only, in the same order and labelling as the polygons.
std::vector<std::vector<VertexPair>> enumerate_diagonal_sets(int v);

/// Polygon with perimeter 0..v-1, base v-1 -> 0 and the given chords.
/// Errors: InvalidPolygon.
PolygonTriangulation polygon_on_base(int v, std::span<const VertexPair> diagonals);

/// Catalan(v-2). Errors: BadParams for v < 2 or overflow.
std::uint64_t catalan_count(int v);

/// Per non-base vertex (perimeter order), the value of its vertex-triangle.
struct X1X2Code {
    std::vector<VertexId> vertices;
    std::vector<std::uint8_t> symbols;  // 1 or 2
    friend bool operator==(const X1X2Code&, const X1X2Code&) = default;
};

X1X2Code x1x2_code(const PolygonTriangulation& p, const VertexTriangleAssociation& assoc,
                   const OrientationAssignment& a);
OrientationAssignment assignment_from_code(const PolygonTriangulation& p, const VertexTriangleAssociation& assoc,
                                           const X1X2Code& code);

struct DifferenceOutcome {
    bool holds = true;
    std::uint64_t checked = 0;            // (vertex, code of the others) pairs examined
    std::optional<VertexId> vertex;       // first violation
    std::optional<std::uint64_t> mask;    // X1-side assignment of the first violation
};

/// Flipping only the vertex-triangle of X raises the value at X by 1 mod 3,
/// for every X and every code of the other vertices. `column_shift[x]`, when
/// given, is added to every value of vertex x before comparing.
DifferenceOutcome verify_difference_property(const PolygonTriangulation& p,
                                             std::span<const int> column_shift = {});

/// Encloses the non-base perimeter vertex `tip` with the triangle joining its
/// two perimeter neighbours. Errors: TipOnBase, NotOnPerimeter, DegeneratePolygon.
PolygonTriangulation add_ear(const PolygonTriangulation& p, VertexId tip);

/// Number of distinct partial numberings on `tracked` over all 2^t assignments.
/// Errors: TooLarge when t exceeds `max_triangles`.
std::uint64_t distinct_cv3_count(const TriangleMesh& mesh, std::span<const VertexId> tracked,
                                 int max_triangles = 24);

/// Tracks the inner vertices and the non-base perimeter vertices.
std::uint64_t distinct_cv3_count(const PolygonTriangulation& p, int max_triangles = 24);

/// 3^{v_i} * 2^{v_p - 2}.
std::uint64_t distinct_cv3_lower_bound(const PolygonTriangulation& p);

/// Wheel: a k-gon around one inner vertex. Perimeter 0..k-1, centre k.
PolygonTriangulation wheel_polygon(int k);

}  // namespace heawood
