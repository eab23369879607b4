#pragma once

#include <span>
#include <utility>
#include <vector>

#include "heawood/mesh.hpp"
#include "heawood/triangulation.hpp"

namespace heawood {

using VertexPair = std::pair<VertexId, VertexId>;

// A triangulated polygon on a base: a triangle disk whose boundary cycle is the
// perimeter, possibly with inner vertices.
//
// The perimeter is stored rotated so that the base edge runs from
// perimeter().back() to perimeter().front(); non-base perimeter vertices are
// perimeter()[1 .. vp-2]. Triangles follow the perimeter's sense, so boundary
// half-edge i runs perimeter[i] -> perimeter[(i+1) % vp].
//
// Two degenerate forms exist: the bare base (vp = 2, no triangles) and the
// doubled base (vp = 2, two boundary edges between the base vertices enclosing
// all other vertices).
class PolygonTriangulation : public TriangleMesh {
public:
    /// Polygon without inner vertices from its chords. `perimeter` is cyclic in
    /// any rotation; `base` must be two perimeter-adjacent vertices.
    /// Errors: InvalidPolygon.
    static PolygonTriangulation from_diagonals(std::vector<VertexId> perimeter, VertexPair base,
                                               std::span<const VertexPair> diagonals);

    /// General form with an explicit twin table; `perimeter` must already put
    /// the base last-to-first. Errors: InvalidPolygon.
    static PolygonTriangulation from_mesh(int vertex_count, std::vector<VertexId> perimeter,
                                          std::vector<Triple> triangles, std::vector<HalfEdgeId> twins);

    /// Same, with twins matched by endpoints (no multi-edges allowed).
    static PolygonTriangulation from_triangles(int vertex_count, std::vector<VertexId> perimeter,
                                               std::vector<Triple> triangles);

    /// The two-vertex polygon with no triangles.
    static PolygonTriangulation bare_base();

    std::span<const VertexId> perimeter() const noexcept { return perimeter_; }
    int perimeter_size() const noexcept { return static_cast<int>(perimeter_.size()); }
    VertexPair base() const { return {perimeter_.back(), perimeter_.front()}; }
    bool is_base_vertex(VertexId u) const { return u == perimeter_.front() || u == perimeter_.back(); }

    /// Position on the perimeter, or kNone for an inner vertex.
    int perimeter_index(VertexId u) const;

    /// Vertices not on the perimeter, ascending.
    std::vector<VertexId> inner_vertices() const;
    int inner_vertex_count() const { return vertex_count() - perimeter_size(); }

    /// Perimeter vertices other than the two base vertices, in perimeter order.
    std::vector<VertexId> non_base_vertices() const;

    /// Boundary half-edge perimeter[i] -> perimeter[i+1]; i = vp-1 is the base.
    /// kNone for the bare base.
    HalfEdgeId boundary_half_edge(int i) const;

    /// Interior edges whose endpoints are both on the perimeter, as sorted
    /// vertex pairs, sorted.
    std::vector<VertexPair> diagonals() const;

    bool is_degenerate() const noexcept { return perimeter_.size() == 2; }

    friend bool operator==(const PolygonTriangulation&, const PolygonTriangulation&) = default;

private:
    using TriangleMesh::TriangleMesh;
    std::vector<VertexId> perimeter_;
    std::vector<int> perimeter_index_;
    std::vector<HalfEdgeId> boundary_;
};

/// Glues two polygons with identical perimeters and bases into a
/// triangulation whose Hamilton circuit is the shared perimeter. The outer
/// polygon is stored in its own (mirrored) sense and is reversed on gluing.
/// Common diagonals become double edges. Errors: PerimeterMismatch.
Triangulation combine_polygons(const PolygonTriangulation& inner, const PolygonTriangulation& outer);

}  // namespace heawood
