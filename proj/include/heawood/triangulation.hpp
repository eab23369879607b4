#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heawood/mesh.hpp"

namespace heawood {

// A maximal planar (multi)graph: a closed triangle complex on the sphere with
// t = 2(v-2) triangles, every one of them a face (the outer face included).
// All triangles share one orientation sense; multi-edges are separate edge
// records. Immutable once built.
class Triangulation : public TriangleMesh {
public:
    /// Builds from consistently oriented triangles with an explicit twin table.
    static Triangulation from_mesh(int vertex_count, std::vector<Triple> triangles,
                                   std::vector<HalfEdgeId> twins);

    /// Optional human-readable vertex labels (empty or one per vertex).
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Triangulation with_labels(std::vector<std::string> labels) const;
    std::string label(VertexId u) const;

    /// True when some triangle has exactly the edge occurrences `a`, `b`, `c`.
    bool is_face(EdgeId a, EdgeId b, EdgeId c) const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    using TriangleMesh::TriangleMesh;
    std::vector<std::string> labels_;
};

/// Validates raw triples and returns a Triangulation whose triangles all follow
/// the orientation of the first listed triple. Triples listed with the other
/// sense are reversed. Multi-edge pairings are resolved by search.
/// Errors: NotATriangulation, InconsistentOrientation.
Triangulation build_triangulation(int vertex_count, std::span<const Triple> triples);
Triangulation build_triangulation(std::span<const Triple> triples);

/// Triangle degree (number of incident triangles). Errors: UnknownVertex.
int triangle_degree(const TriangleMesh& mesh, VertexId u);

/// A non-facial 3-cycle, given by its vertices and the edge occurrences used.
struct SeparatingTriangle {
    std::array<VertexId, 3> vertices{};
    std::array<EdgeId, 3> edges{};  // edges[i] joins vertices[i] and vertices[(i+1)%3]

    friend bool operator==(const SeparatingTriangle&, const SeparatingTriangle&) = default;
};

/// All separating triangles, ordered by sorted vertex triple then edge ids.
std::vector<SeparatingTriangle> find_separating_triangles(const Triangulation& tri);

/// Result of cutting a triangulation along a separating triangle. Each part is
/// closed with a cap triangle on the cut; part vertices are renumbered densely
/// and `*_vertices[i]` is the original id of part vertex i. `*_sources[k]` is the
/// original triangle id of part triangle k, or kNone for the cap.
struct SeparatingSplit {
    Triangulation parent;
    Triangulation child;
    std::vector<VertexId> parent_vertices;
    std::vector<VertexId> child_vertices;
    std::vector<TriangleId> parent_sources;
    std::vector<TriangleId> child_sources;
};

/// Splits along `s`. The parent is the side holding the smallest vertex id that
/// is not on `s`; the child is the other side. Errors: NotSeparating.
SeparatingSplit split_off_separating_triangle(const Triangulation& tri, const SeparatingTriangle& s);

/// Same, with the triangle given by vertices only (edges must be unique).
SeparatingSplit split_off_separating_triangle(const Triangulation& tri, std::array<VertexId, 3> s);

/// Sorted list of min-first rotated triples; equality means the same oriented
/// triangle multiset.
std::vector<Triple> sorted_triples(const TriangleMesh& mesh);

/// Canonical form under orientation-preserving relabeling: the smallest
/// relabeled sorted triple list over all embedding-rooted relabelings.
std::vector<Triple> canonical_form(const Triangulation& tri);

}  // namespace heawood
