#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "heawood/error.hpp"

namespace heawood {

using VertexId = std::int32_t;
using TriangleId = std::int32_t;
using HalfEdgeId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

/// Oriented vertex triple. The listed order is the triangle's orientation.
using Triple = std::array<VertexId, 3>;

/// One undirected edge occurrence. Multi-edges are distinct records.
struct EdgeRecord {
    VertexId u = kNone;
    VertexId v = kNone;
    HalfEdgeId half = kNone;  // smallest half-edge id of the occurrence
    HalfEdgeId twin = kNone;  // kNone for a boundary edge
    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Triangle complex stored as oriented triples with explicit half-edge twins.
//
// Half-edge h = 3*t + k runs from triangles[t][k] to triangles[t][(k+1)%3].
// Twins pair half-edges of one edge occurrence and run in opposite directions;
// a boundary half-edge has twin kNone. Edge ids are assigned in increasing order
// of their smallest half-edge, so they are stable for a given triangle list.
class TriangleMesh {
public:
    int vertex_count() const noexcept { return vertex_count_; }
    int triangle_count() const noexcept { return static_cast<int>(triangles_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int half_edge_count() const noexcept { return static_cast<int>(twins_.size()); }

    std::span<const Triple> triangles() const noexcept { return triangles_; }
    const Triple& triangle(TriangleId t) const { return triangles_.at(static_cast<std::size_t>(t)); }
    std::span<const HalfEdgeId> twins() const noexcept { return twins_; }
    std::span<const EdgeRecord> edges() const noexcept { return edges_; }
    const EdgeRecord& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    static constexpr TriangleId triangle_of(HalfEdgeId h) noexcept { return h / 3; }
    static constexpr int slot_of(HalfEdgeId h) noexcept { return h % 3; }
    static constexpr HalfEdgeId next(HalfEdgeId h) noexcept { return h - h % 3 + (h % 3 + 1) % 3; }
    static constexpr HalfEdgeId prev(HalfEdgeId h) noexcept { return h - h % 3 + (h % 3 + 2) % 3; }

    VertexId tail(HalfEdgeId h) const { return triangles_[static_cast<std::size_t>(h / 3)][static_cast<std::size_t>(h % 3)]; }
    VertexId head(HalfEdgeId h) const { return tail(next(h)); }
    HalfEdgeId twin(HalfEdgeId h) const { return twins_[static_cast<std::size_t>(h)]; }
    bool is_boundary(HalfEdgeId h) const { return twin(h) == kNone; }
    EdgeId edge_of(HalfEdgeId h) const { return edge_of_[static_cast<std::size_t>(h)]; }

    /// Number of triangles incident to `u`. Throws UnknownVertex.
    int triangle_degree(VertexId u) const;

    /// Outgoing half-edges (one per incident triangle corner) of `u`.
    std::span<const HalfEdgeId> corners(VertexId u) const;

    /// Outgoing half-edges of `u` in rotation order. Successive entries are
    /// related by `rotate` (h -> twin(prev(h))); for a boundary vertex the walk
    /// starts at the corner whose outgoing half-edge is on the boundary.
    std::vector<HalfEdgeId> rotation(VertexId u) const;

    /// Distinct neighbours of `u`, sorted.
    std::vector<VertexId> neighbors(VertexId u) const;

    /// Edge ids joining u and w (several when the edge is multiple).
    std::vector<EdgeId> edges_between(VertexId u, VertexId w) const;

    /// The half-edge of edge `e` that runs from `from` (kNone if none).
    HalfEdgeId half_edge_from(EdgeId e, VertexId from) const;

    bool has_multi_edges() const;

    friend bool operator==(const TriangleMesh&, const TriangleMesh&) = default;

protected:
    TriangleMesh() = default;
    // Validates local structure (ranges, distinct corners, twin symmetry and
    // direction) and builds the edge table. `failure` is the code reported.
    TriangleMesh(int vertex_count, std::vector<Triple> triangles, std::vector<HalfEdgeId> twins,
                 ErrorCode failure);

    // Throws `failure` unless the mesh is connected and every vertex link is a
    // single cycle (interior) or a single path (boundary).
    void require_manifold(ErrorCode failure) const;

private:
    int vertex_count_ = 0;
    std::vector<Triple> triangles_;
    std::vector<HalfEdgeId> twins_;
    std::vector<EdgeId> edge_of_;
    std::vector<EdgeRecord> edges_;
    std::vector<int> corner_offsets_;
    std::vector<HalfEdgeId> corner_list_;
};

/// Pairs half-edges of consistently oriented triangles by their endpoints.
/// Throws `failure` when a directed edge repeats or a reverse partner is
/// missing and `allow_boundary` is false.
std::vector<HalfEdgeId> match_twins(std::span<const Triple> triangles, bool allow_boundary,
                                    ErrorCode failure);

/// Canonical rotation of a triple: smallest vertex first, orientation kept.
Triple rotate_min_first(Triple t);

}  // namespace heawood
