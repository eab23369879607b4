#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "heawood/polygon.hpp"
#include "heawood/polygon_ops.hpp"
#include "heawood/triangulation.hpp"

namespace heawood {

using Circuit = std::vector<VertexId>;

/// First Hamilton circuit found by exhaustive DFS. Without `through` the
/// circuit starts at vertex 0 and circuit[1] < circuit.back(); with it the
/// circuit starts through.first, through.second. std::nullopt when none exists.
/// Errors: TooLarge above 64 vertices.
std::optional<Circuit> find_hamilton_circuit(const Triangulation& tri,
                                             std::optional<VertexPair> through = std::nullopt);

/// Visits every Hamilton circuit once (same normalisation) until `visit`
/// returns false. Returns the number visited.
std::uint64_t for_each_hamilton_circuit(const Triangulation& tri, const std::function<bool(const Circuit&)>& visit);

/// True when `circuit` visits every vertex once along edges of `tri`.
bool is_hamilton_circuit(const Triangulation& tri, const Circuit& circuit);

// Decomposition along a Hamilton circuit. `inner` holds the triangles on the
// side of the half-edge circuit[0] -> circuit[1]; `outer` the others, reversed
// so both polygons run along the circuit in the same sense. Both perimeters are
// the circuit rotated to put the base last-to-first.
struct HamiltonSplit {
    Circuit circuit;
    VertexPair base;
    PolygonTriangulation inner;
    PolygonTriangulation outer;
    std::vector<TriangleId> inner_source;  // triangle id in the source triangulation
    std::vector<TriangleId> outer_source;
};

/// Lexicographically smallest circuit edge as a sorted pair.
VertexPair default_base(const Circuit& circuit);

/// Errors: NotHamiltonian, EdgeNotOnCircuit.
HamiltonSplit split_by_circuit(const Triangulation& tri, const Circuit& circuit,
                               std::optional<VertexPair> base = std::nullopt);

struct ReconstructionStep {
    TriangleId triangle = kNone;  // triangle of the inner polygon
    VertexId tip = kNone;
    friend bool operator==(const ReconstructionStep&, const ReconstructionStep&) = default;
};

/// Order in which the inner polygon's ears are moved onto the outer polygon.
/// Errors: DegeneratePolygon.
std::vector<ReconstructionStep> reconstruction_order(const PolygonTriangulation& inner);

// The outer polygon with every inner triangle added as an ear: two perimeter
// vertices (the base) joined by a doubled edge around v-2 inner vertices.
// Every triangle is a source triangle reversed.
struct DegenerateReconstruction {
    PolygonTriangulation polygon;
    std::vector<TriangleId> source;  // triangle id in the source triangulation
    std::vector<ReconstructionStep> steps;
};

DegenerateReconstruction reconstruct_degenerate(const HamiltonSplit& split);

}  // namespace heawood
