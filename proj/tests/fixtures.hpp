#pragma once

// Hand-built instances shared by the unit tests and the acceptance run.

#include <string>
#include <vector>

#include "heawood/polygon.hpp"
#include "heawood/triangulation.hpp"

namespace fixtures {

using namespace heawood;

// A..P = 0..15 on the Hamilton circuit in alphabetical order; P-A is the base.
inline std::vector<VertexId> circuit16() {
    std::vector<VertexId> c(16);
    for (int i = 0; i < 16; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

// Inner side: a hexagon A..F split by A-C, C-E, A-E, the rest fanned from M.
inline PolygonTriangulation sixteen_inner() {
    const std::vector<VertexPair> d{{0, 2}, {2, 4}, {0, 4}, {0, 5}, {12, 0}, {12, 5}, {12, 6}, {12, 7},
                                    {12, 8}, {12, 9}, {12, 10}, {12, 14}, {12, 15}};
    return PolygonTriangulation::from_diagonals(circuit16(), {15, 0}, d);
}

// Outer side: contains the face A-P-K; A-K and F-K close the 3-cycle A-F-K,
// which is a face on neither side.
inline PolygonTriangulation sixteen_outer() {
    const std::vector<VertexPair> d{{0, 10}, {10, 15}, {5, 10}, {1, 10}, {2, 10}, {3, 10}, {4, 10},
                                    {5, 7}, {5, 8}, {5, 9}, {11, 13}, {11, 14}, {11, 15}};
    return PolygonTriangulation::from_diagonals(circuit16(), {15, 0}, d);
}

inline Triangulation sixteen() {
    std::vector<std::string> labels;
    for (char c = 'A'; c <= 'P'; ++c) labels.emplace_back(1, c);
    return combine_polygons(sixteen_inner(), sixteen_outer()).with_labels(labels);
}

// Pentagon on base E-A (perimeter A..E = 0..4) with the fan from A.
inline PolygonTriangulation pentagon() {
    const std::vector<VertexPair> d{{0, 2}, {0, 3}};
    return PolygonTriangulation::from_diagonals({0, 1, 2, 3, 4}, {4, 0}, d);
}

}  // namespace fixtures
