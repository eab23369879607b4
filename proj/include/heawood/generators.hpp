#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "heawood/triangulation.hpp"

namespace heawood {

Triangulation complete4();
Triangulation octahedron();
Triangulation icosahedron();

/// K4 with `depth` vertices stacked into faces. Without a seed each new vertex
/// goes into a face of the previous one (a nested chain); with a seed the host
/// face is drawn uniformly. Every insertion leaves one separating triangle.
Triangulation stacked(int depth, std::optional<std::uint64_t> seed = std::nullopt);

/// Enumerated polygon `inner` glued to enumerated polygon `outer`, both on v
/// vertices (indices into the genealogical order). Errors: BadParams.
Triangulation polygon_pair(int v, int inner, int outer);

/// The octahedron with `level` faces successively replaced by octahedra
/// (v = 6 + 3 level). All vertex degrees stay even.
Triangulation octahedral_family(int level);

/// Replaces face t by an octahedron: three new vertices on its edges' sides.
Triangulation replace_face_by_octahedron(const Triangulation& tri, TriangleId t);

/// Triangulations obtained by gluing every pair of enumerated polygons with v
/// vertices, deduplicated by canonical form, in order of first appearance.
std::vector<Triangulation> polygon_pair_corpus(int v);

/// True when every vertex has even triangle degree.
bool all_degrees_even(const Triangulation& tri);

}  // namespace heawood
