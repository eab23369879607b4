#include "heawood/generators.hpp"

#include <random>
#include <set>
#include <string>

#include "heawood/polygon.hpp"
#include "heawood/polygon_ops.hpp"

namespace heawood {

Triangulation complete4() {
    const std::vector<Triple> t{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    return build_triangulation(4, t);
}

Triangulation octahedron() {
    const std::vector<Triple> t{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return build_triangulation(6, t);
}

Triangulation icosahedron() {
    std::vector<Triple> t;
    auto up = [](int i) { return 1 + (i % 5); };
    auto low = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        t.push_back({0, up(i), up(i + 1)});
        t.push_back({up(i), low(i), up(i + 1)});
        t.push_back({up(i + 1), low(i), low(i + 1)});
        t.push_back({11, low(i + 1), low(i)});
    }
    return build_triangulation(12, t);
}

Triangulation stacked(int depth, std::optional<std::uint64_t> seed) {
    if (depth < 0) throw Error(ErrorCode::BadParams, "depth must be non-negative");
    std::vector<Triple> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    std::mt19937_64 rng(seed.value_or(0));
    for (int k = 0; k < depth; ++k) {
        std::size_t host = 0;
        if (seed) host = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
        const auto [a, b, c] = faces[host];
        const VertexId x = 4 + k;
        faces[host] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
    }
    return build_triangulation(4 + depth, faces);
}

Triangulation polygon_pair(int v, int inner, int outer) {
    if (v < 3) throw Error(ErrorCode::BadParams, "polygon-pair needs v >= 3");
    const auto sets = enumerate_diagonal_sets(v);
    const auto count = static_cast<int>(sets.size());
    if (inner < 0 || inner >= count || outer < 0 || outer >= count) {
        throw Error(ErrorCode::BadParams, "polygon index out of range: " + std::to_string(count) +
                                              " polygons for v=" + std::to_string(v));
    }
    std::vector<VertexId> perimeter(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) perimeter[static_cast<std::size_t>(i)] = i;
    const auto in = PolygonTriangulation::from_diagonals(perimeter, {v - 1, 0}, sets[static_cast<std::size_t>(inner)]);
    const auto out = PolygonTriangulation::from_diagonals(perimeter, {v - 1, 0}, sets[static_cast<std::size_t>(outer)]);
    return combine_polygons(in, out);
}

Triangulation replace_face_by_octahedron(const Triangulation& tri, TriangleId t) {
    if (t < 0 || t >= tri.triangle_count()) throw Error(ErrorCode::BadParams, "face index out of range");
    if (tri.has_multi_edges()) throw Error(ErrorCode::BadParams, "face replacement needs a simple graph");
    const auto [a, b, c] = tri.triangle(t);
    const VertexId x = tri.vertex_count();
    const VertexId y = x + 1;
    const VertexId z = x + 2;
    std::vector<Triple> faces;
    for (TriangleId k = 0; k < tri.triangle_count(); ++k) {
        if (k != t) faces.push_back(tri.triangle(k));
    }
    for (const Triple& f : {Triple{a, b, z}, Triple{b, c, x}, Triple{c, a, y}, Triple{z, b, x}, Triple{x, c, y},
                            Triple{y, a, z}, Triple{x, y, z}}) {
        faces.push_back(f);
    }
    return build_triangulation(tri.vertex_count() + 3, faces);
}

Triangulation octahedral_family(int level) {
    if (level < 0) throw Error(ErrorCode::BadParams, "level must be non-negative");
    Triangulation tri = octahedron();
    for (int k = 0; k < level; ++k) tri = replace_face_by_octahedron(tri, 0);
    return tri;
}

std::vector<Triangulation> polygon_pair_corpus(int v) {
    if (v < 3) throw Error(ErrorCode::BadParams, "polygon-pair corpus needs v >= 3");
    const auto polygons = enumerate_polygons_on_base(v);
    std::set<std::vector<Triple>> seen;
    std::vector<Triangulation> out;
    for (const auto& in : polygons) {
        for (const auto& outer : polygons) {
            Triangulation tri = combine_polygons(in, outer);
            if (seen.insert(canonical_form(tri)).second) out.push_back(std::move(tri));
        }
    }
    return out;
}

bool all_degrees_even(const Triangulation& tri) {
    for (VertexId u = 0; u < tri.vertex_count(); ++u) {
        if (tri.triangle_degree(u) % 2 != 0) return false;
    }
    return true;
}

}  // namespace heawood
