#include "heawood/polygon.hpp"

#include <algorithm>
#include <string>

namespace heawood {

namespace {

constexpr ErrorCode kInvalid = ErrorCode::InvalidPolygon;

}  // namespace

PolygonTriangulation PolygonTriangulation::bare_base() {
    PolygonTriangulation poly(2, {}, {}, kInvalid);
    poly.perimeter_ = {0, 1};
    poly.perimeter_index_ = {0, 1};
    poly.boundary_ = {kNone, kNone};
    return poly;
}

PolygonTriangulation PolygonTriangulation::from_mesh(int vertex_count, std::vector<VertexId> perimeter,
                                                     std::vector<Triple> triangles,
                                                     std::vector<HalfEdgeId> twins) {
    const auto vp = perimeter.size();
    if (vp < 2) throw Error(kInvalid, "perimeter needs at least 2 vertices");
    std::vector<int> index(static_cast<std::size_t>(std::max(vertex_count, 0)), kNone);
    for (std::size_t i = 0; i < vp; ++i) {
        const VertexId u = perimeter[i];
        if (u < 0 || u >= vertex_count) throw Error(kInvalid, "perimeter vertex out of range");
        if (index[static_cast<std::size_t>(u)] != kNone) throw Error(kInvalid, "perimeter repeats a vertex");
        index[static_cast<std::size_t>(u)] = static_cast<int>(i);
    }
    if (triangles.empty()) {
        if (vp != 2 || vertex_count != 2) throw Error(kInvalid, "only the bare base may have no triangles");
        PolygonTriangulation poly = bare_base();
        poly.perimeter_ = std::move(perimeter);
        poly.perimeter_index_ = std::move(index);
        return poly;
    }

    PolygonTriangulation poly(vertex_count, std::move(triangles), std::move(twins), kInvalid);
    poly.perimeter_ = std::move(perimeter);
    poly.perimeter_index_ = std::move(index);

    std::vector<HalfEdgeId> boundary(vp, kNone);
    std::size_t boundary_count = 0;
    for (HalfEdgeId h = 0; h < poly.half_edge_count(); ++h) {
        if (!poly.is_boundary(h)) continue;
        ++boundary_count;
        const int i = poly.perimeter_index(poly.tail(h));
        if (i == kNone) throw Error(kInvalid, "boundary edge leaves an inner vertex");
        const VertexId expected = poly.perimeter_[(static_cast<std::size_t>(i) + 1) % vp];
        if (poly.head(h) != expected || boundary[static_cast<std::size_t>(i)] != kNone) {
            throw Error(kInvalid, "boundary cycle does not follow the perimeter at vertex " +
                                      std::to_string(poly.tail(h)));
        }
        boundary[static_cast<std::size_t>(i)] = h;
    }
    if (boundary_count != vp || std::count(boundary.begin(), boundary.end(), kNone) != 0) {
        throw Error(kInvalid, "boundary cycle length differs from the perimeter");
    }
    poly.boundary_ = std::move(boundary);
    for (VertexId u = 0; u < vertex_count; ++u) {
        if (poly.triangle_degree(u) == 0) throw Error(kInvalid, "vertex " + std::to_string(u) + " is unused");
    }
    poly.require_manifold(kInvalid);
    const int euler = poly.vertex_count() - poly.edge_count() + poly.triangle_count() + 1;
    if (euler != 2) throw Error(kInvalid, "triangles do not form a disk");
    return poly;
}

PolygonTriangulation PolygonTriangulation::from_triangles(int vertex_count, std::vector<VertexId> perimeter,
                                                          std::vector<Triple> triangles) {
    auto twins = match_twins(triangles, true, kInvalid);
    return from_mesh(vertex_count, std::move(perimeter), std::move(triangles), std::move(twins));
}

PolygonTriangulation PolygonTriangulation::from_diagonals(std::vector<VertexId> perimeter, VertexPair base,
                                                          std::span<const VertexPair> diagonals) {
    const auto n = perimeter.size();
    if (n < 2) throw Error(kInvalid, "perimeter needs at least 2 vertices");
    std::vector<int> pos(n, kNone);
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId u = perimeter[i];
        if (u < 0 || static_cast<std::size_t>(u) >= n || pos[static_cast<std::size_t>(u)] != kNone) {
            throw Error(kInvalid, "perimeter must list vertex ids 0..v-1 once each");
        }
        pos[static_cast<std::size_t>(u)] = static_cast<int>(i);
    }
    auto position = [&](VertexId u) {
        if (u < 0 || static_cast<std::size_t>(u) >= n) throw Error(kInvalid, "vertex " + std::to_string(u) + " not on perimeter");
        return static_cast<std::size_t>(pos[static_cast<std::size_t>(u)]);
    };
    // Rotate so the base runs back -> front.
    const std::size_t ia = position(base.first);
    const std::size_t ib = position(base.second);
    std::size_t start;
    if ((ia + 1) % n == ib) {
        start = ib;
    } else if ((ib + 1) % n == ia) {
        start = ia;
    } else {
        throw Error(kInvalid, "base vertices are not adjacent on the perimeter");
    }
    std::rotate(perimeter.begin(), perimeter.begin() + static_cast<std::ptrdiff_t>(start), perimeter.end());
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(perimeter[i])] = static_cast<int>(i);

    if (n == 2) {
        if (!diagonals.empty()) throw Error(kInvalid, "a two-vertex polygon has no diagonals");
        return from_mesh(2, std::move(perimeter), {}, {});
    }
    if (diagonals.size() != n - 3) {
        throw Error(kInvalid, "a polygon with " + std::to_string(n) + " vertices needs " +
                                  std::to_string(n - 3) + " diagonals");
    }
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        adjacent[i][(i + 1) % n] = adjacent[(i + 1) % n][i] = 1;
    }
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (const auto& [a, b] : diagonals) {
        std::size_t i = position(a);
        std::size_t j = position(b);
        if (i > j) std::swap(i, j);
        if (i == j || adjacent[i][j]) throw Error(kInvalid, "diagonal joins equal or adjacent vertices");
        adjacent[i][j] = adjacent[j][i] = 1;
        chords.emplace_back(i, j);
    }
    for (std::size_t x = 0; x < chords.size(); ++x) {
        for (std::size_t y = x + 1; y < chords.size(); ++y) {
            const auto [i, j] = chords[x];
            const auto [k, l] = chords[y];
            if ((i < k && k < j && j < l) || (k < i && i < l && l < j)) {
                throw Error(kInvalid, "diagonals cross");
            }
            if (i == k && j == l) throw Error(kInvalid, "repeated diagonal");
        }
    }
    std::vector<Triple> triangles;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!adjacent[i][j]) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (adjacent[j][k] && adjacent[i][k]) {
                    triangles.push_back({perimeter[i], perimeter[j], perimeter[k]});
                }
            }
        }
    }
    if (triangles.size() != n - 2) throw Error(kInvalid, "diagonals do not triangulate the polygon");
    return from_triangles(static_cast<int>(n), std::move(perimeter), std::move(triangles));
}

int PolygonTriangulation::perimeter_index(VertexId u) const {
    if (u < 0 || u >= vertex_count()) {
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(u) + " is not in the polygon");
    }
    return perimeter_index_[static_cast<std::size_t>(u)];
}

std::vector<VertexId> PolygonTriangulation::inner_vertices() const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < vertex_count(); ++u) {
        if (perimeter_index_[static_cast<std::size_t>(u)] == kNone) out.push_back(u);
    }
    return out;
}

std::vector<VertexId> PolygonTriangulation::non_base_vertices() const {
    if (perimeter_.size() <= 2) return {};
    return {perimeter_.begin() + 1, perimeter_.end() - 1};
}

HalfEdgeId PolygonTriangulation::boundary_half_edge(int i) const {
    return boundary_.at(static_cast<std::size_t>(i));
}

std::vector<VertexPair> PolygonTriangulation::diagonals() const {
    std::vector<VertexPair> out;
    for (const EdgeRecord& e : edges()) {
        if (e.twin == kNone) continue;
        if (perimeter_index(e.u) == kNone || perimeter_index(e.v) == kNone) continue;
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Triangulation combine_polygons(const PolygonTriangulation& inner, const PolygonTriangulation& outer) {
    constexpr ErrorCode fail = ErrorCode::PerimeterMismatch;
    if (inner.vertex_count() != outer.vertex_count() ||
        !std::equal(inner.perimeter().begin(), inner.perimeter().end(), outer.perimeter().begin(),
                    outer.perimeter().end())) {
        throw Error(fail, "polygons do not share the same perimeter and base");
    }
    if (inner.inner_vertex_count() != 0 || outer.inner_vertex_count() != 0) {
        throw Error(fail, "polygons with inner vertices cannot be combined");
    }
    if (inner.perimeter_size() < 3) throw Error(fail, "perimeter too short to close a triangulation");

    const int ti = inner.triangle_count();
    std::vector<Triple> triangles(inner.triangles().begin(), inner.triangles().end());
    for (const Triple& t : outer.triangles()) triangles.push_back({t[0], t[2], t[1]});
    // Reversing (a,b,c) to (a,c,b) sends slot k to slot 2-k.
    auto outer_half = [&](HalfEdgeId h) {
        const int t = TriangleMesh::triangle_of(h);
        return 3 * (ti + t) + (2 - TriangleMesh::slot_of(h));
    };
    std::vector<HalfEdgeId> twins(3 * triangles.size(), kNone);
    for (HalfEdgeId h = 0; h < inner.half_edge_count(); ++h) twins[static_cast<std::size_t>(h)] = inner.twin(h);
    for (HalfEdgeId h = 0; h < outer.half_edge_count(); ++h) {
        const HalfEdgeId g = outer.twin(h);
        if (g != kNone) twins[static_cast<std::size_t>(outer_half(h))] = outer_half(g);
    }
    for (int i = 0; i < inner.perimeter_size(); ++i) {
        const HalfEdgeId a = inner.boundary_half_edge(i);
        const HalfEdgeId b = outer_half(outer.boundary_half_edge(i));
        twins[static_cast<std::size_t>(a)] = b;
        twins[static_cast<std::size_t>(b)] = a;
    }
    return Triangulation::from_mesh(inner.vertex_count(), std::move(triangles), std::move(twins));
}

}  // namespace heawood
