#include "heawood/polygon_ops.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace heawood {

namespace {

void require_plain(const PolygonTriangulation& p) {
    if (p.perimeter_size() < 3) throw Error(ErrorCode::DegeneratePolygon, "polygon has fewer than 3 perimeter vertices");
    if (p.inner_vertex_count() != 0) throw Error(ErrorCode::DegeneratePolygon, "polygon has inner vertices");
}

std::vector<Triple> copy_triangles(const TriangleMesh& m) { return {m.triangles().begin(), m.triangles().end()}; }
std::vector<HalfEdgeId> copy_twins(const TriangleMesh& m) { return {m.twins().begin(), m.twins().end()}; }

std::vector<VertexPair> diagonals_by_position(const std::vector<int>& perimeter, const std::vector<Triple>& tris) {
    const int n = static_cast<int>(perimeter.size());
    std::vector<int> pos(perimeter.size(), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perimeter[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexPair> out;
    for (const Triple& t : tris) {
        for (int k = 0; k < 3; ++k) {
            int i = pos[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
            int j = pos[static_cast<std::size_t>(t[static_cast<std::size_t>((k + 1) % 3)])];
            if (i > j) std::swap(i, j);
            if (j - i == 1 || (i == 0 && j == n - 1)) continue;
            out.emplace_back(i, j);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Genealogical growth: the last inserted vertex sits at perimeter index k, and
// only edges from k-1 onward (excluding the base) may receive the next ear.
template <typename Emit>
void grow(int v, std::vector<int>& perimeter, std::vector<Triple>& tris, int k, const Emit& emit) {
    const int n = static_cast<int>(perimeter.size());
    if (n == v) {
        emit(perimeter, tris);
        return;
    }
    for (int j = k - 1; j <= n - 2; ++j) {
        const int x = n;
        const auto at = perimeter.begin() + j + 1;
        tris.push_back({perimeter[static_cast<std::size_t>(j)], x, perimeter[static_cast<std::size_t>(j + 1)]});
        perimeter.insert(at, x);
        grow(v, perimeter, tris, j + 1, emit);
        perimeter.erase(perimeter.begin() + j + 1);
        tris.pop_back();
    }
}

template <typename Emit>
void for_each_diagonal_set(int v, const Emit& emit) {
    if (v < 2) throw Error(ErrorCode::BadParams, "polygons need at least 2 vertices");
    std::vector<int> perimeter{0, 1};
    std::vector<Triple> tris;
    grow(v, perimeter, tris, 1, [&](const std::vector<int>& per, const std::vector<Triple>& t) {
        emit(diagonals_by_position(per, t));
    });
}

}  // namespace

std::vector<EarInfo> find_ears(const PolygonTriangulation& p) {
    require_plain(p);
    std::vector<EarInfo> out;
    const int vp = p.perimeter_size();
    for (int i = 0; i < vp; ++i) {
        const VertexId u = p.perimeter()[static_cast<std::size_t>(i)];
        if (p.triangle_degree(u) != 1) continue;
        out.push_back({TriangleMesh::triangle_of(p.corners(u)[0]), u,
                       {p.boundary_half_edge((i + vp - 1) % vp), p.boundary_half_edge(i)}});
    }
    return out;
}

PolygonTriangulation rebase(const PolygonTriangulation& p, VertexPair base) {
    std::vector<VertexId> perimeter(p.perimeter().begin(), p.perimeter().end());
    const auto n = perimeter.size();
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId a = perimeter[i];
        const VertexId b = perimeter[(i + 1) % n];
        if ((a == base.first && b == base.second) || (a == base.second && b == base.first)) {
            std::rotate(perimeter.begin(), perimeter.begin() + static_cast<std::ptrdiff_t>((i + 1) % n), perimeter.end());
            if (p.triangle_count() == 0) return PolygonTriangulation::from_mesh(2, std::move(perimeter), {}, {});
            return PolygonTriangulation::from_mesh(p.vertex_count(), std::move(perimeter), copy_triangles(p),
                                                   copy_twins(p));
        }
    }
    throw Error(ErrorCode::InvalidPolygon, "base is not a perimeter edge");
}

VertexTriangleAssociation associate(const PolygonTriangulation& p) {
    require_plain(p);
    const int vp = p.perimeter_size();
    const auto per = p.perimeter();
    VertexTriangleAssociation assoc;
    assoc.vertex_triangle.assign(static_cast<std::size_t>(p.vertex_count()), kNone);
    assoc.triangle_vertex.assign(static_cast<std::size_t>(p.triangle_count()), kNone);
    assoc.parent.assign(static_cast<std::size_t>(p.triangle_count()), kNone);

    std::vector<int> degree(static_cast<std::size_t>(p.vertex_count()));
    for (VertexId u = 0; u < p.vertex_count(); ++u) degree[static_cast<std::size_t>(u)] = p.triangle_degree(u);
    std::vector<char> cut(static_cast<std::size_t>(p.triangle_count()), 0);
    std::vector<int> prev(static_cast<std::size_t>(vp));
    std::vector<int> next(static_cast<std::size_t>(vp));
    for (int i = 0; i < vp; ++i) {
        prev[static_cast<std::size_t>(i)] = (i + vp - 1) % vp;
        next[static_cast<std::size_t>(i)] = (i + 1) % vp;
    }
    std::vector<char> alive(static_cast<std::size_t>(vp), 1);

    for (int step = 0; step < vp - 2; ++step) {
        int i = 1;
        while (i <= vp - 2 && !(alive[static_cast<std::size_t>(i)] &&
                                degree[static_cast<std::size_t>(per[static_cast<std::size_t>(i)])] == 1)) {
            ++i;
        }
        if (i > vp - 2) throw Error(ErrorCode::InvalidPolygon, "no non-base ear tip left");
        const VertexId x = per[static_cast<std::size_t>(i)];
        TriangleId t = kNone;
        for (HalfEdgeId h : p.corners(x)) {
            if (!cut[static_cast<std::size_t>(TriangleMesh::triangle_of(h))]) t = TriangleMesh::triangle_of(h);
        }
        cut[static_cast<std::size_t>(t)] = 1;
        assoc.vertex_triangle[static_cast<std::size_t>(x)] = t;
        assoc.triangle_vertex[static_cast<std::size_t>(t)] = x;
        assoc.order.push_back(t);
        for (int k = 0; k < 3; ++k) {
            const HalfEdgeId h = 3 * t + k;
            if (p.tail(h) == x || p.head(h) == x) continue;
            // The edge opposite the tip is the cut; its other side is the parent.
            const HalfEdgeId g = p.twin(h);
            assoc.parent[static_cast<std::size_t>(t)] = g == kNone ? kNone : TriangleMesh::triangle_of(g);
        }
        for (VertexId y : p.triangle(t)) {
            if (y != x) --degree[static_cast<std::size_t>(y)];
        }
        const int l = prev[static_cast<std::size_t>(i)];
        const int r = next[static_cast<std::size_t>(i)];
        next[static_cast<std::size_t>(l)] = r;
        prev[static_cast<std::size_t>(r)] = l;
        alive[static_cast<std::size_t>(i)] = 0;
    }
    return assoc;
}

OrientationAssignment decode_cv3_to_ct2(const PolygonTriangulation& p, const VertexNumbering& numbering) {
    const VertexTriangleAssociation assoc = associate(p);
    if (static_cast<int>(numbering.values.size()) != p.vertex_count()) {
        throw Error(ErrorCode::IncompleteAssignment, "numbering size differs from the vertex count");
    }
    std::vector<int> adjusted(numbering.values.begin(), numbering.values.end());
    for (VertexId x : p.non_base_vertices()) {
        const int val = adjusted[static_cast<std::size_t>(x)];
        if (val < 0 || val > 2) {
            throw Error(ErrorCode::IncompleteAssignment, "vertex " + std::to_string(x) + " has no value");
        }
    }
    OrientationAssignment a;
    a.values.assign(static_cast<std::size_t>(p.triangle_count()), 0);
    for (TriangleId t : assoc.order) {
        const VertexId x = assoc.triangle_vertex[static_cast<std::size_t>(t)];
        const int val = ((adjusted[static_cast<std::size_t>(x)] % 3) + 3) % 3;
        if (val == 0) {
            throw Error(ErrorCode::NoPreimage, "ear tip " + std::to_string(x) + " needs value 0", {x});
        }
        a.values[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(val);
        for (VertexId y : p.triangle(t)) {
            if (y != x) adjusted[static_cast<std::size_t>(y)] -= val;
        }
    }
    return a;
}

std::uint64_t enumerate_polygons_on_base(int v, const std::function<void(const PolygonTriangulation&)>& visit) {
    std::uint64_t count = 0;
    for_each_diagonal_set(v, [&](const std::vector<VertexPair>& diagonals) {
        ++count;
        visit(polygon_on_base(v, diagonals));
    });
    return count;
}

std::vector<PolygonTriangulation> enumerate_polygons_on_base(int v) {
    std::vector<PolygonTriangulation> out;
    enumerate_polygons_on_base(v, [&](const PolygonTriangulation& p) { out.push_back(p); });
    return out;
}

std::vector<std::vector<VertexPair>> enumerate_diagonal_sets(int v) {
    std::vector<std::vector<VertexPair>> out;
    for_each_diagonal_set(v, [&](const std::vector<VertexPair>& d) { out.push_back(d); });
    return out;
}

PolygonTriangulation polygon_on_base(int v, std::span<const VertexPair> diagonals) {
    if (v < 2) throw Error(ErrorCode::InvalidPolygon, "polygons need at least 2 vertices");
    std::vector<VertexId> perimeter(static_cast<std::size_t>(v));
    std::iota(perimeter.begin(), perimeter.end(), 0);
    return PolygonTriangulation::from_diagonals(std::move(perimeter), {v - 1, 0}, diagonals);
}

std::uint64_t catalan_count(int v) {
    if (v < 2) throw Error(ErrorCode::BadParams, "catalan_count needs v >= 2");
    const int n = v - 2;
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::uint64_t sum = 0;
        for (int i = 0; i < m; ++i) {
            std::uint64_t term = 0;
            if (__builtin_mul_overflow(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(m - 1 - i)], &term) ||
                __builtin_add_overflow(sum, term, &sum)) {
                throw Error(ErrorCode::BadParams, "Catalan number overflows 64 bits");
            }
        }
        c[static_cast<std::size_t>(m)] = sum;
    }
    return c[static_cast<std::size_t>(n)];
}

X1X2Code x1x2_code(const PolygonTriangulation& p, const VertexTriangleAssociation& assoc,
                   const OrientationAssignment& a) {
    if (static_cast<int>(a.values.size()) != p.triangle_count()) {
        throw Error(ErrorCode::IncompleteAssignment, "assignment size differs from the triangle count");
    }
    X1X2Code code;
    code.vertices = p.non_base_vertices();
    for (VertexId x : code.vertices) {
        code.symbols.push_back(a.values[static_cast<std::size_t>(assoc.vertex_triangle[static_cast<std::size_t>(x)])]);
    }
    return code;
}

OrientationAssignment assignment_from_code(const PolygonTriangulation& p, const VertexTriangleAssociation& assoc,
                                           const X1X2Code& code) {
    OrientationAssignment a;
    a.values.assign(static_cast<std::size_t>(p.triangle_count()), 0);
    if (code.vertices.size() != code.symbols.size()) throw Error(ErrorCode::BadParams, "malformed code");
    for (std::size_t i = 0; i < code.vertices.size(); ++i) {
        a.values[static_cast<std::size_t>(assoc.vertex_triangle.at(static_cast<std::size_t>(code.vertices[i])))] =
            code.symbols[i];
    }
    if (std::find(a.values.begin(), a.values.end(), 0) != a.values.end()) {
        throw Error(ErrorCode::IncompleteAssignment, "code does not cover every triangle");
    }
    return a;
}

DifferenceOutcome verify_difference_property(const PolygonTriangulation& p, std::span<const int> column_shift) {
    const VertexTriangleAssociation assoc = associate(p);
    const int t = p.triangle_count();
    if (t > 30) throw Error(ErrorCode::TooLarge, "difference check limited to 30 triangles");
    // Bit set in `mask` means value 2; the sum at x is its degree plus the
    // number of incident triangles set to 2.
    std::vector<std::uint64_t> incident(static_cast<std::size_t>(p.vertex_count()), 0);
    for (TriangleId k = 0; k < t; ++k) {
        for (VertexId y : p.triangle(k)) incident[static_cast<std::size_t>(y)] |= std::uint64_t{1} << k;
    }
    auto value = [&](VertexId x, std::uint64_t mask) {
        int s = p.triangle_degree(x) + std::popcount(mask & incident[static_cast<std::size_t>(x)]);
        if (!column_shift.empty()) s += column_shift[static_cast<std::size_t>(x)];
        return ((s % 3) + 3) % 3;
    };
    DifferenceOutcome out;
    for (VertexId x : p.non_base_vertices()) {
        const std::uint64_t bit = std::uint64_t{1} << assoc.vertex_triangle[static_cast<std::size_t>(x)];
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
            if (mask & bit) continue;
            ++out.checked;
            if ((value(x, mask | bit) - value(x, mask) + 3) % 3 != 1) {
                out.holds = false;
                out.vertex = x;
                out.mask = mask;
                return out;
            }
        }
    }
    return out;
}

PolygonTriangulation add_ear(const PolygonTriangulation& p, VertexId tip) {
    if (p.perimeter_size() < 3) throw Error(ErrorCode::DegeneratePolygon, "no non-base perimeter vertex left");
    if (tip < 0 || tip >= p.vertex_count() || p.perimeter_index(tip) == kNone) {
        throw Error(ErrorCode::NotOnPerimeter, "vertex " + std::to_string(tip) + " is not on the perimeter");
    }
    const int i = p.perimeter_index(tip);
    if (p.is_base_vertex(tip)) throw Error(ErrorCode::TipOnBase, "vertex " + std::to_string(tip) + " is a base vertex");
    const VertexId l = p.perimeter()[static_cast<std::size_t>(i - 1)];
    const VertexId r = p.perimeter()[static_cast<std::size_t>(i + 1)];
    const HalfEdgeId in = p.boundary_half_edge(i - 1);
    const HalfEdgeId out = p.boundary_half_edge(i);

    auto triangles = copy_triangles(p);
    auto twins = copy_twins(p);
    const HalfEdgeId base = 3 * static_cast<HalfEdgeId>(triangles.size());
    triangles.push_back({r, tip, l});
    twins.insert(twins.end(), {out, in, kNone});
    twins[static_cast<std::size_t>(out)] = base;
    twins[static_cast<std::size_t>(in)] = base + 1;
    std::vector<VertexId> perimeter(p.perimeter().begin(), p.perimeter().end());
    perimeter.erase(perimeter.begin() + i);
    return PolygonTriangulation::from_mesh(p.vertex_count(), std::move(perimeter), std::move(triangles),
                                           std::move(twins));
}

std::uint64_t distinct_cv3_count(const TriangleMesh& mesh, std::span<const VertexId> tracked, int max_triangles) {
    const int t = mesh.triangle_count();
    if (t > max_triangles || t > 40) {
        throw Error(ErrorCode::TooLarge, std::to_string(t) + " triangles exceed the exhaustion bound of " +
                                             std::to_string(max_triangles));
    }
    if (tracked.size() > 40) throw Error(ErrorCode::TooLarge, "too many tracked vertices");
    std::vector<int> pos(static_cast<std::size_t>(mesh.vertex_count()), -1);
    std::vector<std::uint64_t> pow3(tracked.size() + 1, 1);
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        const VertexId x = tracked[i];
        if (x < 0 || x >= mesh.vertex_count()) throw Error(ErrorCode::UnknownVertex, "tracked vertex out of range");
        pos[static_cast<std::size_t>(x)] = static_cast<int>(i);
        pow3[i + 1] = pow3[i] * 3;
    }
    std::vector<int> val(static_cast<std::size_t>(mesh.vertex_count()), 0);
    std::uint64_t key = 0;
    for (VertexId x : tracked) {
        val[static_cast<std::size_t>(x)] = mesh.triangle_degree(x) % 3;
        key += static_cast<std::uint64_t>(val[static_cast<std::size_t>(x)]) * pow3[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])];
    }
    const std::uint64_t space = pow3.back();
    const std::uint64_t total = std::uint64_t{1} << t;
    const bool use_bitset = space <= (std::uint64_t{1} << 30);
    std::vector<std::uint64_t> bits;
    std::vector<std::uint64_t> keys;
    if (use_bitset) {
        bits.assign(static_cast<std::size_t>((space + 63) / 64), 0);
    } else {
        keys.reserve(static_cast<std::size_t>(total));
    }
    auto record = [&] {
        if (use_bitset) {
            bits[static_cast<std::size_t>(key / 64)] |= std::uint64_t{1} << (key % 64);
        } else {
            keys.push_back(key);
        }
    };
    std::vector<char> two(static_cast<std::size_t>(t), 0);
    record();
    for (std::uint64_t i = 1; i < total; ++i) {
        const int b = std::countr_zero(i);
        two[static_cast<std::size_t>(b)] ^= 1;
        const int delta = two[static_cast<std::size_t>(b)] ? 1 : 2;  // +1 or -1 mod 3
        for (VertexId x : mesh.triangle(b)) {
            const int p = pos[static_cast<std::size_t>(x)];
            if (p < 0) continue;
            int& v = val[static_cast<std::size_t>(x)];
            const int nv = (v + delta) % 3;
            key = key - static_cast<std::uint64_t>(v) * pow3[static_cast<std::size_t>(p)] +
                  static_cast<std::uint64_t>(nv) * pow3[static_cast<std::size_t>(p)];
            v = nv;
        }
        record();
    }
    if (use_bitset) {
        std::uint64_t count = 0;
        for (std::uint64_t w : bits) count += static_cast<std::uint64_t>(std::popcount(w));
        return count;
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::uint64_t distinct_cv3_count(const PolygonTriangulation& p, int max_triangles) {
    std::vector<VertexId> tracked = p.inner_vertices();
    const auto nb = p.non_base_vertices();
    tracked.insert(tracked.end(), nb.begin(), nb.end());
    return distinct_cv3_count(p, tracked, max_triangles);
}

std::uint64_t distinct_cv3_lower_bound(const PolygonTriangulation& p) {
    std::uint64_t bound = std::uint64_t{1} << (p.perimeter_size() - 2);
    for (int i = 0; i < p.inner_vertex_count(); ++i) bound *= 3;
    return bound;
}

PolygonTriangulation wheel_polygon(int k) {
    if (k < 3) throw Error(ErrorCode::BadParams, "a wheel needs at least 3 rim vertices");
    std::vector<VertexId> perimeter(static_cast<std::size_t>(k));
    std::iota(perimeter.begin(), perimeter.end(), 0);
    std::vector<Triple> tris;
    for (int i = 0; i < k; ++i) tris.push_back({i, (i + 1) % k, k});
    return PolygonTriangulation::from_triangles(k + 1, std::move(perimeter), std::move(tris));
}

}  // namespace heawood
