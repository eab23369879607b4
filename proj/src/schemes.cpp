#include "heawood/schemes.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <string>

namespace heawood {

namespace {

std::uint8_t mod3(int x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }

void require_total(const TriangleMesh& mesh, const OrientationAssignment& a) {
    if (static_cast<int>(a.values.size()) != mesh.triangle_count()) {
        throw Error(ErrorCode::IncompleteAssignment,
                    "assignment has " + std::to_string(a.values.size()) + " values for " +
                        std::to_string(mesh.triangle_count()) + " triangles");
    }
    for (std::size_t t = 0; t < a.values.size(); ++t) {
        if (a.values[t] != 1 && a.values[t] != 2) {
            throw Error(ErrorCode::IncompleteAssignment, "triangle " + std::to_string(t) + " has no value 1 or 2");
        }
    }
}

std::uint8_t half_color(const TriangleMesh& mesh, const EdgeColoring& ec, HalfEdgeId h) {
    return ec.colors[static_cast<std::size_t>(mesh.edge_of(h))];
}

void require_proper(const TriangleMesh& mesh, const EdgeColoring& ec) {
    if (!is_proper(mesh, ec)) throw Error(ErrorCode::ImproperInput, "edge colouring is not proper");
}

void require_proper(const TriangleMesh& mesh, const VertexColoring& c) {
    if (!is_proper(mesh, c)) throw Error(ErrorCode::ImproperInput, "vertex colouring is not proper");
}

std::vector<int> dual_cycle(const std::vector<TriangleId>& parent, TriangleId a, TriangleId b) {
    std::vector<int> up_a{a};
    while (parent[static_cast<std::size_t>(up_a.back())] != kNone) up_a.push_back(parent[static_cast<std::size_t>(up_a.back())]);
    std::vector<int> up_b{b};
    while (parent[static_cast<std::size_t>(up_b.back())] != kNone) up_b.push_back(parent[static_cast<std::size_t>(up_b.back())]);
    while (up_a.size() > 1 && up_b.size() > 1 && up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
        up_a.pop_back();
        up_b.pop_back();
    }
    up_b.pop_back();
    std::vector<int> cycle(up_a.begin(), up_a.end());
    cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
    return cycle;
}

}  // namespace

char vertex_color_char(std::uint8_t c) {
    static constexpr char names[] = {'C', 'M', 'Y', 'K'};
    if (c > 3) throw Error(ErrorCode::ImproperInput, "vertex colour out of range");
    return names[c];
}

char edge_color_char(std::uint8_t c) {
    static constexpr char names[] = {'r', 'g', 'b'};
    if (c > 2) throw Error(ErrorCode::ImproperInput, "edge colour out of range");
    return names[c];
}

std::uint8_t parse_vertex_color(char c) {
    switch (c) {
        case 'C': return vcolor::C;
        case 'M': return vcolor::M;
        case 'Y': return vcolor::Y;
        case 'K': return vcolor::K;
        default: throw Error(ErrorCode::ParseError, std::string("unknown vertex colour '") + c + "'");
    }
}

std::uint8_t parse_edge_color(char c) {
    switch (c) {
        case 'r': return ecolor::r;
        case 'g': return ecolor::g;
        case 'b': return ecolor::b;
        default: throw Error(ErrorCode::ParseError, std::string("unknown edge colour '") + c + "'");
    }
}

OrientationAssignment uniform_assignment(const TriangleMesh& mesh, std::uint8_t value) {
    return OrientationAssignment{std::vector<std::uint8_t>(static_cast<std::size_t>(mesh.triangle_count()), value)};
}

OrientationAssignment assignment_from_mask(int triangle_count, std::uint64_t mask) {
    OrientationAssignment a;
    a.values.resize(static_cast<std::size_t>(triangle_count));
    for (int t = 0; t < triangle_count; ++t) a.values[static_cast<std::size_t>(t)] = ((mask >> t) & 1u) ? 2 : 1;
    return a;
}

VertexNumbering cv3_from_ct2(const TriangleMesh& mesh, const OrientationAssignment& a) {
    require_total(mesh, a);
    std::vector<int> sum(static_cast<std::size_t>(mesh.vertex_count()), 0);
    for (TriangleId t = 0; t < mesh.triangle_count(); ++t) {
        for (VertexId x : mesh.triangle(t)) sum[static_cast<std::size_t>(x)] += a.values[static_cast<std::size_t>(t)];
    }
    VertexNumbering n;
    n.values.reserve(sum.size());
    for (int s : sum) n.values.push_back(static_cast<std::int8_t>(s % 3));
    return n;
}

bool is_good(const TriangleMesh& mesh, const OrientationAssignment& a) {
    const auto n = cv3_from_ct2(mesh, a);
    return std::all_of(n.values.begin(), n.values.end(), [](std::int8_t x) { return x == 0; });
}

OrientationAssignment complement(const OrientationAssignment& a) {
    OrientationAssignment out = a;
    for (auto& x : out.values) x = static_cast<std::uint8_t>(3 - x);
    return out;
}

VertexNumbering complement(const VertexNumbering& n) {
    VertexNumbering out = n;
    for (auto& x : out.values) {
        if (x == 1 || x == 2) x = static_cast<std::int8_t>(3 - x);
    }
    return out;
}

bool is_proper(const TriangleMesh& mesh, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != mesh.vertex_count()) return false;
    if (std::any_of(c.colors.begin(), c.colors.end(), [](std::uint8_t x) { return x > 3; })) return false;
    return std::all_of(mesh.edges().begin(), mesh.edges().end(), [&](const EdgeRecord& e) {
        return c.colors[static_cast<std::size_t>(e.u)] != c.colors[static_cast<std::size_t>(e.v)];
    });
}

bool is_proper(const TriangleMesh& mesh, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != mesh.edge_count()) return false;
    if (std::any_of(c.colors.begin(), c.colors.end(), [](std::uint8_t x) { return x > 2; })) return false;
    for (TriangleId t = 0; t < mesh.triangle_count(); ++t) {
        const auto x = half_color(mesh, c, 3 * t);
        const auto y = half_color(mesh, c, 3 * t + 1);
        const auto z = half_color(mesh, c, 3 * t + 2);
        if (x == y || y == z || x == z) return false;
    }
    return true;
}

EdgeColoring v4c_to_e3c(const TriangleMesh& mesh, const VertexColoring& c) {
    require_proper(mesh, c);
    EdgeColoring ec;
    ec.colors.reserve(static_cast<std::size_t>(mesh.edge_count()));
    for (const EdgeRecord& e : mesh.edges()) {
        const int klein = c.colors[static_cast<std::size_t>(e.u)] ^ c.colors[static_cast<std::size_t>(e.v)];
        ec.colors.push_back(static_cast<std::uint8_t>(klein - 1));
    }
    return ec;
}

VertexColoring e3c_to_v4c(const TriangleMesh& mesh, const EdgeColoring& ec, VertexId seed_vertex,
                          std::uint8_t seed_color) {
    require_proper(mesh, ec);
    if (seed_vertex < 0 || seed_vertex >= mesh.vertex_count()) {
        throw Error(ErrorCode::UnknownVertex, "seed vertex " + std::to_string(seed_vertex));
    }
    if (seed_color > 3) throw Error(ErrorCode::BadParams, "seed colour out of range");
    const auto v = static_cast<std::size_t>(mesh.vertex_count());
    std::vector<std::vector<std::pair<VertexId, std::uint8_t>>> adj(v);
    for (std::size_t e = 0; e < ec.colors.size(); ++e) {
        const EdgeRecord& rec = mesh.edge(static_cast<EdgeId>(e));
        const auto klein = static_cast<std::uint8_t>(ec.colors[e] + 1);
        adj[static_cast<std::size_t>(rec.u)].emplace_back(rec.v, klein);
        adj[static_cast<std::size_t>(rec.v)].emplace_back(rec.u, klein);
    }
    std::vector<int> color(v, -1);
    color[static_cast<std::size_t>(seed_vertex)] = seed_color;
    std::deque<VertexId> queue{seed_vertex};
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (const auto& [w, klein] : adj[static_cast<std::size_t>(u)]) {
            const int want = color[static_cast<std::size_t>(u)] ^ klein;
            int& cw = color[static_cast<std::size_t>(w)];
            if (cw == -1) {
                cw = want;
                queue.push_back(w);
            } else if (cw != want) {
                throw Error(ErrorCode::Inconsistent, "edge colours disagree around vertex " + std::to_string(w),
                            {u, w});
            }
        }
    }
    VertexColoring out;
    for (int c : color) {
        if (c < 0) throw Error(ErrorCode::Inconsistent, "mesh is not connected");
        out.colors.push_back(static_cast<std::uint8_t>(c));
    }
    return out;
}

OrientationAssignment e3c_to_ct2(const TriangleMesh& mesh, const EdgeColoring& ec) {
    require_proper(mesh, ec);
    OrientationAssignment a;
    a.values.reserve(static_cast<std::size_t>(mesh.triangle_count()));
    for (TriangleId t = 0; t < mesh.triangle_count(); ++t) {
        const int c0 = half_color(mesh, ec, 3 * t);
        const int c1 = half_color(mesh, ec, 3 * t + 1);
        a.values.push_back(mod3(c1 - c0) == 1 ? 1 : 2);
    }
    return a;
}

EdgeColoring ct2_to_e3c(const TriangleMesh& mesh, const OrientationAssignment& a, EdgeId first_edge,
                        std::uint8_t first_color) {
    require_total(mesh, a);
    if (first_edge < 0 || first_edge >= mesh.edge_count()) {
        throw Error(ErrorCode::BadParams, "first edge " + std::to_string(first_edge) + " out of range");
    }
    if (first_color > 2) throw Error(ErrorCode::BadParams, "first colour out of range");
    const auto t_count = static_cast<std::size_t>(mesh.triangle_count());
    std::vector<int> hc(3 * t_count, -1);
    std::vector<TriangleId> parent(t_count, kNone);
    std::vector<char> seen(t_count, 0);

    auto paint = [&](HalfEdgeId h, int color) {
        const TriangleId t = TriangleMesh::triangle_of(h);
        const int k = TriangleMesh::slot_of(h);
        const int step = a.values[static_cast<std::size_t>(t)];
        for (int j = 0; j < 3; ++j) {
            hc[static_cast<std::size_t>(3 * t + j)] = mod3(color + step * (j - k));
        }
    };

    const HalfEdgeId h0 = mesh.edge(first_edge).half;
    const TriangleId t0 = TriangleMesh::triangle_of(h0);
    paint(h0, first_color);
    seen[static_cast<std::size_t>(t0)] = 1;
    std::deque<TriangleId> queue{t0};
    while (!queue.empty()) {
        const TriangleId t = queue.front();
        queue.pop_front();
        for (int k = 0; k < 3; ++k) {
            const HalfEdgeId h = 3 * t + k;
            const HalfEdgeId g = mesh.twin(h);
            if (g == kNone) continue;
            const TriangleId n = TriangleMesh::triangle_of(g);
            const int want = hc[static_cast<std::size_t>(h)];
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = 1;
                parent[static_cast<std::size_t>(n)] = t;
                paint(g, want);
                queue.push_back(n);
            } else if (hc[static_cast<std::size_t>(g)] != want) {
                throw Error(ErrorCode::NotGood,
                            "edge colours do not close around the dual cycle through triangles " +
                                std::to_string(t) + " and " + std::to_string(n),
                            dual_cycle(parent, t, n));
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw Error(ErrorCode::Inconsistent, "mesh is not connected");
    }
    EdgeColoring ec;
    ec.colors.assign(static_cast<std::size_t>(mesh.edge_count()), 0);
    for (std::size_t h = 0; h < hc.size(); ++h) {
        ec.colors[static_cast<std::size_t>(mesh.edge_of(static_cast<HalfEdgeId>(h)))] = static_cast<std::uint8_t>(hc[h]);
    }
    return ec;
}

VertexColoring ct2_to_v4c(const TriangleMesh& mesh, const OrientationAssignment& a, const ColoringSeed& seed) {
    const EdgeColoring ec = ct2_to_e3c(mesh, a, seed.edge, seed.edge_color);
    return e3c_to_v4c(mesh, ec, seed.vertex, seed.vertex_color);
}

std::uint8_t propagate_along_path(std::uint8_t first_color, std::span<const int> partials) {
    return mod3(std::accumulate(partials.begin(), partials.end(), static_cast<int>(first_color)));
}

std::uint8_t propagate_along_path(const TriangleMesh& mesh, const OrientationAssignment& a,
                                  std::span<const HalfEdgeId> path, std::uint8_t first_color) {
    require_total(mesh, a);
    std::vector<int> partials;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const HalfEdgeId in = path[i];
        const HalfEdgeId out = path[i + 1];
        const VertexId x = mesh.head(in);
        if (mesh.tail(out) != x) throw Error(ErrorCode::BadParams, "path half-edges are not consecutive");
        HalfEdgeId g = mesh.twin(in);
        if (g == kNone) throw Error(ErrorCode::BadParams, "path runs along the boundary");
        int sum = 0;
        for (int guard = 0; g != out; ++guard) {
            if (guard > mesh.triangle_degree(x)) throw Error(ErrorCode::BadParams, "path leaves the vertex fan");
            const HalfEdgeId back = mesh.twin(g);
            if (back == kNone) throw Error(ErrorCode::BadParams, "right-hand side meets the boundary");
            sum += a.values[static_cast<std::size_t>(TriangleMesh::triangle_of(back))];
            g = TriangleMesh::next(back);
        }
        partials.push_back(sum % 3);
    }
    return propagate_along_path(first_color, partials);
}

std::vector<VertexColoring> orbit(const TriangleMesh& mesh, const VertexColoring& c) {
    require_proper(mesh, c);
    std::array<std::uint8_t, 4> perm{0, 1, 2, 3};
    std::vector<VertexColoring> out;
    do {
        VertexColoring p = c;
        for (auto& x : p.colors) x = perm[x];
        out.push_back(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeColoring> orbit(const TriangleMesh& mesh, const EdgeColoring& c) {
    require_proper(mesh, c);
    std::array<std::uint8_t, 3> perm{0, 1, 2};
    std::vector<EdgeColoring> out;
    do {
        EdgeColoring p = c;
        for (auto& x : p.colors) x = perm[x];
        out.push_back(std::move(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<OrientationAssignment> orbit(const OrientationAssignment& a) {
    std::vector<OrientationAssignment> out{a, complement(a)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace heawood
