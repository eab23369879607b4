#include "heawood/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace heawood {

namespace {

constexpr std::size_t kMaxPairingCombinations = 1u << 16;

using Matching = std::vector<std::pair<HalfEdgeId, HalfEdgeId>>;

void enumerate_matchings(std::vector<HalfEdgeId>& pool, Matching& current,
                         std::vector<Matching>& out) {
    if (pool.empty()) {
        out.push_back(current);
        return;
    }
    const HalfEdgeId first = pool.front();
    for (std::size_t i = 1; i < pool.size(); ++i) {
        const HalfEdgeId partner = pool[i];
        std::vector<HalfEdgeId> rest;
        for (std::size_t j = 1; j < pool.size(); ++j) {
            if (j != i) rest.push_back(pool[j]);
        }
        current.emplace_back(first, partner);
        enumerate_matchings(rest, current, out);
        current.pop_back();
    }
}

VertexId raw_tail(std::span<const Triple> t, HalfEdgeId h) {
    return t[static_cast<std::size_t>(h / 3)][static_cast<std::size_t>(h % 3)];
}

enum class Attempt { Ok, BadOrientation, BadSurface };

// Orients the triangles for one choice of half-edge pairing and tries to build.
Attempt try_pairing(int vertex_count, std::span<const Triple> triples,
                    const std::vector<HalfEdgeId>& raw_twins, std::optional<Triangulation>& out,
                    std::string& why) {
    const std::size_t t_count = triples.size();
    std::vector<int> flip(t_count, -1);
    bool disconnected = false;
    for (std::size_t root = 0; root < t_count; ++root) {
        if (flip[root] != -1) continue;
        if (root != 0) disconnected = true;
        flip[root] = 0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t t = queue.front();
            queue.pop_front();
            for (int k = 0; k < 3; ++k) {
                const auto h = static_cast<HalfEdgeId>(3 * t + static_cast<std::size_t>(k));
                const HalfEdgeId g = raw_twins[static_cast<std::size_t>(h)];
                const auto n = static_cast<std::size_t>(g / 3);
                if (n == t) {
                    why = "a triangle is glued to itself";
                    return Attempt::BadSurface;
                }
                const bool same_direction = raw_tail(triples, h) == raw_tail(triples, g);
                const int wanted = same_direction ? 1 - flip[t] : flip[t];
                if (flip[n] == -1) {
                    flip[n] = wanted;
                    queue.push_back(n);
                } else if (flip[n] != wanted) {
                    why = "triangles cannot be given one consistent orientation";
                    return Attempt::BadOrientation;
                }
            }
        }
    }
    if (disconnected) {
        why = "triangles do not form a connected surface";
        return Attempt::BadSurface;
    }
    std::vector<Triple> oriented(triples.begin(), triples.end());
    auto map_half = [&](HalfEdgeId h) {
        const auto t = static_cast<std::size_t>(h / 3);
        const int k = h % 3;
        return static_cast<HalfEdgeId>(3 * t + static_cast<std::size_t>(flip[t] ? 2 - k : k));
    };
    for (std::size_t t = 0; t < t_count; ++t) {
        if (flip[t]) std::swap(oriented[t][1], oriented[t][2]);
    }
    std::vector<HalfEdgeId> twins(raw_twins.size(), kNone);
    for (std::size_t h = 0; h < raw_twins.size(); ++h) {
        twins[static_cast<std::size_t>(map_half(static_cast<HalfEdgeId>(h)))] =
            map_half(raw_twins[h]);
    }
    try {
        out = Triangulation::from_mesh(vertex_count, std::move(oriented), std::move(twins));
    } catch (const Error& e) {
        why = e.what();
        return Attempt::BadSurface;
    }
    return Attempt::Ok;
}

std::array<EdgeId, 3> sorted_edges(EdgeId a, EdgeId b, EdgeId c) {
    std::array<EdgeId, 3> e{a, b, c};
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

Triangulation Triangulation::from_mesh(int vertex_count, std::vector<Triple> triangles,
                                       std::vector<HalfEdgeId> twins) {
    constexpr ErrorCode fail = ErrorCode::NotATriangulation;
    if (vertex_count < 3) throw Error(fail, "a triangulation needs at least 3 vertices");
    if (static_cast<int>(triangles.size()) != 2 * (vertex_count - 2)) {
        throw Error(fail, "expected t = 2(v-2) = " + std::to_string(2 * (vertex_count - 2)) +
                              " triangles, got " + std::to_string(triangles.size()));
    }
    Triangulation tri(vertex_count, std::move(triangles), std::move(twins), fail);
    for (HalfEdgeId h = 0; h < tri.half_edge_count(); ++h) {
        if (tri.is_boundary(h)) {
            throw Error(fail, "edge (" + std::to_string(tri.tail(h)) + "," +
                                  std::to_string(tri.head(h)) + ") borders only one triangle");
        }
    }
    for (VertexId u = 0; u < vertex_count; ++u) {
        if (tri.triangle_degree(u) == 0) {
            throw Error(fail, "vertex " + std::to_string(u) + " is not used by any triangle");
        }
    }
    tri.require_manifold(fail);
    return tri;
}

Triangulation Triangulation::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count()) {
        throw Error(ErrorCode::BadParams, "label count does not match vertex count");
    }
    Triangulation copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

std::string Triangulation::label(VertexId u) const {
    if (u >= 0 && static_cast<std::size_t>(u) < labels_.size()) return labels_[static_cast<std::size_t>(u)];
    return std::to_string(u);
}

bool Triangulation::is_face(EdgeId a, EdgeId b, EdgeId c) const {
    const auto want = sorted_edges(a, b, c);
    for (TriangleId t = 0; t < triangle_count(); ++t) {
        if (sorted_edges(edge_of(3 * t), edge_of(3 * t + 1), edge_of(3 * t + 2)) == want) return true;
    }
    return false;
}

Triangulation build_triangulation(std::span<const Triple> triples) {
    VertexId max_id = -1;
    for (const Triple& t : triples) {
        for (VertexId x : t) max_id = std::max(max_id, x);
    }
    return build_triangulation(max_id + 1, triples);
}

Triangulation build_triangulation(int vertex_count, std::span<const Triple> triples) {
    constexpr ErrorCode fail = ErrorCode::NotATriangulation;
    if (triples.empty()) throw Error(fail, "no triangles given");
    std::vector<char> used(static_cast<std::size_t>(std::max(vertex_count, 0)), 0);
    for (std::size_t t = 0; t < triples.size(); ++t) {
        for (VertexId x : triples[t]) {
            if (x < 0 || x >= vertex_count) {
                throw Error(fail, "vertex id " + std::to_string(x) + " outside [0," +
                                      std::to_string(vertex_count) + ")");
            }
            used[static_cast<std::size_t>(x)] = 1;
        }
        const Triple& tr = triples[t];
        if (tr[0] == tr[1] || tr[1] == tr[2] || tr[0] == tr[2]) {
            throw Error(fail, "triple " + std::to_string(t) + " repeats a vertex");
        }
    }
    for (VertexId u = 0; u < vertex_count; ++u) {
        if (!used[static_cast<std::size_t>(u)]) {
            throw Error(fail, "vertex ids are not dense: " + std::to_string(u) + " is unused");
        }
    }
    if (vertex_count < 3 || static_cast<int>(triples.size()) != 2 * (vertex_count - 2)) {
        throw Error(fail, "expected t = 2(v-2) triangles for v = " + std::to_string(vertex_count) +
                              ", got " + std::to_string(triples.size()));
    }

    std::map<std::pair<VertexId, VertexId>, std::vector<HalfEdgeId>> groups;
    for (std::size_t t = 0; t < triples.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const VertexId a = triples[t][static_cast<std::size_t>(k)];
            const VertexId b = triples[t][static_cast<std::size_t>((k + 1) % 3)];
            groups[{std::min(a, b), std::max(a, b)}].push_back(
                static_cast<HalfEdgeId>(3 * t + static_cast<std::size_t>(k)));
        }
    }

    std::vector<HalfEdgeId> raw_twins(3 * triples.size(), kNone);
    std::vector<std::vector<Matching>> choices;
    std::size_t combinations = 1;
    for (auto& [key, hs] : groups) {
        if (hs.size() % 2 != 0) {
            throw Error(fail, "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                  ") borders an odd number of triangles");
        }
        if (hs.size() == 2) {
            raw_twins[static_cast<std::size_t>(hs[0])] = hs[1];
            raw_twins[static_cast<std::size_t>(hs[1])] = hs[0];
            continue;
        }
        std::vector<Matching> ms;
        Matching cur;
        enumerate_matchings(hs, cur, ms);
        combinations *= ms.size();
        if (combinations > kMaxPairingCombinations) {
            throw Error(fail, "too many ways to pair the multi-edge occurrences");
        }
        choices.push_back(std::move(ms));
    }

    std::vector<std::size_t> pick(choices.size(), 0);
    bool saw_orientation_failure = false;
    std::string last_why;
    for (std::size_t n = 0; n < combinations; ++n) {
        for (std::size_t g = 0; g < choices.size(); ++g) {
            for (const auto& [a, b] : choices[g][pick[g]]) {
                raw_twins[static_cast<std::size_t>(a)] = b;
                raw_twins[static_cast<std::size_t>(b)] = a;
            }
        }
        std::optional<Triangulation> built;
        switch (try_pairing(vertex_count, triples, raw_twins, built, last_why)) {
            case Attempt::Ok: return std::move(*built);
            case Attempt::BadOrientation: saw_orientation_failure = true; break;
            case Attempt::BadSurface: break;
        }
        for (std::size_t g = 0; g < choices.size(); ++g) {
            if (++pick[g] < choices[g].size()) break;
            pick[g] = 0;
        }
    }
    if (saw_orientation_failure && combinations == 1) {
        throw Error(ErrorCode::InconsistentOrientation, last_why);
    }
    throw Error(saw_orientation_failure ? ErrorCode::InconsistentOrientation : fail, last_why);
}

int triangle_degree(const TriangleMesh& mesh, VertexId u) { return mesh.triangle_degree(u); }

std::vector<SeparatingTriangle> find_separating_triangles(const Triangulation& tri) {
    std::set<std::array<EdgeId, 3>> faces;
    for (TriangleId t = 0; t < tri.triangle_count(); ++t) {
        faces.insert(sorted_edges(tri.edge_of(3 * t), tri.edge_of(3 * t + 1), tri.edge_of(3 * t + 2)));
    }
    std::vector<SeparatingTriangle> out;
    for (VertexId a = 0; a < tri.vertex_count(); ++a) {
        const auto na = tri.neighbors(a);
        for (VertexId b : na) {
            if (b <= a) continue;
            for (VertexId c : tri.neighbors(b)) {
                if (c <= b || !std::binary_search(na.begin(), na.end(), c)) continue;
                for (EdgeId ab : tri.edges_between(a, b)) {
                    for (EdgeId bc : tri.edges_between(b, c)) {
                        for (EdgeId ca : tri.edges_between(c, a)) {
                            if (!faces.count(sorted_edges(ab, bc, ca))) {
                                out.push_back(SeparatingTriangle{{a, b, c}, {ab, bc, ca}});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

SeparatingSplit split_off_separating_triangle(const Triangulation& tri, std::array<VertexId, 3> s) {
    SeparatingTriangle st{s, {}};
    for (int i = 0; i < 3; ++i) {
        const auto es = tri.edges_between(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>((i + 1) % 3)]);
        if (es.size() != 1) {
            throw Error(ErrorCode::NotSeparating,
                        es.empty() ? "the three vertices do not form a cycle"
                                   : "vertex triple is ambiguous on a multi-edge; pass edges");
        }
        st.edges[static_cast<std::size_t>(i)] = es.front();
    }
    return split_off_separating_triangle(tri, st);
}

SeparatingSplit split_off_separating_triangle(const Triangulation& tri, const SeparatingTriangle& s) {
    for (int i = 0; i < 3; ++i) {
        const EdgeRecord& e = tri.edge(s.edges[static_cast<std::size_t>(i)]);
        const VertexId a = s.vertices[static_cast<std::size_t>(i)];
        const VertexId b = s.vertices[static_cast<std::size_t>((i + 1) % 3)];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
            throw Error(ErrorCode::NotSeparating, "edges do not join the triangle's vertices");
        }
    }
    if (tri.is_face(s.edges[0], s.edges[1], s.edges[2])) {
        throw Error(ErrorCode::NotSeparating, "the triangle is a face");
    }
    auto is_cut = [&](EdgeId e) { return e == s.edges[0] || e == s.edges[1] || e == s.edges[2]; };

    const auto t_count = static_cast<std::size_t>(tri.triangle_count());
    std::vector<int> side(t_count, 1);
    side[0] = 0;
    std::vector<TriangleId> stack{0};
    std::size_t reached = 1;
    while (!stack.empty()) {
        const TriangleId t = stack.back();
        stack.pop_back();
        for (int k = 0; k < 3; ++k) {
            const HalfEdgeId h = 3 * t + k;
            if (is_cut(tri.edge_of(h))) continue;
            const TriangleId n = TriangleMesh::triangle_of(tri.twin(h));
            if (side[static_cast<std::size_t>(n)] != 0) {
                side[static_cast<std::size_t>(n)] = 0;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    if (reached == t_count) throw Error(ErrorCode::NotSeparating, "the cycle does not separate");

    VertexId witness = kNone;
    for (VertexId u = 0; u < tri.vertex_count(); ++u) {
        if (u != s.vertices[0] && u != s.vertices[1] && u != s.vertices[2]) {
            witness = u;
            break;
        }
    }
    const int parent_side = side[static_cast<std::size_t>(TriangleMesh::triangle_of(tri.corners(witness).front()))];

    auto build_part = [&](int which, std::vector<VertexId>& vertices, std::vector<TriangleId>& sources) {
        std::vector<TriangleId> members;
        for (std::size_t t = 0; t < t_count; ++t) {
            if (side[t] == which) members.push_back(static_cast<TriangleId>(t));
        }
        std::vector<VertexId> relabel(static_cast<std::size_t>(tri.vertex_count()), kNone);
        for (TriangleId t : members) {
            for (VertexId x : tri.triangle(t)) relabel[static_cast<std::size_t>(x)] = 0;
        }
        vertices.clear();
        for (VertexId u = 0; u < tri.vertex_count(); ++u) {
            if (relabel[static_cast<std::size_t>(u)] == 0) {
                relabel[static_cast<std::size_t>(u)] = static_cast<VertexId>(vertices.size());
                vertices.push_back(u);
            }
        }
        std::vector<int> local(t_count, kNone);
        for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

        std::vector<Triple> tris;
        std::vector<HalfEdgeId> twins(3 * (members.size() + 1), kNone);
        std::vector<HalfEdgeId> cut_halves;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const TriangleId t = members[i];
            Triple out;
            for (int k = 0; k < 3; ++k) {
                out[static_cast<std::size_t>(k)] = relabel[static_cast<std::size_t>(tri.triangle(t)[static_cast<std::size_t>(k)])];
                const HalfEdgeId h = 3 * t + k;
                const HalfEdgeId g = tri.twin(h);
                const int n = local[static_cast<std::size_t>(TriangleMesh::triangle_of(g))];
                if (n != kNone && !is_cut(tri.edge_of(h))) {
                    twins[3 * i + static_cast<std::size_t>(k)] = 3 * n + TriangleMesh::slot_of(g);
                } else {
                    cut_halves.push_back(static_cast<HalfEdgeId>(3 * i + static_cast<std::size_t>(k)));
                }
            }
            tris.push_back(out);
        }
        if (cut_halves.size() != 3) throw Error(ErrorCode::NotSeparating, "cut is not a simple 3-cycle");
        auto tail_of = [&](HalfEdgeId h) { return tris[static_cast<std::size_t>(h / 3)][static_cast<std::size_t>(h % 3)]; };
        auto head_of = [&](HalfEdgeId h) { return tris[static_cast<std::size_t>(h / 3)][static_cast<std::size_t>((h % 3 + 1) % 3)]; };
        const HalfEdgeId h1 = cut_halves[0];
        const VertexId w1 = head_of(h1);
        const VertexId u1 = tail_of(h1);
        HalfEdgeId into_u1 = kNone;
        HalfEdgeId from_w1 = kNone;
        for (HalfEdgeId h : cut_halves) {
            if (head_of(h) == u1) into_u1 = h;
            if (tail_of(h) == w1) from_w1 = h;
        }
        if (into_u1 == kNone || from_w1 == kNone) throw Error(ErrorCode::NotSeparating, "cut is not a cycle");
        const VertexId x = tail_of(into_u1);
        const auto cap = static_cast<HalfEdgeId>(3 * members.size());
        tris.push_back(Triple{w1, u1, x});
        auto link = [&](HalfEdgeId a, HalfEdgeId b) {
            twins[static_cast<std::size_t>(a)] = b;
            twins[static_cast<std::size_t>(b)] = a;
        };
        link(cap, h1);
        link(cap + 1, into_u1);
        link(cap + 2, from_w1);
        sources = members;
        sources.push_back(kNone);
        return Triangulation::from_mesh(static_cast<int>(vertices.size()), std::move(tris), std::move(twins));
    };

    std::vector<VertexId> pv, cv;
    std::vector<TriangleId> ps, cs;
    Triangulation parent = build_part(parent_side, pv, ps);
    Triangulation child = build_part(1 - parent_side, cv, cs);
    return SeparatingSplit{std::move(parent), std::move(child), std::move(pv), std::move(cv),
                           std::move(ps), std::move(cs)};
}

std::vector<Triple> sorted_triples(const TriangleMesh& mesh) {
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(mesh.triangle_count()));
    for (const Triple& t : mesh.triangles()) out.push_back(rotate_min_first(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triple> canonical_form(const Triangulation& tri) {
    const auto v = static_cast<std::size_t>(tri.vertex_count());
    const auto t_count = static_cast<std::size_t>(tri.triangle_count());
    std::vector<Triple> best;
    std::vector<VertexId> label(v);
    std::vector<char> visited(t_count);
    std::vector<HalfEdgeId> queue;
    std::vector<Triple> candidate(t_count);
    for (HalfEdgeId root = 0; root < tri.half_edge_count(); ++root) {
        std::fill(label.begin(), label.end(), kNone);
        std::fill(visited.begin(), visited.end(), 0);
        queue.assign(1, root);
        visited[static_cast<std::size_t>(TriangleMesh::triangle_of(root))] = 1;
        VertexId next_label = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const HalfEdgeId entry = queue[qi];
            const HalfEdgeId around[3] = {entry, TriangleMesh::next(entry), TriangleMesh::prev(entry)};
            for (HalfEdgeId h : around) {
                auto& l = label[static_cast<std::size_t>(tri.tail(h))];
                if (l == kNone) l = next_label++;
            }
            for (HalfEdgeId h : around) {
                const HalfEdgeId g = tri.twin(h);
                const auto n = static_cast<std::size_t>(TriangleMesh::triangle_of(g));
                if (!visited[n]) {
                    visited[n] = 1;
                    queue.push_back(g);
                }
            }
        }
        for (std::size_t t = 0; t < t_count; ++t) {
            const Triple& src = tri.triangle(static_cast<TriangleId>(t));
            candidate[t] = rotate_min_first({label[static_cast<std::size_t>(src[0])],
                                             label[static_cast<std::size_t>(src[1])],
                                             label[static_cast<std::size_t>(src[2])]});
        }
        std::sort(candidate.begin(), candidate.end());
        if (best.empty() || candidate < best) best = candidate;
    }
    return best;
}

}  // namespace heawood
