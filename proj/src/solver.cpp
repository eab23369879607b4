#include "heawood/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace heawood {

namespace {

std::vector<char> frozen_mask(const TriangleMesh& mesh, std::span<const VertexId> frozen) {
    std::vector<char> mask(static_cast<std::size_t>(mesh.vertex_count()), 0);
    for (VertexId u : frozen) {
        if (u < 0 || u >= mesh.vertex_count()) throw Error(ErrorCode::UnknownVertex, "frozen vertex out of range");
        mask[static_cast<std::size_t>(u)] = 1;
    }
    return mask;
}

bool good_outside(const TriangleMesh& mesh, const OrientationAssignment& a, const std::vector<char>& frozen) {
    const VertexNumbering n = cv3_from_ct2(mesh, a);
    for (std::size_t u = 0; u < n.values.size(); ++u) {
        if (!frozen[u] && n.values[u] != 0) return false;
    }
    return true;
}

// Two-colouring of the triangle adjacency graph, if it is bipartite.
std::optional<OrientationAssignment> alternating(const TriangleMesh& mesh) {
    const auto t = static_cast<std::size_t>(mesh.triangle_count());
    OrientationAssignment a;
    a.values.assign(t, 0);
    for (std::size_t s = 0; s < t; ++s) {
        if (a.values[s]) continue;
        a.values[s] = 1;
        std::deque<TriangleId> queue{static_cast<TriangleId>(s)};
        while (!queue.empty()) {
            const TriangleId x = queue.front();
            queue.pop_front();
            for (int k = 0; k < 3; ++k) {
                const HalfEdgeId g = mesh.twin(3 * x + k);
                if (g == kNone) continue;
                auto& other = a.values[static_cast<std::size_t>(TriangleMesh::triangle_of(g))];
                const std::uint8_t want = static_cast<std::uint8_t>(3 - a.values[static_cast<std::size_t>(x)]);
                if (other == 0) {
                    other = want;
                    queue.push_back(TriangleMesh::triangle_of(g));
                } else if (other != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return a;
}

std::optional<OrientationAssignment> gray_search(const TriangleMesh& mesh, const std::vector<char>& frozen) {
    const int t = mesh.triangle_count();
    std::vector<int> sum(static_cast<std::size_t>(mesh.vertex_count()), 0);
    int bad = 0;
    for (VertexId u = 0; u < mesh.vertex_count(); ++u) {
        sum[static_cast<std::size_t>(u)] = mesh.triangle_degree(u) % 3;
        if (!frozen[static_cast<std::size_t>(u)] && sum[static_cast<std::size_t>(u)] != 0) ++bad;
    }
    std::vector<std::uint8_t> values(static_cast<std::size_t>(t), 1);
    const std::uint64_t total = std::uint64_t{1} << t;
    for (std::uint64_t i = 1; bad != 0 && i < total; ++i) {
        const int b = std::countr_zero(i);
        auto& val = values[static_cast<std::size_t>(b)];
        val = static_cast<std::uint8_t>(3 - val);
        const int delta = val == 2 ? 1 : 2;
        for (VertexId x : mesh.triangle(b)) {
            int& s = sum[static_cast<std::size_t>(x)];
            const int before = s;
            s = (s + delta) % 3;
            if (frozen[static_cast<std::size_t>(x)]) continue;
            if (before == 0) ++bad;
            if (s == 0) --bad;
        }
    }
    if (bad != 0) return std::nullopt;
    return OrientationAssignment{std::move(values)};
}

// Depth-first search over triangle values. The vertex with the fewest open
// triangles is expanded first; a vertex with one open triangle forces it.
class PropagatingSearch {
public:
    PropagatingSearch(const TriangleMesh& mesh, const std::vector<char>& frozen)
        : mesh_(mesh), frozen_(frozen), values_(static_cast<std::size_t>(mesh.triangle_count()), 0),
          open_(static_cast<std::size_t>(mesh.vertex_count())), sum_(static_cast<std::size_t>(mesh.vertex_count()), 0) {
        for (VertexId u = 0; u < mesh.vertex_count(); ++u) open_[static_cast<std::size_t>(u)] = mesh.triangle_degree(u);
    }

    std::optional<OrientationAssignment> run() {
        if (!dfs()) return std::nullopt;
        for (auto& v : values_) {
            if (v == 0) v = 1;
        }
        return OrientationAssignment{values_};
    }

private:
    bool set(TriangleId t, std::uint8_t v) {
        values_[static_cast<std::size_t>(t)] = v;
        bool ok = true;
        for (VertexId x : mesh_.triangle(t)) {
            auto& s = sum_[static_cast<std::size_t>(x)];
            s = (s + v) % 3;
            if (--open_[static_cast<std::size_t>(x)] == 0 && !frozen_[static_cast<std::size_t>(x)] && s != 0) ok = false;
        }
        return ok;
    }

    void unset(TriangleId t) {
        const std::uint8_t v = values_[static_cast<std::size_t>(t)];
        values_[static_cast<std::size_t>(t)] = 0;
        for (VertexId x : mesh_.triangle(t)) {
            auto& s = sum_[static_cast<std::size_t>(x)];
            s = (s + 3 - v) % 3;
            ++open_[static_cast<std::size_t>(x)];
        }
    }

    TriangleId open_triangle(VertexId u) const {
        for (HalfEdgeId h : mesh_.corners(u)) {
            const TriangleId t = TriangleMesh::triangle_of(h);
            if (values_[static_cast<std::size_t>(t)] == 0) return t;
        }
        return kNone;
    }

    bool dfs() {
        VertexId pick = kNone;
        for (VertexId u = 0; u < mesh_.vertex_count(); ++u) {
            const int o = open_[static_cast<std::size_t>(u)];
            if (frozen_[static_cast<std::size_t>(u)] || o == 0) continue;
            if (pick == kNone || o < open_[static_cast<std::size_t>(pick)]) pick = u;
        }
        if (pick == kNone) return true;
        const TriangleId t = open_triangle(pick);
        if (open_[static_cast<std::size_t>(pick)] == 1) {
            const int need = (3 - sum_[static_cast<std::size_t>(pick)]) % 3;
            if (need == 0) return false;
            const bool ok = set(t, static_cast<std::uint8_t>(need)) && dfs();
            if (!ok) unset(t);
            return ok;
        }
        for (std::uint8_t v : {std::uint8_t{1}, std::uint8_t{2}}) {
            if (set(t, v) && dfs()) return true;
            unset(t);
        }
        return false;
    }

    const TriangleMesh& mesh_;
    const std::vector<char>& frozen_;
    std::vector<std::uint8_t> values_;
    std::vector<int> open_;
    std::vector<int> sum_;
};

VertexColoring leaf_coloring(const Triangulation& tri, const OrientationAssignment& a, EdgeId seed_edge,
                             std::uint8_t seed_color) {
    const EdgeColoring ec = ct2_to_e3c(tri, a, seed_edge, seed_color);
    return e3c_to_v4c(tri, ec, 0, vcolor::C);
}

std::array<std::uint8_t, 4> aligning_permutation(const std::array<std::uint8_t, 3>& from,
                                                 const std::array<std::uint8_t, 3>& to) {
    std::array<std::uint8_t, 4> perm{0, 1, 2, 3};
    do {
        if (perm[from[0]] == to[0] && perm[from[1]] == to[1] && perm[from[2]] == to[2]) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error(ErrorCode::Inconsistent, "shared triangle is not rainbow in both parts");
}

struct PartIndex {
    std::vector<int> parent;
    std::vector<int> child;
};

PartIndex part_index(const Triangulation& tri, const SeparatingSplit& split) {
    PartIndex idx{std::vector<int>(static_cast<std::size_t>(tri.vertex_count()), kNone),
                  std::vector<int>(static_cast<std::size_t>(tri.vertex_count()), kNone)};
    for (std::size_t i = 0; i < split.parent_vertices.size(); ++i) {
        idx.parent[static_cast<std::size_t>(split.parent_vertices[i])] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < split.child_vertices.size(); ++i) {
        idx.child[static_cast<std::size_t>(split.child_vertices[i])] = static_cast<int>(i);
    }
    return idx;
}

// Child colours are permuted to agree with the parent on the shared triangle.
std::array<std::uint8_t, 4> alignment(const PartIndex& idx, const SeparatingTriangle& s, const VertexColoring& parent,
                                      const VertexColoring& child) {
    std::array<std::uint8_t, 3> from{};
    std::array<std::uint8_t, 3> to{};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto u = static_cast<std::size_t>(s.vertices[k]);
        from[k] = child.colors[static_cast<std::size_t>(idx.child[u])];
        to[k] = parent.colors[static_cast<std::size_t>(idx.parent[u])];
    }
    return aligning_permutation(from, to);
}

VertexColoring merge(const Triangulation& tri, const PartIndex& idx, const VertexColoring& parent,
                     const VertexColoring& child, const std::array<std::uint8_t, 4>& perm) {
    VertexColoring out;
    out.colors.resize(static_cast<std::size_t>(tri.vertex_count()));
    for (VertexId u = 0; u < tri.vertex_count(); ++u) {
        const auto i = static_cast<std::size_t>(u);
        out.colors[i] = idx.parent[i] != kNone ? parent.colors[static_cast<std::size_t>(idx.parent[i])]
                                               : perm[child.colors[static_cast<std::size_t>(idx.child[i])]];
    }
    return out;
}

SolveTrace solve(const Triangulation& tri, const SolveOptions& options, bool top) {
    SolveTrace trace;
    const auto separating = find_separating_triangles(tri);
    if (!separating.empty()) {
        const SeparatingTriangle& s = separating.front();
        const SeparatingSplit split = split_off_separating_triangle(tri, s);
        SolveOptions inner = options;
        inner.base.reset();
        inner.circuit.reset();
        trace.separating = s;
        trace.parts.push_back(solve(split.parent, inner, false));
        trace.parts.push_back(solve(split.child, inner, false));
        const PartIndex idx = part_index(tri, split);
        trace.child_permutation = alignment(idx, s, trace.parts[0].coloring, trace.parts[1].coloring);
        trace.coloring = merge(tri, idx, trace.parts[0].coloring, trace.parts[1].coloring, trace.child_permutation);
        return trace;
    }

    auto circuit = top && options.circuit ? options.circuit : find_hamilton_circuit(tri);
    if (!circuit) throw Error(ErrorCode::NoHamiltonCircuit, "no Hamilton circuit without separating triangles");
    const HamiltonSplit split = split_by_circuit(tri, *circuit, top ? options.base : std::nullopt);
    const DegenerateReconstruction d = reconstruct_degenerate(split);
    trace.circuit = split.circuit;
    trace.base = split.base;
    trace.ears = d.steps;

    const std::array<VertexId, 2> frozen{split.base.first, split.base.second};
    auto found = search_good_ct2(d.polygon, frozen, options.search);
    if (!found) {
        throw Error(ErrorCode::PipelineCounterexample,
                    "no assignment zeroes the inner vertices of the degenerate polygon", *circuit);
    }
    trace.degenerate_assignment = *found;

    // The doubled base: one edge seeded red, the other must come out red too.
    const HalfEdgeId base_half = d.polygon.boundary_half_edge(1);
    const HalfEdgeId other_half = d.polygon.boundary_half_edge(0);
    const EdgeColoring dec = ct2_to_e3c(d.polygon, *found, d.polygon.edge_of(base_half), ecolor::r);
    trace.closure_color = dec.colors[static_cast<std::size_t>(d.polygon.edge_of(other_half))];
    if (trace.closure_color != ecolor::r) {
        throw Error(ErrorCode::PipelineCounterexample, "second perimeter edge is not red", *circuit);
    }

    trace.assignment.values.assign(static_cast<std::size_t>(tri.triangle_count()), 0);
    for (std::size_t k = 0; k < d.source.size(); ++k) {
        trace.assignment.values[static_cast<std::size_t>(d.source[k])] =
            static_cast<std::uint8_t>(3 - found->values[k]);
    }
    trace.seed_edge = tri.edges_between(split.base.first, split.base.second).front();
    trace.seed_color = ecolor::r;
    trace.coloring = leaf_coloring(tri, trace.assignment, trace.seed_edge, trace.seed_color);
    return trace;
}

}  // namespace

std::optional<OrientationAssignment> search_good_ct2(const TriangleMesh& mesh, std::span<const VertexId> frozen,
                                                     const SearchOptions& options) {
    const std::vector<char> fz = frozen_mask(mesh, frozen);
    if (mesh.triangle_count() == 0) return OrientationAssignment{};
    const OrientationAssignment uniform = uniform_assignment(mesh, 1);
    if (good_outside(mesh, uniform, fz)) return uniform;
    if (auto alt = alternating(mesh); alt && good_outside(mesh, *alt, fz)) return alt;
    if (mesh.triangle_count() <= std::min(options.exhaustive_limit, 40)) return gray_search(mesh, fz);
    return PropagatingSearch(mesh, fz).run();
}

SolveResult four_color(const Triangulation& tri, const SolveOptions& options) {
    SolveTrace trace = solve(tri, options, true);
    VertexColoring coloring = trace.coloring;
    return {std::move(coloring), std::move(trace)};
}

VertexColoring replay(const Triangulation& tri, const SolveTrace& trace) {
    if (trace.separating) {
        if (trace.parts.size() != 2) throw Error(ErrorCode::BadParams, "split node needs two parts");
        const SeparatingSplit split = split_off_separating_triangle(tri, *trace.separating);
        const PartIndex idx = part_index(tri, split);
        return merge(tri, idx, replay(split.parent, trace.parts[0]), replay(split.child, trace.parts[1]),
                     trace.child_permutation);
    }
    return leaf_coloring(tri, trace.assignment, trace.seed_edge, trace.seed_color);
}

VertexColoring four_color_oracle(const Triangulation& tri, int palette, int max_vertices) {
    const int n = tri.vertex_count();
    if (n > max_vertices) {
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceed the oracle bound of " +
                                             std::to_string(max_vertices));
    }
    if (palette < 1 || palette > 4) throw Error(ErrorCode::BadParams, "palette must have 1 to 4 colours");
    std::vector<std::vector<VertexId>> lower(static_cast<std::size_t>(n));
    for (const EdgeRecord& e : tri.edges()) {
        const VertexId a = std::min(e.u, e.v);
        const VertexId b = std::max(e.u, e.v);
        lower[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int u = 0;
    while (u >= 0 && u < n) {
        auto& c = color[static_cast<std::size_t>(u)];
        bool placed = false;
        while (++c < palette) {
            const bool clash = std::any_of(lower[static_cast<std::size_t>(u)].begin(), lower[static_cast<std::size_t>(u)].end(),
                                           [&](VertexId w) { return color[static_cast<std::size_t>(w)] == c; });
            if (!clash) {
                placed = true;
                break;
            }
        }
        if (placed) {
            ++u;
        } else {
            c = -1;
            --u;
        }
    }
    if (u < 0) throw Error(ErrorCode::Uncolorable, "no colouring with " + std::to_string(palette) + " colours");
    VertexColoring out;
    for (int c : color) out.colors.push_back(static_cast<std::uint8_t>(c));
    return out;
}

int colors_used(const VertexColoring& c) {
    unsigned seen = 0;
    for (auto x : c.colors) seen |= 1u << x;
    return std::popcount(seen);
}

}  // namespace heawood
