#include "heawood/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace heawood {

namespace {

using Mask = std::uint64_t;

Mask bit(VertexId u) { return Mask{1} << u; }

class CircuitSearch {
public:
    CircuitSearch(const Triangulation& tri, VertexId start, VertexId second,
                  const std::function<bool(const Circuit&)>& visit)
        : n_(tri.vertex_count()), start_(start), second_(second), visit_(visit), adj_(static_cast<std::size_t>(n_), 0) {
        if (n_ > 64) throw Error(ErrorCode::TooLarge, "Hamilton search supports at most 64 vertices");
        for (const EdgeRecord& e : tri.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
            adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
        }
    }

    std::uint64_t run() {
        path_ = {start_};
        unvisited_ = (n_ == 64 ? ~Mask{0} : (bit(n_) - 1)) & ~bit(start_);
        extend();
        return found_;
    }

private:
    int available(VertexId u, VertexId cur) const {
        return std::popcount(adj_[static_cast<std::size_t>(u)] & (unvisited_ | bit(cur) | bit(start_)));
    }

    // False when the search must stop.
    bool extend() {
        const VertexId cur = path_.back();
        if (unvisited_ == 0) {
            if (!(adj_[static_cast<std::size_t>(cur)] & bit(start_)) || n_ < 3) return true;
            if (second_ == kNone && path_[1] > path_.back()) return true;
            ++found_;
            return visit_(path_);
        }
        for (Mask m = unvisited_; m; m &= m - 1) {
            if (available(static_cast<VertexId>(std::countr_zero(m)), cur) < 2) return true;
        }
        Mask candidates = adj_[static_cast<std::size_t>(cur)] & unvisited_;
        if (path_.size() == 1 && second_ != kNone) candidates &= bit(second_);
        if (path_.size() >= 2) {
            // A neighbour with only two usable edges must be entered from here.
            Mask forced = 0;
            for (Mask m = candidates; m; m &= m - 1) {
                const auto w = static_cast<VertexId>(std::countr_zero(m));
                if (available(w, cur) == 2) forced |= bit(w);
            }
            if (std::popcount(forced) > 1) return true;
            if (forced) candidates = forced;
        }
        for (Mask m = candidates; m; m &= m - 1) {
            const auto w = static_cast<VertexId>(std::countr_zero(m));
            path_.push_back(w);
            unvisited_ &= ~bit(w);
            const bool go_on = extend();
            unvisited_ |= bit(w);
            path_.pop_back();
            if (!go_on) return false;
        }
        return true;
    }

    int n_;
    VertexId start_;
    VertexId second_;
    const std::function<bool(const Circuit&)>& visit_;
    std::vector<Mask> adj_;
    Circuit path_;
    Mask unvisited_ = 0;
    std::uint64_t found_ = 0;
};

}  // namespace

std::optional<Circuit> find_hamilton_circuit(const Triangulation& tri, std::optional<VertexPair> through) {
    std::optional<Circuit> out;
    const std::function<bool(const Circuit&)> keep = [&](const Circuit& c) {
        out = c;
        return false;
    };
    if (through) {
        const auto [a, b] = *through;
        if (a < 0 || b < 0 || a >= tri.vertex_count() || b >= tri.vertex_count()) {
            throw Error(ErrorCode::UnknownVertex, "requested edge has an unknown vertex");
        }
        if (tri.edges_between(a, b).empty()) throw Error(ErrorCode::BadParams, "requested pair is not an edge");
        CircuitSearch(tri, a, b, keep).run();
    } else {
        CircuitSearch(tri, 0, kNone, keep).run();
    }
    return out;
}

std::uint64_t for_each_hamilton_circuit(const Triangulation& tri, const std::function<bool(const Circuit&)>& visit) {
    return CircuitSearch(tri, 0, kNone, visit).run();
}

bool is_hamilton_circuit(const Triangulation& tri, const Circuit& circuit) {
    const int n = tri.vertex_count();
    if (static_cast<int>(circuit.size()) != n || n < 3) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (VertexId u : circuit) {
        if (u < 0 || u >= n || seen[static_cast<std::size_t>(u)]) return false;
        seen[static_cast<std::size_t>(u)] = 1;
    }
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        if (tri.edges_between(circuit[i], circuit[(i + 1) % circuit.size()]).size() != 1) return false;
    }
    return true;
}

VertexPair default_base(const Circuit& circuit) {
    VertexPair best{-1, -1};
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const VertexId a = circuit[i];
        const VertexId b = circuit[(i + 1) % circuit.size()];
        const VertexPair e{std::min(a, b), std::max(a, b)};
        if (best.first < 0 || e < best) best = e;
    }
    return best;
}

HamiltonSplit split_by_circuit(const Triangulation& tri, const Circuit& circuit, std::optional<VertexPair> base) {
    if (!is_hamilton_circuit(tri, circuit)) throw Error(ErrorCode::NotHamiltonian, "not a Hamilton circuit");
    const VertexPair chosen = base ? *base : default_base(circuit);
    const std::size_t n = circuit.size();
    std::size_t at = n;
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId a = circuit[i];
        const VertexId b = circuit[(i + 1) % n];
        if ((a == chosen.first && b == chosen.second) || (a == chosen.second && b == chosen.first)) at = i;
    }
    if (at == n) {
        throw Error(ErrorCode::EdgeNotOnCircuit, "base " + std::to_string(chosen.first) + "-" +
                                                     std::to_string(chosen.second) + " is not a circuit edge");
    }

    std::vector<char> on_circuit(static_cast<std::size_t>(tri.edge_count()), 0);
    for (std::size_t i = 0; i < n; ++i) {
        on_circuit[static_cast<std::size_t>(tri.edges_between(circuit[i], circuit[(i + 1) % n]).front())] = 1;
    }
    const EdgeId first = tri.edges_between(circuit[0], circuit[1]).front();
    const HalfEdgeId h01 = tri.half_edge_from(first, circuit[0]);

    const auto t_count = static_cast<std::size_t>(tri.triangle_count());
    std::vector<int> side(t_count, 1);
    side[static_cast<std::size_t>(TriangleMesh::triangle_of(h01))] = 0;
    std::deque<TriangleId> queue{TriangleMesh::triangle_of(h01)};
    while (!queue.empty()) {
        const TriangleId t = queue.front();
        queue.pop_front();
        for (int k = 0; k < 3; ++k) {
            const HalfEdgeId h = 3 * t + k;
            if (on_circuit[static_cast<std::size_t>(tri.edge_of(h))]) continue;
            const TriangleId u = TriangleMesh::triangle_of(tri.twin(h));
            if (side[static_cast<std::size_t>(u)] == 0) continue;
            side[static_cast<std::size_t>(u)] = 0;
            queue.push_back(u);
        }
    }

    HamiltonSplit split;
    std::vector<int> local(t_count, kNone);
    for (std::size_t t = 0; t < t_count; ++t) {
        auto& src = side[t] == 0 ? split.inner_source : split.outer_source;
        local[t] = static_cast<int>(src.size());
        src.push_back(static_cast<TriangleId>(t));
    }
    // Reversing (a,b,c) to (a,c,b) sends slot k to slot 2-k.
    auto map_half = [&](HalfEdgeId h) {
        const TriangleId t = TriangleMesh::triangle_of(h);
        const int k = TriangleMesh::slot_of(h);
        const int slot = side[static_cast<std::size_t>(t)] == 0 ? k : 2 - k;
        return 3 * local[static_cast<std::size_t>(t)] + slot;
    };
    auto build_side = [&](int s) {
        const auto& src = s == 0 ? split.inner_source : split.outer_source;
        std::vector<Triple> tris;
        std::vector<HalfEdgeId> twins(3 * src.size(), kNone);
        for (TriangleId t : src) {
            const Triple& x = tri.triangle(t);
            tris.push_back(s == 0 ? x : Triple{x[0], x[2], x[1]});
            for (int k = 0; k < 3; ++k) {
                const HalfEdgeId h = 3 * t + k;
                const HalfEdgeId g = tri.twin(h);
                if (on_circuit[static_cast<std::size_t>(tri.edge_of(h))]) continue;
                twins[static_cast<std::size_t>(map_half(h))] = map_half(g);
            }
        }
        return std::pair{std::move(tris), std::move(twins)};
    };

    split.circuit = circuit;
    std::rotate(split.circuit.begin(), split.circuit.begin() + static_cast<std::ptrdiff_t>((at + 1) % n),
                split.circuit.end());
    split.base = {split.circuit.back(), split.circuit.front()};
    auto [inner_tris, inner_twins] = build_side(0);
    auto [outer_tris, outer_twins] = build_side(1);
    split.inner = PolygonTriangulation::from_mesh(tri.vertex_count(), split.circuit, std::move(inner_tris),
                                                  std::move(inner_twins));
    split.outer = PolygonTriangulation::from_mesh(tri.vertex_count(), split.circuit, std::move(outer_tris),
                                                  std::move(outer_twins));
    return split;
}

std::vector<ReconstructionStep> reconstruction_order(const PolygonTriangulation& inner) {
    const VertexTriangleAssociation assoc = associate(inner);
    std::vector<ReconstructionStep> steps;
    for (TriangleId t : assoc.order) steps.push_back({t, assoc.triangle_vertex[static_cast<std::size_t>(t)]});
    return steps;
}

DegenerateReconstruction reconstruct_degenerate(const HamiltonSplit& split) {
    DegenerateReconstruction out{split.outer, split.outer_source, reconstruction_order(split.inner)};
    for (const ReconstructionStep& step : out.steps) {
        out.polygon = add_ear(out.polygon, step.tip);
        out.source.push_back(split.inner_source[static_cast<std::size_t>(step.triangle)]);
    }
    return out;
}

}  // namespace heawood
