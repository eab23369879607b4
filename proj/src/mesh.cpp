#include "heawood/mesh.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace heawood {

namespace {

std::string edge_text(VertexId a, VertexId b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotATriangulation: return "NotATriangulation";
        case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
        case ErrorCode::InvalidPolygon: return "InvalidPolygon";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotSeparating: return "NotSeparating";
        case ErrorCode::PerimeterMismatch: return "PerimeterMismatch";
        case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
        case ErrorCode::ImproperInput: return "ImproperInput";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NotGood: return "NotGood";
        case ErrorCode::NoPreimage: return "NoPreimage";
        case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::TipOnBase: return "TipOnBase";
        case ErrorCode::NotOnPerimeter: return "NotOnPerimeter";
        case ErrorCode::NotHamiltonian: return "NotHamiltonian";
        case ErrorCode::EdgeNotOnCircuit: return "EdgeNotOnCircuit";
        case ErrorCode::UnknownStatement: return "UnknownStatement";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::PipelineCounterexample: return "PipelineCounterexample";
        case ErrorCode::NoHamiltonCircuit: return "NoHamiltonCircuit";
        case ErrorCode::Uncolorable: return "Uncolorable";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

Triple rotate_min_first(Triple t) {
    auto it = std::min_element(t.begin(), t.end());
    std::rotate(t.begin(), it, t.end());
    return t;
}

TriangleMesh::TriangleMesh(int vertex_count, std::vector<Triple> triangles,
                           std::vector<HalfEdgeId> twins, ErrorCode failure)
    : vertex_count_(vertex_count), triangles_(std::move(triangles)), twins_(std::move(twins)) {
    const int h_count = 3 * triangle_count();
    if (vertex_count_ < 0) throw Error(failure, "negative vertex count");
    if (static_cast<int>(twins_.size()) != h_count) {
        throw Error(failure, "twin table size does not match triangle count");
    }
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        const Triple& tri = triangles_[t];
        for (VertexId x : tri) {
            if (x < 0 || x >= vertex_count_) {
                throw Error(failure, "triangle " + std::to_string(t) + " uses vertex " +
                                         std::to_string(x) + " outside [0," +
                                         std::to_string(vertex_count_) + ")");
            }
        }
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
            throw Error(failure, "triangle " + std::to_string(t) + " repeats a vertex");
        }
    }
    for (HalfEdgeId h = 0; h < h_count; ++h) {
        const HalfEdgeId g = twin(h);
        if (g == kNone) continue;
        if (g < 0 || g >= h_count || g == h || twin(g) != h) {
            throw Error(failure, "twin table is not a symmetric pairing at half-edge " +
                                     std::to_string(h));
        }
        if (tail(g) != head(h) || head(g) != tail(h)) {
            throw Error(failure, "twin half-edges of " + edge_text(tail(h), head(h)) +
                                     " do not run in opposite directions");
        }
        if (triangle_of(g) == triangle_of(h)) {
            throw Error(failure, "triangle glued to itself along " + edge_text(tail(h), head(h)));
        }
    }

    edge_of_.assign(static_cast<std::size_t>(h_count), kNone);
    for (HalfEdgeId h = 0; h < h_count; ++h) {
        const HalfEdgeId g = twin(h);
        if (g != kNone && g < h) continue;
        const auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(EdgeRecord{tail(h), head(h), h, g});
        edge_of_[static_cast<std::size_t>(h)] = id;
        if (g != kNone) edge_of_[static_cast<std::size_t>(g)] = id;
    }

    corner_offsets_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
    for (const Triple& tri : triangles_) {
        for (VertexId x : tri) ++corner_offsets_[static_cast<std::size_t>(x) + 1];
    }
    for (std::size_t i = 1; i < corner_offsets_.size(); ++i) corner_offsets_[i] += corner_offsets_[i - 1];
    corner_list_.assign(static_cast<std::size_t>(h_count), kNone);
    std::vector<int> fill(corner_offsets_.begin(), corner_offsets_.end() - 1);
    for (HalfEdgeId h = 0; h < h_count; ++h) {
        corner_list_[static_cast<std::size_t>(fill[static_cast<std::size_t>(tail(h))]++)] = h;
    }
}

int TriangleMesh::triangle_degree(VertexId u) const {
    return static_cast<int>(corners(u).size());
}

std::span<const HalfEdgeId> TriangleMesh::corners(VertexId u) const {
    if (u < 0 || u >= vertex_count_) {
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(u) + " is not in the mesh");
    }
    const auto begin = static_cast<std::size_t>(corner_offsets_[static_cast<std::size_t>(u)]);
    const auto end = static_cast<std::size_t>(corner_offsets_[static_cast<std::size_t>(u) + 1]);
    return std::span<const HalfEdgeId>(corner_list_).subspan(begin, end - begin);
}

std::vector<HalfEdgeId> TriangleMesh::rotation(VertexId u) const {
    const auto cs = corners(u);
    std::vector<HalfEdgeId> out;
    if (cs.empty()) return out;
    // A boundary vertex starts at the corner whose outgoing half-edge is on the
    // boundary, so the forward walk covers the whole fan.
    HalfEdgeId start = cs.front();
    for (HalfEdgeId c : cs) {
        if (is_boundary(c)) {
            start = c;
            break;
        }
    }
    HalfEdgeId h = start;
    for (std::size_t guard = 0; guard <= cs.size(); ++guard) {
        out.push_back(h);
        const HalfEdgeId g = twin(prev(h));
        if (g == kNone || g == start) break;
        h = g;
    }
    return out;
}

std::vector<VertexId> TriangleMesh::neighbors(VertexId u) const {
    std::vector<VertexId> out;
    for (HalfEdgeId h : corners(u)) {
        out.push_back(head(h));
        out.push_back(tail(prev(h)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeId> TriangleMesh::edges_between(VertexId u, VertexId w) const {
    std::vector<EdgeId> out;
    for (HalfEdgeId h : corners(u)) {
        if (head(h) == w) out.push_back(edge_of(h));
        const HalfEdgeId p = prev(h);
        if (tail(p) == w) out.push_back(edge_of(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HalfEdgeId TriangleMesh::half_edge_from(EdgeId e, VertexId from) const {
    const EdgeRecord& rec = edge(e);
    if (tail(rec.half) == from) return rec.half;
    if (rec.twin != kNone && tail(rec.twin) == from) return rec.twin;
    return kNone;
}

bool TriangleMesh::has_multi_edges() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges_.size());
    for (const EdgeRecord& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

void TriangleMesh::require_manifold(ErrorCode failure) const {
    if (triangles_.empty()) return;
    std::vector<char> seen(triangles_.size(), 0);
    std::vector<TriangleId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const TriangleId t = stack.back();
        stack.pop_back();
        for (int k = 0; k < 3; ++k) {
            const HalfEdgeId g = twin(3 * t + k);
            if (g == kNone) continue;
            const TriangleId n = triangle_of(g);
            if (!seen[static_cast<std::size_t>(n)]) {
                seen[static_cast<std::size_t>(n)] = 1;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    if (reached != triangles_.size()) throw Error(failure, "triangles do not form a connected surface");
    for (VertexId u = 0; u < vertex_count_; ++u) {
        const auto cs = corners(u);
        if (cs.empty()) continue;
        if (rotation(u).size() != cs.size()) {
            throw Error(failure, "the triangles around vertex " + std::to_string(u) +
                                     " do not form a single fan");
        }
    }
}

std::vector<HalfEdgeId> match_twins(std::span<const Triple> triangles, bool allow_boundary,
                                    ErrorCode failure) {
    std::map<std::pair<VertexId, VertexId>, HalfEdgeId> directed;
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const auto key = std::make_pair(triangles[t][static_cast<std::size_t>(k)],
                                            triangles[t][static_cast<std::size_t>((k + 1) % 3)]);
            const auto h = static_cast<HalfEdgeId>(3 * t + static_cast<std::size_t>(k));
            if (!directed.emplace(key, h).second) {
                throw Error(failure, "directed edge " + edge_text(key.first, key.second) +
                                         " appears in two triangles");
            }
        }
    }
    std::vector<HalfEdgeId> twins(3 * triangles.size(), kNone);
    for (const auto& [key, h] : directed) {
        auto it = directed.find({key.second, key.first});
        if (it == directed.end()) {
            if (!allow_boundary) {
                throw Error(failure, "edge " + edge_text(key.first, key.second) +
                                         " borders only one triangle");
            }
            continue;
        }
        twins[static_cast<std::size_t>(h)] = it->second;
    }
    return twins;
}

}  // namespace heawood
