#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "heawood/mesh.hpp"

namespace heawood {

// Vertex colours C, M, Y, K are 0..3; read as 2-bit vectors they form the
// Klein four-group used to pair vertex and edge colourings.
namespace vcolor {
inline constexpr std::uint8_t C = 0;
inline constexpr std::uint8_t M = 1;
inline constexpr std::uint8_t Y = 2;
inline constexpr std::uint8_t K = 3;
}  // namespace vcolor

// Edge colours r, g, b are the residues 0, 1, 2.
namespace ecolor {
inline constexpr std::uint8_t r = 0;
inline constexpr std::uint8_t g = 1;
inline constexpr std::uint8_t b = 2;
}  // namespace ecolor

char vertex_color_char(std::uint8_t c);
char edge_color_char(std::uint8_t c);
std::uint8_t parse_vertex_color(char c);
std::uint8_t parse_edge_color(char c);

struct VertexColoring {
    std::vector<std::uint8_t> colors;  // by VertexId, values 0..3
    auto operator<=>(const VertexColoring&) const = default;
};

struct EdgeColoring {
    std::vector<std::uint8_t> colors;  // by EdgeId, values 0..2
    auto operator<=>(const EdgeColoring&) const = default;
};

/// Triangle orientation values 1 or 2, by TriangleId.
struct OrientationAssignment {
    std::vector<std::uint8_t> values;
    auto operator<=>(const OrientationAssignment&) const = default;
};

/// Per-vertex residues 0..2; kUnset marks vertices outside a partial numbering.
struct VertexNumbering {
    static constexpr std::int8_t kUnset = -1;
    std::vector<std::int8_t> values;
    auto operator<=>(const VertexNumbering&) const = default;
};

/// Assignment with every triangle set to `value`.
OrientationAssignment uniform_assignment(const TriangleMesh& mesh, std::uint8_t value);

/// Assignment from the bits of `mask`: bit t set means value 2.
OrientationAssignment assignment_from_mask(int triangle_count, std::uint64_t mask);

/// Per-vertex mod-3 sum of incident triangle values. On a polygon the sums at
/// perimeter vertices are partial. Errors: IncompleteAssignment.
VertexNumbering cv3_from_ct2(const TriangleMesh& mesh, const OrientationAssignment& a);

/// True iff every vertex sum is 0.
bool is_good(const TriangleMesh& mesh, const OrientationAssignment& a);

/// Swaps 1 and 2 everywhere.
OrientationAssignment complement(const OrientationAssignment& a);
VertexNumbering complement(const VertexNumbering& n);

bool is_proper(const TriangleMesh& mesh, const VertexColoring& c);
bool is_proper(const TriangleMesh& mesh, const EdgeColoring& c);

/// Edge colour from the Klein sum of its endpoint colours:
/// C^M, Y^K -> r;  C^Y, M^K -> g;  C^K, M^Y -> b.  Errors: ImproperInput.
EdgeColoring v4c_to_e3c(const TriangleMesh& mesh, const VertexColoring& c);

/// Inverse of v4c_to_e3c given one vertex colour. Errors: ImproperInput,
/// Inconsistent.
VertexColoring e3c_to_v4c(const TriangleMesh& mesh, const EdgeColoring& ec, VertexId seed_vertex,
                          std::uint8_t seed_color);

/// Orientation 1 where r, g, b run in the triangle's listed direction, else 2.
/// Errors: ImproperInput.
OrientationAssignment e3c_to_ct2(const TriangleMesh& mesh, const EdgeColoring& ec);

/// Propagates edge colours across triangles breadth-first from `first_edge`.
/// Inside triangle t the colour of slot k+1 is the colour of slot k plus a[t].
/// Errors: IncompleteAssignment; NotGood with the failing dual cycle (triangle
/// ids) as witness.
EdgeColoring ct2_to_e3c(const TriangleMesh& mesh, const OrientationAssignment& a, EdgeId first_edge,
                        std::uint8_t first_color);

struct ColoringSeed {
    EdgeId edge = 0;
    std::uint8_t edge_color = ecolor::r;
    VertexId vertex = 0;
    std::uint8_t vertex_color = vcolor::C;
};

/// ct2_to_e3c followed by e3c_to_v4c.
VertexColoring ct2_to_v4c(const TriangleMesh& mesh, const OrientationAssignment& a,
                          const ColoringSeed& seed = {});

/// Colour of the last edge of `path` from the colour of its first edge plus the
/// partial vertex sums swept on the path's right-hand side at each interior
/// vertex. `path` lists consecutive half-edges of a closed mesh.
std::uint8_t propagate_along_path(const TriangleMesh& mesh, const OrientationAssignment& a,
                                  std::span<const HalfEdgeId> path, std::uint8_t first_color);

/// Same rule on bare numbers: (first + sum of partials) mod 3.
std::uint8_t propagate_along_path(std::uint8_t first_color, std::span<const int> partials);

/// The 24 colour permutations of a proper vertex colouring, sorted and
/// deduplicated. Errors: ImproperInput.
std::vector<VertexColoring> orbit(const TriangleMesh& mesh, const VertexColoring& c);
/// The 6 permutations of a proper edge colouring. Errors: ImproperInput.
std::vector<EdgeColoring> orbit(const TriangleMesh& mesh, const EdgeColoring& c);
/// An assignment and its complement.
std::vector<OrientationAssignment> orbit(const OrientationAssignment& a);

}  // namespace heawood
