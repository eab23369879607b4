#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "heawood/hamilton.hpp"
#include "heawood/schemes.hpp"
#include "heawood/triangulation.hpp"

namespace heawood {

struct SearchOptions {
    int exhaustive_limit = 20;  // plain Gray-code exhaustion up to this many triangles
};

/// An assignment whose sums vanish on every vertex outside `frozen`. Tries the
/// uniform and the alternating assignment first, then searches exhaustively.
/// std::nullopt when none exists.
std::optional<OrientationAssignment> search_good_ct2(const TriangleMesh& mesh, std::span<const VertexId> frozen,
                                                     const SearchOptions& options = {});

struct SolveOptions {
    std::optional<VertexPair> base;  // base edge for the top-level Hamilton split
    std::optional<Circuit> circuit;  // top-level circuit; unused when a separating triangle splits first
    SearchOptions search;
};

// Certificate of a solve. A node either splits along a separating triangle
// (`separating` set, `parts` = {parent, child}) or runs the Hamilton pipeline.
struct SolveTrace {
    std::optional<SeparatingTriangle> separating;
    std::vector<SolveTrace> parts;
    std::array<std::uint8_t, 4> child_permutation{0, 1, 2, 3};

    Circuit circuit;
    VertexPair base{kNone, kNone};
    std::vector<ReconstructionStep> ears;
    OrientationAssignment degenerate_assignment;  // on the degenerate polygon
    OrientationAssignment assignment;             // on the triangulation
    EdgeId seed_edge = kNone;
    std::uint8_t seed_color = ecolor::r;
    std::uint8_t closure_color = ecolor::r;  // derived colour of the second perimeter edge

    VertexColoring coloring;
};

struct SolveResult {
    VertexColoring coloring;
    SolveTrace trace;
};

/// Errors: PipelineCounterexample, NoHamiltonCircuit, NotHamiltonian (bad
/// circuit override).
SolveResult four_color(const Triangulation& tri, const SolveOptions& options = {});

/// Recomputes the colouring from the data stored in `trace`.
VertexColoring replay(const Triangulation& tri, const SolveTrace& trace);

/// Plain backtracking colouring with `palette` colours, vertices in id order.
/// Errors: TooLarge above `max_vertices`; Uncolorable.
VertexColoring four_color_oracle(const Triangulation& tri, int palette = 4, int max_vertices = 14);

/// Number of distinct colours used.
int colors_used(const VertexColoring& c);

}  // namespace heawood
