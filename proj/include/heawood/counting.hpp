#pragma once

#include <cstdint>

#include "heawood/polygon.hpp"
#include "heawood/schemes.hpp"

namespace heawood {

/// Number of t-tuples over {1,2} whose sum is `target` mod 3:
/// (2^t + 2(-1)^t)/3 for target 0 and (2^t - (-1)^t)/3 otherwise.
/// Errors: BadParams for t < 1, t > 62 or a target outside 0..2.
std::uint64_t closed_form_count(int t, int target);

/// The same count by enumerating all 2^t tuples. Errors: TooLarge above `bound`.
std::uint64_t brute_force_count(int t, int target, int bound = 24);

/// For every colour x: perimeter edges of colour x have the parity of v_p, and
/// t_i = 2 e_i(x) + e_p(x). Errors: ImproperInput.
bool perimeter_parity_check(const PolygonTriangulation& p, const EdgeColoring& ec);

// Counting identities of a polygon with inner vertices: Euler v - e + f = 2,
// f = t_i + 1, 2e = 3 t_i + v_p and t_i = v_p + 2(v_i - 1).
struct PolygonIdentities {
    bool euler = false;
    bool faces = false;
    bool edge_sum = false;
    bool triangle_count = false;
    bool all() const { return euler && faces && edge_sum && triangle_count; }
};

PolygonIdentities check_polygon_identities(const PolygonTriangulation& p);

/// Mod-3 addition of partial vertex numbers.
constexpr int add_partial(int a, int b) { return (a + b) % 3; }

}  // namespace heawood
