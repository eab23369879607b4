#include "heawood/counting.hpp"

#include <array>
#include <bit>
#include <string>

namespace heawood {

std::uint64_t closed_form_count(int t, int target) {
    if (t < 1 || t > 62) throw Error(ErrorCode::BadParams, "t must be in 1..62");
    if (target < 0 || target > 2) throw Error(ErrorCode::BadParams, "target must be 0, 1 or 2");
    const auto power = static_cast<std::int64_t>(std::uint64_t{1} << t);
    const std::int64_t sign = t % 2 == 0 ? 1 : -1;
    const std::int64_t count = target == 0 ? (power + 2 * sign) / 3 : (power - sign) / 3;
    return static_cast<std::uint64_t>(count);
}

std::uint64_t brute_force_count(int t, int target, int bound) {
    if (t < 1) throw Error(ErrorCode::BadParams, "t must be positive");
    if (target < 0 || target > 2) throw Error(ErrorCode::BadParams, "target must be 0, 1 or 2");
    if (t > bound || t > 40) throw Error(ErrorCode::TooLarge, "t=" + std::to_string(t) + " exceeds the bound");
    // A tuple with k twos sums to t + k.
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        if ((t + std::popcount(mask)) % 3 == target) ++count;
    }
    return count;
}

bool perimeter_parity_check(const PolygonTriangulation& p, const EdgeColoring& ec) {
    if (!is_proper(p, ec)) throw Error(ErrorCode::ImproperInput, "edge colouring is not proper");
    std::array<int, 3> inner{};
    std::array<int, 3> perimeter{};
    for (EdgeId e = 0; e < p.edge_count(); ++e) {
        auto& bucket = p.edge(e).twin == kNone ? perimeter : inner;
        ++bucket[ec.colors[static_cast<std::size_t>(e)]];
    }
    for (std::size_t x = 0; x < 3; ++x) {
        if (p.triangle_count() != 2 * inner[x] + perimeter[x]) return false;
        if (perimeter[x] % 2 != p.perimeter_size() % 2) return false;
    }
    return true;
}

PolygonIdentities check_polygon_identities(const PolygonTriangulation& p) {
    const int v = p.vertex_count();
    const int e = p.edge_count();
    const int t = p.triangle_count();
    const int vp = p.perimeter_size();
    const int vi = p.inner_vertex_count();
    const int f = t + 1;
    PolygonIdentities out;
    out.euler = v - e + f == 2;
    out.faces = f == t + 1 && p.triangle_count() == t;
    out.edge_sum = 2 * e == 3 * t + vp;
    out.triangle_count = t == vp + 2 * (vi - 1);
    return out;
}

}  // namespace heawood
