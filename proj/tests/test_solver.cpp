#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "heawood/generators.hpp"
#include "heawood/solver.hpp"

using namespace heawood;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

bool zero_outside(const TriangleMesh& m, const OrientationAssignment& a, std::span<const VertexId> frozen) {
    const auto n = cv3_from_ct2(m, a);
    for (VertexId u = 0; u < m.vertex_count(); ++u) {
        if (std::find(frozen.begin(), frozen.end(), u) != frozen.end()) continue;
        if (n.values[static_cast<std::size_t>(u)] != 0) return false;
    }
    return true;
}

bool exists_by_brute_force(const TriangleMesh& m, std::span<const VertexId> frozen) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.triangle_count()); ++mask) {
        if (zero_outside(m, assignment_from_mask(m.triangle_count(), mask), frozen)) return true;
    }
    return false;
}

std::set<VertexPair> circuit_edges(const Circuit& c) {
    std::set<VertexPair> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const VertexId a = c[i];
        const VertexId b = c[(i + 1) % c.size()];
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

void check_solution(const Triangulation& tri) {
    const SolveResult r = four_color(tri);
    CHECK(is_proper(tri, r.coloring));
    CHECK(colors_used(r.coloring) <= 4);
    CHECK(replay(tri, r.trace) == r.coloring);
    if (tri.vertex_count() <= 14) CHECK(is_proper(tri, four_color_oracle(tri)));
}

}  // namespace

TEST_CASE("search for good assignments") {
    const Triangulation k4 = complete4();
    const auto a = search_good_ct2(k4, {});
    REQUIRE(a);
    CHECK((*a == uniform_assignment(k4, 1) || *a == uniform_assignment(k4, 2)));

    const auto tri = PolygonTriangulation::from_diagonals({0, 1, 2}, {2, 0}, {});
    CHECK(!search_good_ct2(tri, {}).has_value());
    CHECK(!exists_by_brute_force(tri, {}));

    const Triangulation o = octahedron();
    const auto ao = search_good_ct2(o, {});
    REQUIRE(ao);
    CHECK(is_good(o, *ao));

    // Degenerate polygons with the base frozen, against exhaustion.
    for (int v = 4; v <= 7; ++v) {
        for (const auto& t : polygon_pair_corpus(v)) {
            const auto c = find_hamilton_circuit(t);
            REQUIRE(c);
            const auto d = reconstruct_degenerate(split_by_circuit(t, *c));
            const std::array<VertexId, 2> frozen{d.polygon.base().first, d.polygon.base().second};
            const auto found = search_good_ct2(d.polygon, frozen);
            CHECK(found.has_value() == exists_by_brute_force(d.polygon, frozen));
            if (found) CHECK(zero_outside(d.polygon, *found, frozen));
        }
    }

    // The propagating search past the exhaustive limit agrees with Gray exhaustion.
    SearchOptions dfs;
    dfs.exhaustive_limit = 0;
    for (const auto& t : polygon_pair_corpus(7)) {
        const auto c = find_hamilton_circuit(t);
        const auto d = reconstruct_degenerate(split_by_circuit(t, *c));
        const std::array<VertexId, 2> frozen{d.polygon.base().first, d.polygon.base().second};
        const auto found = search_good_ct2(d.polygon, frozen, dfs);
        CHECK(found.has_value() == search_good_ct2(d.polygon, frozen).has_value());
        if (found) CHECK(zero_outside(d.polygon, *found, frozen));
    }
    CHECK(code_of([&] {
              const std::array<VertexId, 1> bad{9};
              search_good_ct2(k4, bad);
          }) == ErrorCode::UnknownVertex);
}

TEST_CASE("named triangulations") {
    const auto k4 = four_color(complete4());
    CHECK(is_proper(complete4(), k4.coloring));
    CHECK(colors_used(k4.coloring) == 4);

    const auto o = four_color(octahedron());
    CHECK(is_proper(octahedron(), o.coloring));
    CHECK(colors_used(o.coloring) <= 3);
    CHECK(colors_used(four_color_oracle(octahedron(), 3)) == 3);
    CHECK(code_of([] { four_color_oracle(complete4(), 3); }) == ErrorCode::Uncolorable);

    check_solution(icosahedron());
    check_solution(fixtures::sixteen());
}

TEST_CASE("traces") {
    const Triangulation s = stacked(3);
    const SolveResult r = four_color(s);
    CHECK(r.trace.separating.has_value());
    CHECK(r.trace.parts.size() == 2);
    CHECK(replay(s, r.trace) == r.coloring);

    const Triangulation o = octahedron();
    const SolveResult ro = four_color(o);
    CHECK(!ro.trace.separating);
    CHECK(is_hamilton_circuit(o, ro.trace.circuit));
    CHECK(ro.trace.closure_color == ro.trace.seed_color);
    CHECK(is_good(o, ro.trace.assignment));

    // A requested base is honoured at the top level.
    const auto c = *find_hamilton_circuit(o);
    SolveOptions opts;
    opts.base = VertexPair{c[2], c[3]};
    const SolveResult rb = four_color(o, opts);
    CHECK(((rb.trace.base == VertexPair{c[2], c[3]}) || (rb.trace.base == VertexPair{c[3], c[2]})));
    CHECK(is_proper(o, rb.coloring));

    // So is a requested circuit; a bad one is rejected.
    std::uint64_t tried = 0;
    for_each_hamilton_circuit(o, [&](const Circuit& circuit) {
        SolveOptions oc;
        oc.circuit = circuit;
        const SolveResult rc = four_color(o, oc);
        CHECK(circuit_edges(rc.trace.circuit) == circuit_edges(circuit));
        CHECK(is_proper(o, rc.coloring));
        ++tried;
        return true;
    });
    CHECK(tried > 1);
    SolveOptions bad;
    bad.circuit = Circuit{0, 1, 2};
    CHECK(code_of([&] { four_color(o, bad); }) == ErrorCode::NotHamiltonian);
}

TEST_CASE("corpus and stacked families") {
    for (int v = 3; v <= 7; ++v) {
        for (const auto& tri : polygon_pair_corpus(v)) check_solution(tri);
    }
    for (int d = 0; d <= 8; ++d) {
        check_solution(stacked(d));
        check_solution(stacked(d, static_cast<std::uint64_t>(d) * 31 + 1));
    }
}

TEST_CASE("random ten-vertex pairs") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick(0, 1429);
    for (int k = 0; k < 40; ++k) check_solution(polygon_pair(10, pick(rng), pick(rng)));
}

TEST_CASE("oracle") {
    CHECK(code_of([] { four_color_oracle(icosahedron(), 4, 10); }) == ErrorCode::TooLarge);
    const auto c = four_color_oracle(icosahedron());
    CHECK(is_proper(icosahedron(), c));
    CHECK(colors_used(c) == 4);
}
