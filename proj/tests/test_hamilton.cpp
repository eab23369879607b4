#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "heawood/generators.hpp"
#include "heawood/hamilton.hpp"

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

// Oracle: Hamilton circuits by permutations (v <= 8).
std::uint64_t brute_circuits(const Triangulation& tri) {
    const int v = tri.vertex_count();
    std::vector<VertexId> rest;
    for (VertexId u = 1; u < v; ++u) rest.push_back(u);
    std::uint64_t n = 0;
    auto adjacent = [&](VertexId a, VertexId b) { return !tri.edges_between(a, b).empty(); };
    do {
        if (rest.front() > rest.back()) continue;
        bool ok = adjacent(0, rest.front()) && adjacent(rest.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = adjacent(rest[i], rest[i + 1]);
        if (ok) ++n;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return n;
}

void check_split(const Triangulation& tri, const HamiltonSplit& s) {
    CHECK(s.inner.triangle_count() + s.outer.triangle_count() == 2 * (tri.vertex_count() - 2));
    CHECK(s.inner.perimeter_size() == tri.vertex_count());
    CHECK(s.inner.base() == s.base);
    CHECK(s.outer.base() == s.base);
    CHECK(canonical_form(combine_polygons(s.inner, s.outer)) == canonical_form(tri));
    std::set<TriangleId> sources(s.inner_source.begin(), s.inner_source.end());
    sources.insert(s.outer_source.begin(), s.outer_source.end());
    CHECK(static_cast<int>(sources.size()) == tri.triangle_count());
}

}  // namespace

TEST_CASE("circuits of small triangulations") {
    const auto k4 = find_hamilton_circuit(complete4());
    REQUIRE(k4);
    CHECK(k4->size() == 4);
    CHECK(is_hamilton_circuit(complete4(), *k4));

    const Triangulation o = octahedron();
    const auto c = find_hamilton_circuit(o);
    REQUIRE(c);
    CHECK(c->size() == 6);
    CHECK(is_hamilton_circuit(o, *c));
    for (const EdgeRecord& e : o.edges()) {
        const auto through = find_hamilton_circuit(o, VertexPair{e.u, e.v});
        REQUIRE(through);
        CHECK((*through)[0] == e.u);
        CHECK((*through)[1] == e.v);
        CHECK(is_hamilton_circuit(o, *through));
    }
    CHECK(!is_hamilton_circuit(o, {0, 1, 2, 3, 4, 5, 0}));
    CHECK(!is_hamilton_circuit(o, {0, 1, 2}));
}

TEST_CASE("circuit enumeration agrees with brute force") {
    for (const auto& tri : {complete4(), octahedron(), stacked(2), stacked(3, 4), polygon_pair(6, 3, 7)}) {
        std::set<Circuit> seen;
        const auto n = for_each_hamilton_circuit(tri, [&](const Circuit& c) {
            CHECK(is_hamilton_circuit(tri, c));
            CHECK(c[1] < c.back());
            seen.insert(c);
            return true;
        });
        CHECK(n == seen.size());
        if (!tri.has_multi_edges()) CHECK(n == brute_circuits(tri));
    }
}

TEST_CASE("sixteen-vertex graph has a circuit despite separating triangles") {
    const Triangulation g = fixtures::sixteen();
    CHECK(!find_separating_triangles(g).empty());
    CHECK(is_hamilton_circuit(g, fixtures::circuit16()));
    CHECK(find_hamilton_circuit(g).has_value());

    const HamiltonSplit s = split_by_circuit(g, fixtures::circuit16(), VertexPair{15, 0});
    check_split(g, s);
    bool apk = false;
    for (Triple t : s.outer.triangles()) {
        std::sort(t.begin(), t.end());
        apk = apk || t == Triple{0, 10, 15};
    }
    CHECK(apk);
    CHECK(s.inner == fixtures::sixteen_inner());
    CHECK(s.outer == fixtures::sixteen_outer());
}

TEST_CASE("splits conserve triangles") {
    const Triangulation o = octahedron();
    std::uint64_t splits = 0;
    for_each_hamilton_circuit(o, [&](const Circuit& c) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            check_split(o, split_by_circuit(o, c, VertexPair{c[i], c[(i + 1) % c.size()]}));
            ++splits;
        }
        return true;
    });
    CHECK(splits > 0);
    for (int v = 4; v <= 7; ++v) {
        for (const auto& tri : polygon_pair_corpus(v)) {
            const auto c = find_hamilton_circuit(tri);
            REQUIRE(c);
            check_split(tri, split_by_circuit(tri, *c));
        }
    }
}

TEST_CASE("default base is the smallest circuit edge") {
    CHECK(default_base({0, 3, 1, 2}) == VertexPair{0, 2});
    CHECK(default_base({2, 0, 1}) == VertexPair{0, 1});
}

TEST_CASE("split errors") {
    const Triangulation o = octahedron();
    const auto c = *find_hamilton_circuit(o);
    CHECK(code_of([&] { split_by_circuit(o, {0, 1, 2, 3, 4, 5}, std::nullopt); }) ==
          (is_hamilton_circuit(o, {0, 1, 2, 3, 4, 5}) ? ErrorCode::EdgeNotOnCircuit : ErrorCode::NotHamiltonian));
    CHECK(code_of([&] { split_by_circuit(o, {0, 1, 2}); }) == ErrorCode::NotHamiltonian);
    CHECK(code_of([&] { split_by_circuit(o, c, VertexPair{c[0], c[2]}); }) == ErrorCode::EdgeNotOnCircuit);
}

TEST_CASE("reconstruction order") {
    const auto tri = PolygonTriangulation::from_diagonals({0, 1, 2}, {2, 0}, {});
    CHECK(reconstruction_order(tri).size() == 1);
    CHECK(reconstruction_order(tri)[0].tip == 1);

    for (const auto& inner : enumerate_polygons_on_base(8)) {
        const auto steps = reconstruction_order(inner);
        CHECK(steps.size() == 6);
        std::set<TriangleId> used;
        for (const auto& s : steps) {
            CHECK(!inner.is_base_vertex(s.tip));
            used.insert(s.triangle);
        }
        CHECK(used.size() == 6);
    }

    // The order is hierarchical for the sixteen-vertex inner polygon: each
    // step's tip is an ear of what remains.
    const auto inner = fixtures::sixteen_inner();
    std::vector<int> degree(16, 0);
    for (VertexId u = 0; u < 16; ++u) degree[static_cast<std::size_t>(u)] = triangle_degree(inner, u);
    for (const auto& s : reconstruction_order(inner)) {
        CHECK(degree[static_cast<std::size_t>(s.tip)] == 1);
        for (VertexId x : inner.triangle(s.triangle)) --degree[static_cast<std::size_t>(x)];
    }
}

TEST_CASE("degenerate reconstruction") {
    auto check = [](const Triangulation& tri) {
        const auto c = find_hamilton_circuit(tri);
        REQUIRE(c);
        const HamiltonSplit s = split_by_circuit(tri, *c);
        const DegenerateReconstruction d = reconstruct_degenerate(s);
        CHECK(d.polygon.perimeter_size() == 2);
        CHECK(d.polygon.triangle_count() == tri.triangle_count());
        CHECK(d.polygon.base() == s.base);
        CHECK(d.steps.size() == static_cast<std::size_t>(s.inner.triangle_count()));
        CHECK(static_cast<int>(d.polygon.inner_vertices().size()) == tri.vertex_count() - 2);
        for (TriangleId t = 0; t < d.polygon.triangle_count(); ++t) {
            const Triple& mine = d.polygon.triangle(t);
            const Triple& src = tri.triangle(d.source[static_cast<std::size_t>(t)]);
            CHECK(rotate_min_first({mine[2], mine[1], mine[0]}) == rotate_min_first(src));
        }
    };
    check(complete4());
    check(octahedron());
    check(icosahedron());
    check(fixtures::sixteen());
    for (const auto& tri : polygon_pair_corpus(6)) check(tri);
}

TEST_CASE("circuits exist without separating triangles") {
    // Corpus up to 8, plus seeded polygon pairs on 9 vertices.
    int checked = 0;
    for (int v = 4; v <= 8; ++v) {
        for (const auto& tri : polygon_pair_corpus(v)) {
            if (!find_separating_triangles(tri).empty()) continue;
            CHECK(find_hamilton_circuit(tri).has_value());
            ++checked;
        }
    }
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pick(0, 428);
    for (int k = 0; k < 200; ++k) {
        const Triangulation tri = polygon_pair(9, pick(rng), pick(rng));
        if (!find_separating_triangles(tri).empty()) continue;
        CHECK(find_hamilton_circuit(tri).has_value());
        ++checked;
    }
    CHECK(checked > 0);
}
