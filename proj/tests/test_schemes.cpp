#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heawood/generators.hpp"
#include "heawood/polygon.hpp"
#include "heawood/schemes.hpp"

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

// Oracle: vertex sums straight from the definition.
std::vector<int> sums(const TriangleMesh& m, const OrientationAssignment& a) {
    std::vector<int> s(static_cast<std::size_t>(m.vertex_count()), 0);
    for (TriangleId t = 0; t < m.triangle_count(); ++t) {
        for (VertexId x : m.triangle(t)) s[static_cast<std::size_t>(x)] += a.values[static_cast<std::size_t>(t)];
    }
    for (int& x : s) x %= 3;
    return s;
}

std::vector<OrientationAssignment> good_by_brute_force(const TriangleMesh& m) {
    std::vector<OrientationAssignment> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.triangle_count()); ++mask) {
        const auto a = assignment_from_mask(m.triangle_count(), mask);
        const auto s = sums(m, a);
        if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) out.push_back(a);
    }
    return out;
}

// Oracle: every edge 3-colouring with rainbow triangles.
std::vector<EdgeColoring> proper_edge_colorings(const TriangleMesh& m) {
    std::vector<EdgeColoring> out;
    const int e = m.edge_count();
    std::vector<std::uint8_t> c(static_cast<std::size_t>(e), 0);
    for (;;) {
        bool ok = true;
        for (TriangleId t = 0; t < m.triangle_count() && ok; ++t) {
            std::set<int> seen;
            for (int k = 0; k < 3; ++k) seen.insert(c[static_cast<std::size_t>(m.edge_of(3 * t + k))]);
            ok = seen.size() == 3;
        }
        if (ok) out.push_back({c});
        int i = 0;
        while (i < e && ++c[static_cast<std::size_t>(i)] == 3) c[static_cast<std::size_t>(i++)] = 0;
        if (i == e) break;
    }
    return out;
}

OrientationAssignment alternating(const Triangulation& tri) {
    for (const auto& a : good_by_brute_force(tri)) {
        bool alt = true;
        for (HalfEdgeId h = 0; h < tri.half_edge_count(); ++h) {
            if (a.values[static_cast<std::size_t>(TriangleMesh::triangle_of(h))] ==
                a.values[static_cast<std::size_t>(TriangleMesh::triangle_of(tri.twin(h)))]) {
                alt = false;
            }
        }
        if (alt) return a;
    }
    FAIL("no alternating assignment");
    return {};
}

}  // namespace

TEST_CASE("partial numbers of a single triangle") {
    const auto tri = PolygonTriangulation::from_diagonals({0, 1, 2}, {2, 0}, {});
    CHECK(cv3_from_ct2(tri, uniform_assignment(tri, 1)).values == std::vector<std::int8_t>{1, 1, 1});
    CHECK(cv3_from_ct2(tri, uniform_assignment(tri, 2)).values == std::vector<std::int8_t>{2, 2, 2});
}

TEST_CASE("cv3 agrees with direct sums") {
    for (const auto& tri : {complete4(), octahedron(), stacked(3, 1), polygon_pair(6, 3, 7)}) {
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            const auto a = assignment_from_mask(tri.triangle_count(), mask * 2654435761u % (1u << tri.triangle_count()));
            const auto n = cv3_from_ct2(tri, a);
            const auto s = sums(tri, a);
            for (std::size_t i = 0; i < s.size(); ++i) CHECK(n.values[i] == s[i]);
        }
    }
}

TEST_CASE("good assignments of K4") {
    const Triangulation k4 = complete4();
    CHECK(is_good(k4, uniform_assignment(k4, 1)));
    CHECK(is_good(k4, uniform_assignment(k4, 2)));
    for (TriangleId t = 0; t < 4; ++t) {
        auto a = uniform_assignment(k4, 1);
        a.values[static_cast<std::size_t>(t)] = 2;
        CHECK(!is_good(k4, a));
    }
    const auto good = good_by_brute_force(k4);
    CHECK(good.size() == 2);
}

TEST_CASE("octahedron alternating assignment is good") {
    const Triangulation o = octahedron();
    const auto a = alternating(o);
    CHECK(is_good(o, a));
    const auto n = cv3_from_ct2(o, a);
    CHECK(std::all_of(n.values.begin(), n.values.end(), [](std::int8_t x) { return x == 0; }));
}

TEST_CASE("complement") {
    const Triangulation k4 = complete4();
    CHECK(complement(uniform_assignment(k4, 1)) == uniform_assignment(k4, 2));
    CHECK(is_good(k4, complement(uniform_assignment(k4, 1))));
    const Triangulation s = stacked(3, 5);
    for (std::uint64_t mask = 0; mask < 40; ++mask) {
        const auto a = assignment_from_mask(s.triangle_count(), mask * 97);
        CHECK(complement(complement(a)) == a);
        const auto n = cv3_from_ct2(s, a);
        const auto nc = cv3_from_ct2(s, complement(a));
        for (std::size_t i = 0; i < n.values.size(); ++i) CHECK(nc.values[i] == (3 - n.values[i]) % 3);
        CHECK(complement(n) == nc);
    }
}

TEST_CASE("vertex to edge colouring") {
    const Triangulation k4 = complete4();
    const VertexColoring cmyk{{vcolor::C, vcolor::M, vcolor::Y, vcolor::K}};
    const EdgeColoring ec = v4c_to_e3c(k4, cmyk);
    CHECK(is_proper(k4, ec));
    for (TriangleId t = 0; t < 4; ++t) {
        std::set<int> seen;
        for (int k = 0; k < 3; ++k) seen.insert(ec.colors[static_cast<std::size_t>(k4.edge_of(3 * t + k))]);
        CHECK(seen == std::set<int>{0, 1, 2});
    }
    CHECK(code_of([&] { v4c_to_e3c(k4, VertexColoring{{0, 0, 1, 2}}); }) == ErrorCode::ImproperInput);

    const Triangulation o = octahedron();
    // Opposite (non-adjacent) vertices share a colour.
    VertexColoring three(std::vector<std::uint8_t>(6, 0));
    std::uint8_t next = 0;
    std::vector<int> seen(6, -1);
    for (VertexId u = 0; u < 6; ++u) {
        const auto nb = o.neighbors(u);
        VertexId opp = 0;
        for (VertexId w = 0; w < 6; ++w) {
            if (w != u && !std::binary_search(nb.begin(), nb.end(), w)) opp = w;
        }
        if (seen[static_cast<std::size_t>(u)] < 0) {
            seen[static_cast<std::size_t>(u)] = seen[static_cast<std::size_t>(opp)] = next++;
        }
        three.colors[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(seen[static_cast<std::size_t>(u)]);
    }
    REQUIRE(is_proper(o, three));
    CHECK(is_proper(o, v4c_to_e3c(o, three)));
}

TEST_CASE("edge to vertex colouring") {
    const Triangulation k4 = complete4();
    const auto all = proper_edge_colorings(k4);
    CHECK(all.size() == 6);
    const VertexColoring c = e3c_to_v4c(k4, all.front(), 0, vcolor::C);
    CHECK(is_proper(k4, c));
    CHECK(std::set<int>(c.colors.begin(), c.colors.end()).size() == 4);

    const VertexColoring cmyk{{vcolor::C, vcolor::M, vcolor::Y, vcolor::K}};
    CHECK(e3c_to_v4c(k4, v4c_to_e3c(k4, cmyk), 0, vcolor::C) == cmyk);

    // The octahedron also has 4-colourings; the ones whose orientations
    // alternate are exactly the 3-colourings.
    const Triangulation o = octahedron();
    int alternating_count = 0;
    for (const auto& ec : proper_edge_colorings(o)) {
        const auto vc = e3c_to_v4c(o, ec, 0, vcolor::C);
        CHECK(is_proper(o, vc));
        const auto a = e3c_to_ct2(o, ec);
        bool alt = true;
        for (HalfEdgeId h = 0; h < o.half_edge_count(); ++h) alt = alt && a.values[static_cast<std::size_t>(h / 3)] != a.values[static_cast<std::size_t>(o.twin(h) / 3)];
        if (alt) ++alternating_count;
        CHECK((std::set<int>(vc.colors.begin(), vc.colors.end()).size() <= 3) == alt);
    }
    CHECK(alternating_count == 6);  // two assignments, three seed colours each
}

TEST_CASE("edge colouring to orientations") {
    const Triangulation k4 = complete4();
    for (const auto& ec : proper_edge_colorings(k4)) {
        const auto a = e3c_to_ct2(k4, ec);
        CHECK(is_good(k4, a));
        CHECK(std::all_of(a.values.begin(), a.values.end(), [&](std::uint8_t x) { return x == a.values[0]; }));
    }
    // Octahedron: the edge colouring of a 3-colouring alternates.
    const Triangulation o = octahedron();
    const VertexColoring three = e3c_to_v4c(o, ct2_to_e3c(o, alternating(o), 0, ecolor::r), 0, vcolor::C);
    REQUIRE(std::set<int>(three.colors.begin(), three.colors.end()).size() == 3);
    const auto a = e3c_to_ct2(o, v4c_to_e3c(o, three));
    for (HalfEdgeId h = 0; h < o.half_edge_count(); ++h) {
        CHECK(a.values[static_cast<std::size_t>(h / 3)] != a.values[static_cast<std::size_t>(o.twin(h) / 3)]);
    }
    EdgeColoring bad = proper_edge_colorings(k4).front();
    bad.colors[static_cast<std::size_t>(k4.edge_of(0))] = bad.colors[static_cast<std::size_t>(k4.edge_of(1))];
    CHECK(code_of([&] { e3c_to_ct2(k4, bad); }) == ErrorCode::ImproperInput);
}

TEST_CASE("path propagation") {
    const std::vector<int> partials{0, 1};
    CHECK(propagate_along_path(ecolor::b, partials) == ecolor::r);
}

TEST_CASE("orientations to edge colourings") {
    const Triangulation k4 = complete4();
    for (EdgeId e = 0; e < k4.edge_count(); ++e) {
        const auto ec = ct2_to_e3c(k4, uniform_assignment(k4, 1), e, ecolor::r);
        CHECK(is_proper(k4, ec));
        CHECK(ec.colors[static_cast<std::size_t>(e)] == ecolor::r);
    }
    auto flipped = uniform_assignment(k4, 1);
    flipped.values[2] = 2;
    try {
        ct2_to_e3c(k4, flipped, 0, ecolor::r);
        FAIL("expected NotGood");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotGood);
        CHECK(!e.witness().empty());
    }
    // Brute force agrees: no proper colouring induces that assignment.
    for (const auto& ec : proper_edge_colorings(k4)) CHECK(e3c_to_ct2(k4, ec) != flipped);
    CHECK(code_of([&] { ct2_to_e3c(k4, OrientationAssignment{{1, 1}}, 0, 0); }) == ErrorCode::IncompleteAssignment);
}

TEST_CASE("orientations to vertex colourings") {
    const Triangulation k4 = complete4();
    const auto c = ct2_to_v4c(k4, uniform_assignment(k4, 1));
    CHECK(is_proper(k4, c));
    CHECK(std::set<int>(c.colors.begin(), c.colors.end()).size() == 4);

    // Across an edge where the orientation changes, the two apexes share a colour.
    const Triangulation o = octahedron();
    const auto a = alternating(o);
    const auto vc = ct2_to_v4c(o, a);
    CHECK(is_proper(o, vc));
    CHECK(std::set<int>(vc.colors.begin(), vc.colors.end()).size() == 3);
    for (HalfEdgeId h = 0; h < o.half_edge_count(); ++h) {
        const VertexId apex = o.tail(TriangleMesh::prev(h));
        const VertexId other = o.tail(TriangleMesh::prev(o.twin(h)));
        CHECK(vc.colors[static_cast<std::size_t>(apex)] == vc.colors[static_cast<std::size_t>(other)]);
    }
}

TEST_CASE("round trips over every good assignment") {
    for (const auto& tri : {complete4(), octahedron(), stacked(2), polygon_pair(6, 3, 7), polygon_pair(5, 1, 1),
                            octahedral_family(1)}) {
        for (const auto& a : good_by_brute_force(tri)) {
            const auto ec = ct2_to_e3c(tri, a, 0, ecolor::g);
            CHECK(is_proper(tri, ec));
            CHECK(e3c_to_ct2(tri, ec) == a);
            const auto vc = e3c_to_v4c(tri, ec, 1, vcolor::Y);
            CHECK(is_proper(tri, vc));
            CHECK(v4c_to_e3c(tri, vc) == ec);
        }
    }
}

TEST_CASE("orbit sizes") {
    for (const auto& tri : {complete4(), octahedron(), icosahedron(), stacked(3, 2)}) {
        const auto good = good_by_brute_force(tri);
        REQUIRE(!good.empty());
        const auto vc = ct2_to_v4c(tri, good.front());
        CHECK(orbit(tri, vc).size() == 24);
        const auto ec = v4c_to_e3c(tri, vc);
        CHECK(orbit(tri, ec).size() == 6);
        CHECK(orbit(e3c_to_ct2(tri, ec)).size() == 2);
    }
}

TEST_CASE("colour characters") {
    CHECK(vertex_color_char(vcolor::K) == 'K');
    CHECK(parse_vertex_color('M') == vcolor::M);
    CHECK(edge_color_char(ecolor::b) == 'b');
    CHECK(parse_edge_color('g') == ecolor::g);
}
