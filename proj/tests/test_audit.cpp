#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "heawood/audit.hpp"
#include "heawood/counting.hpp"
#include "heawood/generators.hpp"
#include "heawood/polygon_ops.hpp"
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

// Oracle: count tuples over {1,2} by recursion on the last entry.
std::uint64_t by_recursion(int t, int target) {
    if (t == 0) return target == 0 ? 1 : 0;
    return by_recursion(t - 1, (target + 2) % 3) + by_recursion(t - 1, (target + 1) % 3);
}

}  // namespace

TEST_CASE("sum counts") {
    CHECK(closed_form_count(3, 0) == 2);
    CHECK(closed_form_count(7, 1) == 43);
    CHECK(closed_form_count(1, 0) == 0);
    CHECK(closed_form_count(6, 0) == 22);
    CHECK(brute_force_count(2, 0) == 2);
    CHECK(brute_force_count(2, 1) == 1);
    CHECK(brute_force_count(2, 2) == 1);
    CHECK(brute_force_count(6, 0) == 22);
    for (int t = 1; t <= 20; ++t) {
        std::uint64_t total = 0;
        for (int target = 0; target < 3; ++target) {
            const auto cf = closed_form_count(t, target);
            CHECK(cf == brute_force_count(t, target));
            CHECK(cf == by_recursion(t, target));
            total += cf;
        }
        CHECK(total == (std::uint64_t{1} << t));
        CHECK(closed_form_count(t, 0) + 2 * closed_form_count(t, 1) == (std::uint64_t{1} << t));
    }
    CHECK(code_of([] { closed_form_count(0, 0); }) == ErrorCode::BadParams);
    CHECK(code_of([] { closed_form_count(3, 3); }) == ErrorCode::BadParams);
    CHECK(code_of([] { brute_force_count(25, 0); }) == ErrorCode::TooLarge);
    static_assert(add_partial(2, 2) == 1);
}

TEST_CASE("perimeter parity") {
    const auto tri = PolygonTriangulation::from_diagonals({0, 1, 2}, {2, 0}, {});
    CHECK(perimeter_parity_check(tri, EdgeColoring{{0, 1, 2}}));

    const auto quad = PolygonTriangulation::from_diagonals({0, 1, 2, 3}, {3, 0}, std::vector<VertexPair>{{0, 2}});
    const auto ec = ct2_to_e3c(quad, uniform_assignment(quad, 1), 0, ecolor::r);
    for (const auto& c : orbit(quad, ec)) {
        CHECK(perimeter_parity_check(quad, c));
        std::array<int, 3> per{};
        for (int i = 0; i < 4; ++i) ++per[c.colors[static_cast<std::size_t>(quad.edge_of(quad.boundary_half_edge(i)))]];
        for (int x : per) CHECK(x % 2 == 0);
    }
    CHECK(code_of([&] { perimeter_parity_check(tri, EdgeColoring{{0, 0, 2}}); }) == ErrorCode::ImproperInput);
}

TEST_CASE("two-edge perimeter: one edge red forces the other") {
    for (const auto& t : {octahedron(), icosahedron(), polygon_pair(6, 3, 7), stacked(0)}) {
        const auto d = reconstruct_degenerate(split_by_circuit(t, *find_hamilton_circuit(t)));
        const std::array<VertexId, 2> frozen{d.polygon.base().first, d.polygon.base().second};
        const auto a = search_good_ct2(d.polygon, frozen);
        REQUIRE(a);
        const EdgeId first = d.polygon.edge_of(d.polygon.boundary_half_edge(1));
        const EdgeId second = d.polygon.edge_of(d.polygon.boundary_half_edge(0));
        const auto ec = ct2_to_e3c(d.polygon, *a, first, ecolor::r);
        CHECK(ec.colors[static_cast<std::size_t>(second)] == ecolor::r);
        CHECK(perimeter_parity_check(d.polygon, ec));
    }
}

TEST_CASE("polygon identities") {
    for (int k = 3; k <= 10; ++k) CHECK(check_polygon_identities(wheel_polygon(k)).all());
    for (const auto& p : enumerate_polygons_on_base(8)) {
        PolygonTriangulation cur = p;
        while (cur.perimeter_size() > 3) {
            CHECK(check_polygon_identities(cur).all());
            cur = add_ear(cur, cur.perimeter()[1]);
        }
    }
    // The doubled base counts as two perimeter edges.
    for (int v = 4; v <= 6; ++v) {
        for (const auto& t : polygon_pair_corpus(v)) {
            const auto d = reconstruct_degenerate(split_by_circuit(t, *find_hamilton_circuit(t)));
            const auto ids = check_polygon_identities(d.polygon);
            CHECK(ids.all());
        }
    }
}

TEST_CASE("statement names") {
    CHECK(statement_ids().size() == 7);
    CHECK(canonical_statement("t1") == "T1");
    CHECK(canonical_statement("S8-existence") == "S8");
    CHECK(canonical_statement("table-4.2") == "TBL42");
    CHECK(code_of([] { canonical_statement("T9"); }) == ErrorCode::UnknownStatement);
    CHECK(to_string(Verdict::ExhaustedBound) == "exhausted-bound");
    CHECK(exit_code(Verdict::Holds) == 0);
    CHECK(exit_code(Verdict::Counterexample) == 2);
    CHECK(exit_code(Verdict::ExhaustedBound) == 3);
}

TEST_CASE("audits hold on their default bounds") {
    const auto t1 = audit("T1");
    CHECK(t1.verdict == Verdict::Holds);
    CHECK(t1.instances == 1 + 2 + 5 + 14 + 42 + 132 + 429 + 1430);

    const auto table = audit("TBL42");
    CHECK(table.verdict == Verdict::Holds);
    CHECK(table.details["rows"][5]["counts"] == Json::array({22, 21, 21}));

    CHECK(audit("T2").verdict == Verdict::Holds);
    CHECK(audit("T4", {0, 10, 0, 0}).verdict == Verdict::Holds);
    CHECK(audit("T3", {6, 12, 0, 0}).verdict == Verdict::Holds);

    const auto c1 = audit("C1");
    CHECK(c1.verdict == Verdict::Holds);
    CHECK(c1.details["octahedral"]["counts"][0] == Json{{"count", 81}, {"expected", 81}, {"v", 6}});

    const auto s8 = audit("S8", {7, 0, 0, 0});
    CHECK(s8.verdict == Verdict::Holds);
    CHECK(s8.details["splits_checked"].get<std::uint64_t>() > 0);
}

TEST_CASE("reports do not depend on the thread count") {
    const auto one = to_json(audit("T3", {6, 12, 0, 1}));
    const auto four = to_json(audit("T3", {6, 12, 0, 4}));
    CHECK(one.dump() == four.dump());
    CHECK(!one.contains("elapsed_seconds"));
    CHECK(to_json(audit("TBL42"), true).contains("elapsed_seconds"));
}

TEST_CASE("budget exhaustion") {
    const auto r = audit("T1", {0, 0, 1e-9, 2});
    CHECK(r.verdict == Verdict::ExhaustedBound);
    CHECK(r.instances < 2055);
}

TEST_CASE("counterexamples are confirmed and reported by smallest index") {
    auto failing = [](std::size_t i) -> std::optional<Json> {
        if (i == 37 || i == 80) return Json{{"value", i}};
        return std::nullopt;
    };
    std::atomic<int> confirmations{0};
    auto confirm = [&](std::size_t i, const Json& payload) {
        ++confirmations;
        return payload["value"].get<std::size_t>() == i;
    };
    for (int jobs : {1, 3, 8}) {
        const auto r = check_instances("X", "synthetic", 100, {0, 0, 0, jobs}, failing, confirm);
        CHECK(r.verdict == Verdict::Counterexample);
        CHECK(r.instances == 38);
        REQUIRE(r.counterexample);
        CHECK((*r.counterexample)["instance_index"] == 37);
    }
    CHECK(confirmations == 3);

    // A counterexample the second computation rejects is an internal error.
    CHECK(code_of([&] {
              check_instances("X", "synthetic", 100, {}, failing, [](std::size_t, const Json&) { return false; });
          }) == ErrorCode::Inconsistent);

    // Exceptions inside a check become counterexamples.
    const auto thrown = check_instances(
        "X", "synthetic", 10, {0, 0, 0, 2},
        [](std::size_t i) -> std::optional<Json> {
            if (i == 4) throw Error(ErrorCode::NotGood, "boom", {1, 2});
            return std::nullopt;
        },
        [](std::size_t, const Json&) { return false; });
    CHECK(thrown.verdict == Verdict::Counterexample);
    CHECK((*thrown.counterexample)["error"] == "NotGood");
    CHECK((*thrown.counterexample)["witness"] == Json::array({1, 2}));

    const auto clean = check_instances("X", "synthetic", 50, {}, [](std::size_t) { return std::optional<Json>{}; },
                                       [](std::size_t, const Json&) { return true; });
    CHECK(clean.verdict == Verdict::Holds);
    CHECK(clean.instances == 50);
}
