#include "heawood/audit.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <chrono>
#include <functional>
#include <set>
#include <thread>

#include "heawood/counting.hpp"
#include "heawood/generators.hpp"
#include "heawood/hamilton.hpp"
#include "heawood/polygon_ops.hpp"
#include "heawood/solver.hpp"

namespace heawood {

namespace {

using Clock = std::chrono::steady_clock;
using Check = std::function<std::optional<Json>(std::size_t)>;
using Confirm = std::function<bool(std::size_t, const Json&)>;

struct RunOutcome {
    std::uint64_t completed = 0;
    std::vector<std::optional<Json>> failures;
    std::optional<std::size_t> first;
    bool budget_hit = false;
};

Json error_payload(const std::exception& e) {
    Json j;
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        j["error"] = to_string(err->code());
        if (!err->witness().empty()) j["witness"] = err->witness();
    } else {
        j["error"] = "exception";
    }
    j["message"] = e.what();
    return j;
}

// Instances run on a pool of threads; results are merged by index, so the
// first counterexample is the one with the smallest index.
RunOutcome run(std::size_t n, const AuditBounds& bounds, Clock::time_point start, const Check& check,
               bool stop_at_first = true) {
    RunOutcome out;
    out.failures.resize(n);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first{n};
    std::atomic<std::uint64_t> completed{0};
    std::atomic<bool> budget_hit{false};
    const bool budgeted = bounds.budget_seconds > 0;
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(bounds.budget_seconds));
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            if (stop_at_first && i > first.load()) return;
            if (budgeted && Clock::now() > deadline) {
                budget_hit = true;
                return;
            }
            std::optional<Json> result;
            try {
                result = check(i);
            } catch (const std::exception& e) {
                result = error_payload(e);
            }
            ++completed;
            if (result) {
                out.failures[i] = std::move(result);
                std::size_t cur = first.load();
                while (i < cur && !first.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    int jobs = bounds.jobs > 0 ? bounds.jobs : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(n, 1))));
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    out.completed = completed;
    out.budget_hit = budget_hit;
    if (first.load() < n) out.first = first.load();
    return out;
}

void finish(AuditReport& report, std::size_t n, RunOutcome& outcome, const Check& check, const Confirm& confirm) {
    if (outcome.first) {
        const std::size_t i = *outcome.first;
        Json payload = *outcome.failures[i];
        bool confirmed = false;
        if (payload.contains("error")) {
            // A second run must fail the same way.
            try {
                confirmed = check(i).has_value();
            } catch (const std::exception& e) {
                confirmed = error_payload(e)["error"] == payload["error"];
            }
        } else {
            confirmed = confirm(i, payload);
        }
        if (!confirmed) {
            throw Error(ErrorCode::Inconsistent, "counterexample at instance " + std::to_string(i) +
                                                     " did not re-verify");
        }
        payload["instance_index"] = i;
        report.verdict = Verdict::Counterexample;
        report.counterexample = std::move(payload);
        report.instances = i + 1;
    } else if (outcome.budget_hit) {
        report.verdict = Verdict::ExhaustedBound;
        report.instances = outcome.completed;
    } else {
        report.verdict = Verdict::Holds;
        report.instances = n;
    }
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::uint64_t pow3(int k) {
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

// Mod-3 sums from incidence bit masks; bit t of `mask` set means value 2.
class DirectSums {
public:
    explicit DirectSums(const TriangleMesh& m) : degree_(static_cast<std::size_t>(m.vertex_count())),
                                                incident_(static_cast<std::size_t>(m.vertex_count()), 0) {
        for (TriangleId t = 0; t < m.triangle_count(); ++t) {
            for (VertexId x : m.triangle(t)) {
                ++degree_[static_cast<std::size_t>(x)];
                incident_[static_cast<std::size_t>(x)] |= std::uint64_t{1} << t;
            }
        }
    }
    int at(VertexId x, std::uint64_t mask) const {
        return (degree_[static_cast<std::size_t>(x)] + std::popcount(mask & incident_[static_cast<std::size_t>(x)])) % 3;
    }

private:
    std::vector<int> degree_;
    std::vector<std::uint64_t> incident_;
};

std::uint64_t mask_of(const OrientationAssignment& a) {
    std::uint64_t m = 0;
    for (std::size_t t = 0; t < a.values.size(); ++t) {
        if (a.values[t] == 2) m |= std::uint64_t{1} << t;
    }
    return m;
}

struct PolygonIndex {
    int v;
    std::vector<VertexPair> diagonals;
};

std::vector<PolygonIndex> polygons_up_to(int max_v) {
    std::vector<PolygonIndex> out;
    for (int v = 3; v <= max_v; ++v) {
        for (auto& d : enumerate_diagonal_sets(v)) out.push_back({v, std::move(d)});
    }
    return out;
}

// ---------------------------------------------------------------- TBL42

AuditReport audit_table(const AuditBounds& bounds, Clock::time_point start) {
    static constexpr std::uint64_t zero[] = {0, 2, 2, 6, 10, 22, 42};
    static constexpr std::uint64_t nonzero[] = {1, 1, 3, 5, 11, 21, 43};
    const int max_t = pick(bounds.max_triangles, 7);
    AuditReport report{"TBL42", "t = 1.." + std::to_string(max_t) + ", targets 0, 1, 2", 0, Verdict::Holds, {}, {}, 0};
    const auto n = static_cast<std::size_t>(max_t);
    std::vector<Json> rows(n);
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        const int t = static_cast<int>(i) + 1;
        Json row{{"t", t}};
        std::uint64_t total = 0;
        for (int target = 0; target < 3; ++target) {
            const auto cf = closed_form_count(t, target);
            const auto bf = brute_force_count(t, target, 30);
            row["counts"].push_back(cf);
            total += cf;
            if (t <= 7) {
                const auto table = target == 0 ? zero[i] : nonzero[i];
                if (cf != table || bf != table) {
                    return Json{{"t", t}, {"target", target}, {"closed_form", cf}, {"brute_force", bf}, {"table", table}};
                }
            } else if (cf != bf) {
                return Json{{"t", t}, {"target", target}, {"closed_form", cf}, {"brute_force", bf}};
            }
        }
        row["total"] = total;
        if (total != (std::uint64_t{1} << t)) return Json{{"t", t}, {"total", total}};
        rows[i] = row;
        return std::nullopt;
    };
    // Independent path: count sums through a mod-3 convolution.
    const Confirm confirm = [](std::size_t i, const Json& payload) {
        const int t = static_cast<int>(i) + 1;
        std::array<std::uint64_t, 3> c{1, 0, 0};
        for (int k = 0; k < t; ++k) c = {c[1] + c[2], c[0] + c[2], c[0] + c[1]};
        if (!payload.contains("target")) return c[0] + c[1] + c[2] != payload["total"].get<std::uint64_t>();
        const auto want = c[static_cast<std::size_t>(payload["target"].get<int>())];
        return payload["closed_form"].get<std::uint64_t>() != want || payload["brute_force"].get<std::uint64_t>() != want ||
               (payload.contains("table") && payload["table"].get<std::uint64_t>() != want);
    };
    auto outcome = run(n, bounds, start, check);
    finish(report, n, outcome, check, confirm);
    for (auto& r : rows) {
        if (!r.is_null()) report.details["rows"].push_back(r);
    }
    return report;
}

// ---------------------------------------------------------------- T1

AuditReport audit_t1(const AuditBounds& bounds, Clock::time_point start) {
    const int max_v = pick(bounds.max_v, 10);
    const auto polys = polygons_up_to(max_v);
    AuditReport report{"T1", "all polygons on a base, v = 3.." + std::to_string(max_v), 0, Verdict::Holds, {}, {}, 0};
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        const PolygonTriangulation p = polygon_on_base(polys[i].v, polys[i].diagonals);
        const auto nb = p.non_base_vertices();
        const int t = p.triangle_count();
        std::vector<char> seen(static_cast<std::size_t>(pow3(static_cast<int>(nb.size()))), 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
            const OrientationAssignment a = assignment_from_mask(t, mask);
            const VertexNumbering num = cv3_from_ct2(p, a);
            std::uint64_t key = 0;
            for (VertexId x : nb) key = key * 3 + static_cast<std::uint64_t>(num.values[static_cast<std::size_t>(x)]);
            if (seen[static_cast<std::size_t>(key)]) return Json{{"kind", "collision"}, {"polygon", to_json(p)}, {"mask", mask}};
            seen[static_cast<std::size_t>(key)] = 1;
            if (decode_cv3_to_ct2(p, num) != a) return Json{{"kind", "decode"}, {"polygon", to_json(p)}, {"mask", mask}};
        }
        return std::nullopt;
    };
    const Confirm confirm = [&](std::size_t i, const Json& payload) {
        const PolygonTriangulation p = polygon_on_base(polys[i].v, polys[i].diagonals);
        const DirectSums sums(p);
        const auto nb = p.non_base_vertices();
        std::set<std::vector<int>> images;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.triangle_count()); ++mask) {
            std::vector<int> img;
            for (VertexId x : nb) img.push_back(sums.at(x, mask));
            images.insert(img);
        }
        if (images.size() < (std::uint64_t{1} << p.triangle_count())) return true;
        if (payload["kind"] != "decode") return false;
        const auto mask = payload["mask"].get<std::uint64_t>();
        const auto decoded = decode_cv3_to_ct2(p, cv3_from_ct2(p, assignment_from_mask(p.triangle_count(), mask)));
        for (VertexId x : nb) {
            if (sums.at(x, mask_of(decoded)) != sums.at(x, mask)) return true;
        }
        return false;
    };
    auto outcome = run(polys.size(), bounds, start, check);
    finish(report, polys.size(), outcome, check, confirm);
    for (int v = 3; v <= max_v; ++v) report.details["polygons_per_v"][std::to_string(v)] = catalan_count(v);
    return report;
}

// ---------------------------------------------------------------- T2

AuditReport audit_t2(const AuditBounds& bounds, Clock::time_point start) {
    const int max_v = pick(bounds.max_v, 8);
    const auto polys = polygons_up_to(max_v);
    AuditReport report{"T2", "all polygons on a base, v = 3.." + std::to_string(max_v) + ", with single-column shifts",
                       0, Verdict::Holds, {}, {}, 0};
    std::atomic<std::uint64_t> pairs{0};
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        const PolygonTriangulation p = polygon_on_base(polys[i].v, polys[i].diagonals);
        auto fail = [&](const DifferenceOutcome& d, std::optional<std::pair<VertexId, int>> shift) {
            Json j{{"polygon", to_json(p)}, {"vertex", *d.vertex}, {"mask", *d.mask}};
            if (shift) j["shift"] = {shift->first, shift->second};
            return j;
        };
        const auto plain = verify_difference_property(p);
        pairs += plain.checked;
        if (!plain.holds) return fail(plain, std::nullopt);
        for (VertexId x : p.non_base_vertices()) {
            for (int c = 1; c <= 2; ++c) {
                std::vector<int> shift(static_cast<std::size_t>(p.vertex_count()), 0);
                shift[static_cast<std::size_t>(x)] = c;
                const auto shifted = verify_difference_property(p, shift);
                pairs += shifted.checked;
                if (!shifted.holds) return fail(shifted, std::pair{x, c});
            }
        }
        return std::nullopt;
    };
    const Confirm confirm = [&](std::size_t i, const Json& payload) {
        const PolygonTriangulation p = polygon_on_base(polys[i].v, polys[i].diagonals);
        const auto assoc = associate(p);
        const DirectSums sums(p);
        const auto x = payload["vertex"].get<VertexId>();
        const auto mask = payload["mask"].get<std::uint64_t>();
        const std::uint64_t bit = std::uint64_t{1} << assoc.vertex_triangle[static_cast<std::size_t>(x)];
        return (sums.at(x, mask | bit) - sums.at(x, mask) + 3) % 3 != 1;
    };
    auto outcome = run(polys.size(), bounds, start, check);
    finish(report, polys.size(), outcome, check, confirm);
    report.details["pairs_checked"] = pairs.load();
    return report;
}

// ---------------------------------------------------------------- T3 / T4

// A polygon series: the outer polygon, then one more inner ear per step. A
// wheel is a series of one state.
struct Series {
    int v = 0;  // rim size for wheels
    int inner = -1;
    int outer = -1;
    bool wheel = false;
};

struct SeriesSource {
    std::vector<Series> series;
    std::vector<std::vector<std::vector<VertexPair>>> sets;  // by v

    std::vector<PolygonTriangulation> states(const Series& s) const {
        if (s.wheel) return {wheel_polygon(s.v)};
        const auto& d = sets[static_cast<std::size_t>(s.v)];
        const PolygonTriangulation in = polygon_on_base(s.v, d[static_cast<std::size_t>(s.inner)]);
        std::vector<PolygonTriangulation> out{polygon_on_base(s.v, d[static_cast<std::size_t>(s.outer)])};
        for (const ReconstructionStep& step : reconstruction_order(in)) out.push_back(add_ear(out.back(), step.tip));
        return out;
    }
};

// Wheels up to `max_t` rim vertices; every inner/outer pair for v <= all_pairs_v;
// inner polygon 0 with every outer while the final state fits in max_t.
SeriesSource series_source(int all_pairs_v, int max_t) {
    SeriesSource src;
    for (int k = 3; k <= max_t; ++k) src.series.push_back({k, -1, -1, true});
    const int top_v = std::max(all_pairs_v, max_t / 2 + 2);
    src.sets.resize(static_cast<std::size_t>(top_v) + 1);
    for (int v = 3; v <= top_v; ++v) {
        src.sets[static_cast<std::size_t>(v)] = enumerate_diagonal_sets(v);
        const int count = static_cast<int>(src.sets[static_cast<std::size_t>(v)].size());
        for (int i = 0; i < (v <= all_pairs_v ? count : 1); ++i) {
            for (int o = 0; o < count; ++o) src.series.push_back({v, i, o, false});
        }
    }
    return src;
}

std::string series_description(int all_pairs_v, int max_t) {
    return "wheels with 3.." + std::to_string(max_t) + " rim vertices; ear-addition states of all polygon pairs with v <= " +
           std::to_string(all_pairs_v) + " and of inner polygon 0 with every outer polygon up to t_i <= " +
           std::to_string(max_t);
}

AuditReport audit_t3(const AuditBounds& bounds, Clock::time_point start) {
    const int all_pairs_v = pick(bounds.max_v, 7);
    const int max_t = pick(bounds.max_triangles, 16);
    const SeriesSource src = series_source(all_pairs_v, max_t);
    AuditReport report{"T3", series_description(all_pairs_v, max_t), 0, Verdict::Holds, {}, {}, 0};
    std::atomic<std::uint64_t> states{0};
    std::atomic<std::uint64_t> tight{0};
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        for (const auto& p : src.states(src.series[i])) {
            if (p.triangle_count() > max_t) continue;
            ++states;
            const auto count = distinct_cv3_count(p, 40);
            const auto bound = distinct_cv3_lower_bound(p);
            if (count == bound) ++tight;
            if (count < bound) return Json{{"polygon", to_json(p)}, {"count", count}, {"bound", bound}};
        }
        return std::nullopt;
    };
    // Independent path: explicit set of numbering tuples.
    const Confirm confirm = [&](std::size_t, const Json& payload) {
        const PolygonTriangulation p = polygon_from_json(payload["polygon"]);
        std::vector<VertexId> tracked = p.inner_vertices();
        for (VertexId x : p.non_base_vertices()) tracked.push_back(x);
        const DirectSums sums(p);
        std::set<std::vector<int>> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.triangle_count()); ++mask) {
            std::vector<int> img;
            for (VertexId x : tracked) img.push_back(sums.at(x, mask));
            seen.insert(std::move(img));
        }
        return seen.size() < payload["bound"].get<std::uint64_t>();
    };
    auto outcome = run(src.series.size(), bounds, start, check);
    finish(report, src.series.size(), outcome, check, confirm);
    report.details["states_checked"] = states.load();
    report.details["states_at_bound"] = tight.load();
    return report;
}

AuditReport audit_t4(const AuditBounds& bounds, Clock::time_point start) {
    const int all_pairs_v = pick(bounds.max_v, 7);
    const int max_t = pick(bounds.max_triangles, 12);
    const SeriesSource src = series_source(all_pairs_v, max_t);
    AuditReport report{"T4", series_description(all_pairs_v, max_t) + "; every proper edge colouring", 0,
                       Verdict::Holds, {}, {}, 0};
    std::atomic<std::uint64_t> states{0};
    std::atomic<std::uint64_t> colorings{0};
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        for (const auto& p : src.states(src.series[i])) {
            const int t = p.triangle_count();
            if (t > max_t) continue;
            ++states;
            const auto ids = check_polygon_identities(p);
            if (!ids.all()) {
                return Json{{"polygon", to_json(p)},
                            {"identities",
                             {{"euler", ids.euler}, {"faces", ids.faces}, {"edge_sum", ids.edge_sum},
                              {"triangle_count", ids.triangle_count}}}};
            }
            const DirectSums sums(p);
            const auto inner = p.inner_vertices();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
                if (std::any_of(inner.begin(), inner.end(), [&](VertexId x) { return sums.at(x, mask) != 0; })) continue;
                const OrientationAssignment a = assignment_from_mask(t, mask);
                for (std::uint8_t c = 0; c < 3; ++c) {
                    const EdgeColoring ec = ct2_to_e3c(p, a, 0, c);
                    ++colorings;
                    if (!perimeter_parity_check(p, ec)) {
                        return Json{{"polygon", to_json(p)}, {"mask", mask}, {"first_color", c}};
                    }
                }
            }
        }
        return std::nullopt;
    };
    // Independent path: count colours over half-edges.
    const Confirm confirm = [&](std::size_t, const Json& payload) {
        const PolygonTriangulation p = polygon_from_json(payload["polygon"]);
        if (payload.contains("identities")) {
            const int f = p.triangle_count() + 1;
            return p.vertex_count() - p.edge_count() + f != 2 ||
                   p.triangle_count() != p.perimeter_size() + 2 * (p.inner_vertex_count() - 1);
        }
        const auto a = assignment_from_mask(p.triangle_count(), payload["mask"].get<std::uint64_t>());
        const EdgeColoring ec = ct2_to_e3c(p, a, 0, payload["first_color"].get<std::uint8_t>());
        std::array<int, 3> boundary{};
        std::array<int, 3> interior_halves{};
        for (HalfEdgeId h = 0; h < p.half_edge_count(); ++h) {
            auto& bucket = p.is_boundary(h) ? boundary : interior_halves;
            ++bucket[ec.colors[static_cast<std::size_t>(p.edge_of(h))]];
        }
        for (std::size_t x = 0; x < 3; ++x) {
            if (boundary[x] % 2 != p.perimeter_size() % 2) return true;
            if (p.triangle_count() != interior_halves[x] + boundary[x]) return true;
        }
        return false;
    };
    auto outcome = run(src.series.size(), bounds, start, check);
    finish(report, src.series.size(), outcome, check, confirm);
    report.details["states_checked"] = states.load();
    report.details["edge_colorings_checked"] = colorings.load();
    return report;
}

// ---------------------------------------------------------------- C1

AuditReport audit_c1(const AuditBounds& bounds, Clock::time_point start) {
    const int max_v = pick(bounds.max_v, 8);
    const int max_t = pick(bounds.max_triangles, 20);
    struct Instance {
        std::string family;
        Triangulation tri;
    };
    std::vector<Instance> instances;
    for (int level = 0; 2 * (6 + 3 * level - 2) <= max_t; ++level) {
        instances.push_back({"octahedral", octahedral_family(level)});
    }
    for (int v = 3; v <= max_v; ++v) {
        for (auto& tri : polygon_pair_corpus(v)) {
            if (all_degrees_even(tri)) instances.push_back({"even_degree", std::move(tri)});
        }
    }
    AuditReport report{"C1",
                       "octahedral family up to t = " + std::to_string(max_t) +
                           "; even-degree triangulations from polygon pairs with v <= " + std::to_string(max_v),
                       0, Verdict::Holds, {}, {}, 0};
    std::vector<std::uint64_t> counts(instances.size(), 0);
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        const Triangulation& tri = instances[i].tri;
        std::vector<VertexId> all(static_cast<std::size_t>(tri.vertex_count()));
        for (VertexId u = 0; u < tri.vertex_count(); ++u) all[static_cast<std::size_t>(u)] = u;
        counts[i] = distinct_cv3_count(tri, all, 40);
        const auto expected = pow3(tri.vertex_count() - 2);
        if (counts[i] != expected) {
            return Json{{"family", instances[i].family}, {"triangulation", to_json(tri)}, {"count", counts[i]},
                        {"expected", expected}};
        }
        return std::nullopt;
    };
    const Confirm confirm = [&](std::size_t i, const Json& payload) {
        const Triangulation& tri = instances[i].tri;
        const DirectSums sums(tri);
        std::set<std::vector<int>> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tri.triangle_count()); ++mask) {
            std::vector<int> img;
            for (VertexId x = 0; x < tri.vertex_count(); ++x) img.push_back(sums.at(x, mask));
            seen.insert(std::move(img));
        }
        return seen.size() != payload["expected"].get<std::uint64_t>();
    };
    auto outcome = run(instances.size(), bounds, start, check, false);
    finish(report, instances.size(), outcome, check, confirm);
    for (const char* family : {"octahedral", "even_degree"}) {
        Json fam{{"instances", 0}, {"violations", 0}, {"counts", Json::array()}};
        for (std::size_t i = 0; i < instances.size(); ++i) {
            if (instances[i].family != family) continue;
            fam["instances"] = fam["instances"].get<int>() + 1;
            if (outcome.failures[i]) fam["violations"] = fam["violations"].get<int>() + 1;
            fam["counts"].push_back({{"v", instances[i].tri.vertex_count()},
                                     {"count", counts[i]},
                                     {"expected", pow3(instances[i].tri.vertex_count() - 2)}});
        }
        fam["verdict"] = fam["violations"].get<int>() == 0 ? "holds" : "counterexample";
        report.details[family] = fam;
    }
    return report;
}

// ---------------------------------------------------------------- S8

AuditReport audit_s8(const AuditBounds& bounds, Clock::time_point start) {
    const int max_v = pick(bounds.max_v, 8);
    std::vector<Triangulation> corpus;
    for (int v = 3; v <= max_v; ++v) {
        for (auto& tri : polygon_pair_corpus(v)) corpus.push_back(std::move(tri));
    }
    AuditReport report{"S8",
                       "triangulations from polygon pairs with v <= " + std::to_string(max_v) +
                           " (deduplicated); every Hamilton circuit and every base edge",
                       0, Verdict::Holds, {}, {}, 0};
    std::atomic<std::uint64_t> splits{0};
    std::atomic<std::uint64_t> circuits{0};
    const Check check = [&](std::size_t i) -> std::optional<Json> {
        const Triangulation& tri = corpus[i];
        std::optional<Json> failure;
        for_each_hamilton_circuit(tri, [&](const Circuit& c) {
            ++circuits;
            for (std::size_t k = 0; k < c.size(); ++k) {
                const VertexPair base{c[k], c[(k + 1) % c.size()]};
                const HamiltonSplit split = split_by_circuit(tri, c, base);
                const DegenerateReconstruction d = reconstruct_degenerate(split);
                ++splits;
                const std::array<VertexId, 2> frozen{split.base.first, split.base.second};
                const auto a = search_good_ct2(d.polygon, frozen);
                Json where{{"triangulation", to_json(tri)}, {"circuit", c}, {"base", {base.first, base.second}}};
                if (!a) {
                    where["stage"] = "search";
                    failure = where;
                    return false;
                }
                const EdgeColoring ec =
                    ct2_to_e3c(d.polygon, *a, d.polygon.edge_of(d.polygon.boundary_half_edge(1)), ecolor::r);
                if (ec.colors[static_cast<std::size_t>(d.polygon.edge_of(d.polygon.boundary_half_edge(0)))] != ecolor::r) {
                    where["stage"] = "closure";
                    where["assignment"] = to_json(*a);
                    failure = where;
                    return false;
                }
            }
            return true;
        });
        return failure;
    };
    const Confirm confirm = [&](std::size_t i, const Json& payload) {
        const Triangulation& tri = corpus[i];
        const auto c = payload["circuit"].get<Circuit>();
        const VertexPair base{payload["base"][0].get<int>(), payload["base"][1].get<int>()};
        const DegenerateReconstruction d = reconstruct_degenerate(split_by_circuit(tri, c, base));
        const DirectSums sums(d.polygon);
        const auto inner = d.polygon.inner_vertices();
        if (payload["stage"] == "search") {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.polygon.triangle_count()); ++mask) {
                if (std::all_of(inner.begin(), inner.end(), [&](VertexId x) { return sums.at(x, mask) == 0; })) return false;
            }
            return true;
        }
        const auto mask = mask_of(assignment_from_json(payload["assignment"]));
        return sums.at(d.polygon.base().first, mask) != 0;
    };
    auto outcome = run(corpus.size(), bounds, start, check);
    finish(report, corpus.size(), outcome, check, confirm);
    report.details["hamilton_circuits"] = circuits.load();
    report.details["splits_checked"] = splits.load();
    return report;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::ExhaustedBound: return "exhausted-bound";
    }
    return "unknown";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Holds: return 0;
        case Verdict::Counterexample: return 2;
        case Verdict::ExhaustedBound: return 3;
    }
    return 1;
}

const std::vector<std::string>& statement_ids() {
    static const std::vector<std::string> ids{"T1", "T2", "T3", "T4", "C1", "S8", "TBL42"};
    return ids;
}

std::string canonical_statement(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper == "S8-EXISTENCE") return "S8";
    if (upper == "TABLE-4.2" || upper == "TABLE42") return "TBL42";
    for (const auto& id : statement_ids()) {
        if (upper == id) return id;
    }
    throw Error(ErrorCode::UnknownStatement, "unknown statement '" + std::string(name) + "'");
}

AuditReport check_instances(std::string statement, std::string generator, std::size_t n, const AuditBounds& bounds,
                            const InstanceCheck& check, const CounterexampleConfirm& confirm) {
    const auto start = Clock::now();
    AuditReport report{std::move(statement), std::move(generator), 0, Verdict::Holds, {}, {}, 0};
    auto outcome = run(n, bounds, start, check);
    finish(report, n, outcome, check, confirm);
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

AuditReport audit(std::string_view statement, const AuditBounds& bounds) {
    const std::string id = canonical_statement(statement);
    const auto start = Clock::now();
    AuditReport report;
    if (id == "TBL42") report = audit_table(bounds, start);
    if (id == "T1") report = audit_t1(bounds, start);
    if (id == "T2") report = audit_t2(bounds, start);
    if (id == "T3") report = audit_t3(bounds, start);
    if (id == "T4") report = audit_t4(bounds, start);
    if (id == "C1") report = audit_c1(bounds, start);
    if (id == "S8") report = audit_s8(bounds, start);
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

Json to_json(const AuditReport& r, bool timing) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["statement"] = r.statement;
    j["generator"] = r.generator;
    j["instances"] = r.instances;
    j["verdict"] = to_string(r.verdict);
    j["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
    j["details"] = r.details;
    if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

}  // namespace heawood
