// One pass/fail line per acceptance criterion. Exit status is nonzero when any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <unistd.h>

#include "heawood/audit.hpp"
#include "heawood/counting.hpp"
#include "heawood/generators.hpp"
#include "heawood/io.hpp"
#include "heawood/polygon_ops.hpp"
#include "heawood/solver.hpp"

#ifndef HEAWOOD_CLI
#error "HEAWOOD_CLI must name the command-line binary"
#endif

using namespace heawood;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

Outcome fail(std::string note) { return {false, std::move(note)}; }

// Table rows for t = 1..7, counts of tuples over {1,2} summing to 0, 1, 2 mod 3.
constexpr std::array<std::array<std::uint64_t, 3>, 7> kTable{{
    {0, 1, 1}, {2, 1, 1}, {2, 3, 3}, {6, 5, 5}, {10, 11, 11}, {22, 21, 21}, {42, 43, 43},
}};

Outcome table() {
    for (int t = 1; t <= 7; ++t) {
        for (int r = 0; r < 3; ++r) {
            const auto want = kTable[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(r)];
            if (brute_force_count(t, r) != want || closed_form_count(t, r) != want) {
                return fail("mismatch at t=" + std::to_string(t) + " residue " + std::to_string(r));
            }
        }
    }
    const auto report = audit("TBL42");
    if (report.verdict != Verdict::Holds) return fail("table audit: " + std::string(to_string(report.verdict)));
    return {true, "21 entries"};
}

Outcome catalan() {
    const std::array<std::uint64_t, 7> want{1, 1, 2, 5, 14, 42, 132};
    for (int v = 2; v <= 8; ++v) {
        const auto n = enumerate_polygons_on_base(v).size();
        if (n != want[static_cast<std::size_t>(v - 2)]) return fail("v=" + std::to_string(v) + " gave " + std::to_string(n));
    }
    return {true, "1 1 2 5 14 42 132"};
}

Outcome from_audit(std::string_view id, const AuditBounds& bounds = {}) {
    const auto r = audit(id, bounds);
    std::ostringstream note;
    note << r.instances << " instances";
    if (r.verdict != Verdict::Holds) return fail(note.str() + ", " + std::string(to_string(r.verdict)) + ": " + dump(to_json(r)));
    return {true, note.str()};
}

Outcome bijection() {
    if (enumerate_polygons_on_base(10).size() != 1430) return fail("expected 1430 polygons at v=10");
    return from_audit("T1", {10, 0, 0, 0});
}

Outcome bound() {
    const auto wheel = wheel_polygon(5);
    const auto n = distinct_cv3_count(wheel);
    if (distinct_cv3_lower_bound(wheel) != 24 || n < 24) return fail("pentagon wheel gave " + std::to_string(n));
    auto r = from_audit("T3", {0, 16, 0, 0});
    r.note += ", pentagon wheel " + std::to_string(n);
    return r;
}

Outcome octahedron_counts() {
    const Triangulation o = octahedron();
    std::vector<VertexId> all(static_cast<std::size_t>(o.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    const auto distinct = distinct_cv3_count(o, all);
    if (distinct != 81) return fail("distinct numberings " + std::to_string(distinct));
    const auto a = search_good_ct2(o, {});
    if (!a) return fail("no good assignment");
    const EdgeColoring e = ct2_to_e3c(o, *a, 0, ecolor::r);
    const VertexColoring v = e3c_to_v4c(o, e, 0, vcolor::C);
    const auto nv = orbit(o, v).size();
    const auto ne = orbit(o, e).size();
    const auto na = orbit(*a).size();
    if (nv != 24 || ne != 6 || na != 2) {
        return fail("orbits " + std::to_string(nv) + "/" + std::to_string(ne) + "/" + std::to_string(na));
    }
    return {true, "81 numberings, orbits 24/6/2"};
}

Outcome solver() {
    int checked = 0;
    auto check = [&](const Triangulation& tri, const std::string& name) -> std::optional<std::string> {
        ++checked;
        const SolveResult r = four_color(tri);
        if (!is_proper(tri, r.coloring) || colors_used(r.coloring) > 4) return name + ": improper";
        if (replay(tri, r.trace) != r.coloring) return name + ": trace does not replay";
        // Feasibility agreement: the oracle must also find a 4-colouring.
        if (!is_proper(tri, four_color_oracle(tri, 4, 20))) return name + ": oracle improper";
        return std::nullopt;
    };
    for (int v = 3; v <= 8; ++v) {
        const auto corpus = polygon_pair_corpus(v);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (auto bad = check(corpus[i], "corpus v=" + std::to_string(v) + " #" + std::to_string(i))) return fail(*bad);
        }
    }
    for (int depth = 0; depth <= 8; ++depth) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            if (auto bad = check(stacked(depth, seed), "stacked seeded " + std::to_string(depth))) return fail(*bad);
        }
        if (auto bad = check(stacked(depth), "stacked " + std::to_string(depth))) return fail(*bad);
    }
    if (auto bad = check(icosahedron(), "icosahedron")) return fail(*bad);
    if (auto bad = check(complete4(), "K4")) return fail(*bad);
    if (colors_used(four_color(complete4()).coloring) != 4) return fail("K4 must use 4 colours");
    if (auto bad = check(octahedron(), "octahedron")) return fail(*bad);
    if (colors_used(four_color(octahedron()).coloring) > 3) return fail("octahedron used 4 colours");
    return {true, std::to_string(checked) + " triangulations"};
}

// Either outcome counts, provided it is reported with the matching exit code.
Outcome existence() {
    const auto r = audit("S8", {8, 0, 0, 0});
    std::ostringstream note;
    note << to_string(r.verdict) << ", " << r.instances << " instances, exit " << exit_code(r.verdict);
    if (r.verdict == Verdict::Counterexample) {
        if (!r.counterexample || exit_code(r.verdict) != 2) return fail(note.str() + " without a witness");
        return {true, note.str()};
    }
    if (r.verdict != Verdict::Holds) return fail(note.str());
    note << ", " << r.details.value("splits_checked", 0) << " splits";
    return {true, note.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / ("heawood-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = HEAWOOD_CLI;
    auto path = [&](const std::string& name) { return (dir / name).string(); };
    auto run = [&](const std::string& args) {
        const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    if (run("gen octahedral --level 1 --out " + path("g.json")) != 0) return fail("gen failed");
    if (run("gen polygon-pair --v 8 --i 3 --o 17 --out " + path("p.json")) != 0) return fail("gen failed");

    // Each entry: arguments with {} standing for the output path.
    const std::vector<std::string> commands{
        "gen stacked --depth 5 --seed 7 --out {}",
        "gen polygon-pair --v 9 --seed 11 --out {}",
        "enum --v 7 -o {}",
        "split " + path("g.json") + " -o {}",
        "solve " + path("g.json") + " -o {}",
        "solve " + path("p.json") + " --trace {}",
        "solve " + path("p.json") + " --all-circuits {}",
        "audit --statement C1 --report {}",
        "audit --statement T2 --max-v 7 --report {}",
        "export " + path("g.json") + " --format dot -o {}",
    };
    int n = 0;
    for (const auto& c : commands) {
        std::string outputs[2];
        for (int k = 0; k < 2; ++k) {
            std::string args = c;
            const std::string out = path("out" + std::to_string(k));
            args.replace(args.find("{}"), 2, out);
            // Thread count must not matter either.
            args += k == 0 ? " --jobs 1" : " --jobs 4";
            const int rc = run(args);
            if (rc != 0) return fail("'" + c + "' exited with " + std::to_string(rc));
            outputs[k] = slurp(out);
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) return fail("'" + c + "' differs between runs");
        ++n;
    }
    // convert needs a scheme document from solve.
    if (run("solve " + path("g.json") + " -o " + path("v4c.json")) != 0) return fail("solve failed");
    std::string converted[2];
    for (int k = 0; k < 2; ++k) {
        const std::string out = path("conv" + std::to_string(k));
        if (run("convert --graph " + path("g.json") + " --input " + path("v4c.json") + " --to ct2 -o " + out) != 0) {
            return fail("convert failed");
        }
        converted[k] = slurp(out);
    }
    if (converted[0].empty() || converted[0] != converted[1]) return fail("convert differs between runs");
    ++n;
    fs::remove_all(dir);
    return {true, std::to_string(n) + " commands byte-identical"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"sum-count table", table},
        {"polygon enumeration", catalan},
        {"numbering bijection", bijection},
        {"difference property", [] { return from_audit("T2", {8, 0, 0, 0}); }},
        {"distinct numbering bound", bound},
        {"perimeter parity and identities", [] { return from_audit("T4", {0, 12, 0, 0}); }},
        {"octahedron counts", octahedron_counts},
        {"solver validity", solver},
        {"existence audit", existence},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("threw: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failed;
        std::printf("criterion %2zu %-32s %s  %.2fs  %s\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL", secs,
                    o.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
