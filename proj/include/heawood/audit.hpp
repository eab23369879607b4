#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/io.hpp"

namespace heawood {

enum class Verdict { Holds, Counterexample, ExhaustedBound };

std::string_view to_string(Verdict v);

/// Process exit code for a verdict: 0 holds, 2 counterexample, 3 exhausted.
int exit_code(Verdict v);

// Zero means "use the statement's default".
struct AuditBounds {
    int max_v = 0;
    int max_triangles = 0;
    double budget_seconds = 0;  // wall clock; instances not started in time are not checked
    int jobs = 0;               // worker threads; 0 = hardware concurrency
};

struct AuditReport {
    std::string statement;
    std::string generator;
    std::uint64_t instances = 0;
    Verdict verdict = Verdict::Holds;
    std::optional<Json> counterexample;
    Json details = Json::object();
    double elapsed_seconds = 0;
};

using InstanceCheck = std::function<std::optional<Json>(std::size_t)>;
using CounterexampleConfirm = std::function<bool(std::size_t, const Json&)>;

/// Runs `check` on instances 0..n-1 across `bounds.jobs` threads. A non-empty
/// result is a counterexample payload; the one with the smallest index is
/// re-checked with `confirm` and reported. Thrown errors count as
/// counterexamples and are re-checked by running `check` again.
/// Errors: Inconsistent when the re-check disagrees.
AuditReport check_instances(std::string statement, std::string generator, std::size_t n, const AuditBounds& bounds,
                            const InstanceCheck& check, const CounterexampleConfirm& confirm);

/// Statement ids: T1, T2, T3, T4, C1, S8, TBL42.
const std::vector<std::string>& statement_ids();

/// Maps aliases (S8-existence, table-4.2, case-insensitive ids) to an id.
/// Errors: UnknownStatement.
std::string canonical_statement(std::string_view name);

/// Exhaustively checks one statement within `bounds`. A counterexample is
/// re-checked along a second computation before it is reported.
/// Errors: UnknownStatement.
AuditReport audit(std::string_view statement, const AuditBounds& bounds = {});

/// Elapsed time is included only with `timing`, keeping the rest byte-stable.
Json to_json(const AuditReport& r, bool timing = false);

}  // namespace heawood
