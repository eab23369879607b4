#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heawood {

enum class ErrorCode {
    NotATriangulation,
    InconsistentOrientation,
    InvalidPolygon,
    UnknownVertex,
    NotSeparating,
    PerimeterMismatch,
    IncompleteAssignment,
    ImproperInput,
    Inconsistent,
    NotGood,
    NoPreimage,
    DegeneratePolygon,
    TooLarge,
    TipOnBase,
    NotOnPerimeter,
    NotHamiltonian,
    EdgeNotOnCircuit,
    UnknownStatement,
    BadParams,
    PipelineCounterexample,
    NoHamiltonCircuit,
    Uncolorable,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness()` carries element ids that
/// explain the failure when one exists (e.g. the dual cycle on which an
/// orientation assignment fails to propagate).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::vector<int> witness = {});

    ErrorCode code() const noexcept { return code_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::vector<int> witness_;
};

}  // namespace heawood
