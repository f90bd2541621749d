#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuchs {

enum class ErrorCode {
    DegenerateMap,
    AllPointsFixed,
    IndexOutOfRange,
    ModelMismatch,
    CoincidentPoints,
    CoincidentEndpoints,
    InvalidPoint,
    AngleSumExceedsPi,
    NotHyperbolic,
    NonIntegerVertexCycle,
    OddSides,
    DegreeTooSmall,
    GenusTooSmall,
    NonHyperbolicParameters,
    ConstraintViolated,
    DuplicateXi,
    UnknownName,
    BadParamCount,
    RepeatedRoots,
    UnsupportedDegree,
    RootFindingFailure,
    BadDimensions,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::AllPointsFixed: return "AllPointsFixed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::AngleSumExceedsPi: return "AngleSumExceedsPi";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NonIntegerVertexCycle: return "NonIntegerVertexCycle";
    case ErrorCode::OddSides: return "OddSides";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::NonHyperbolicParameters: return "NonHyperbolicParameters";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::DuplicateXi: return "DuplicateXi";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParamCount: return "BadParamCount";
    case ErrorCode::RepeatedRoots: return "RepeatedRoots";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fuchs
