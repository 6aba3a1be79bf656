#include "bestprox/error.hpp"

#include <utility>

namespace bestprox {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyCore: return "EmptyCore";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::UnsampledPoint: return "UnsampledPoint";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::NoAttainment: return "NoAttainment";
    case ErrorCode::InsufficientTrace: return "InsufficientTrace";
    case ErrorCode::NotCoincidence: return "NotCoincidence";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SampleMissingImages: return "SampleMissingImages";
    case ErrorCode::SampleNotClosed: return "SampleNotClosed";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : Error(ErrorCode::ParseError,
            source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace bestprox
