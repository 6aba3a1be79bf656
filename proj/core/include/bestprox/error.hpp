#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bestprox {

/// Failure categories raised by the library. Every public operation that can
/// fail throws bestprox::Error carrying one of these codes.
enum class ErrorCode {
    InvalidMetric,        // distance table violates a metric axiom
    InvalidProblem,       // subset / mapping / tolerance invariant broken
    InvalidArgument,      // bad parameter to an operation
    EmptyCore,            // proximal core S1^0 or S2^0 is empty
    UnknownPoint,         // label or index not in the relevant set
    NonPositiveArgument,  // F evaluated at alpha <= 0
    UnsampledPoint,       // custom F table has no entry for alpha
    NoPreimage,           // phi(x) has no psi-preimage in the core
    NoAttainment,         // no core point attains the set distance to phi(x)
    InsufficientTrace,    // audit needs three distinct consecutive iterates
    NotCoincidence,       // phi(x) != psi(x)
    VerificationFailed,   // constructed point failed the oracle cross-check
    SampleMissingImages,  // gallery sample lacks required map images
    SampleNotClosed,      // gallery sample not closed under the maps
    EnumerationTooLarge,  // certifier product exceeds the configured guard
    ParseError,           // problem file could not be read
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure anchored to a location in a problem file (1-based line/column).
class ParseError : public Error {
public:
    ParseError(std::string source, int line, int column, const std::string& message);

    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string source_;
    int line_;
    int column_;
    std::string detail_;
};

}  // namespace bestprox
