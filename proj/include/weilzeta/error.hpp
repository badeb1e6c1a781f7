#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weilzeta {

enum class ErrorKind {
    ParseError,
    InhomogeneousPolynomial,
    NotPrime,
    SizeExceeded,
    DivisionByZero,
    UnsupportedVariety,
    InsufficientCounts,
    NoRationalFit,
    WeightAmbiguous,
    InternalZero,
    NotFinite,
    HypothesisFailed,
    NotIdempotentModP,
    NotUnitModP,
    MinPolyInconsistent,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Exit code used by the command-line front end for an error kind.
int exit_code(ErrorKind kind);

}  // namespace weilzeta
