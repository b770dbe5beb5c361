#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catgr {

enum class ErrorCode {
    DimensionMismatch,
    RingMismatch,
    NotInvertible,
    NotSquare,
    NotInRing,
    InvalidArgument,
    CyclicQuiver,
    UnknownObject,
    UnknownMorphism,
    ObjectMismatch,
    CategoryMismatch,
    NotAUnit,
    InvalidRepresentation,
    InvalidModule,
    InvalidFunctor,
    NotStrict,
    NotRingValued,
    ParseError,
    MissingSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure that is not a validation finding surfaces as a catgr::Error.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// what() without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace catgr
