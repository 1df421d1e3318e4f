#pragma once

#include <stdexcept>
#include <string>

namespace exotic {

// Every domain error carries a stable kind so callers can tell which
// invariant was violated without parsing the message.
enum class ErrorKind {
    Crossing,
    DanglingCup,
    RayInsideCup,
    HalfCupInsideCup,
    RayRightOfHalfCup,
    BadIndex,
    BadParameters,
    NotStandard,
    ShapeMismatch,
    NotARay,
    NotAPartition,
    SizeMismatch,
    BadPoint,
    DegreeTooLarge,
    ParameterMismatch,
    IndexOutOfRange,
    GroupTooLarge,
    ParseError,
};

const char* errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(errorKindName(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* kindName() const { return errorKindName(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace exotic
