#pragma once

#include <stdexcept>
#include <string>

namespace abelgraph {

// Every failure the library can report. The first block covers bad input or
// violated preconditions; the final code marks a broken internal theory
// invariant, which callers should treat as a bug rather than a usage error.
enum class ErrorCode {
    ParseError,
    EmptySet,
    DuplicateId,
    Disconnected,
    UnknownVertex,
    UnknownEdge,
    UnknownPoint,
    LimitExceeded,
    HostMismatch,
    IndexMismatch,
    TotalDegreeMismatch,
    NotConnected,
    NotProper,
    GenusTooSmall,
    NotSemistable,
    NotQuasistable,
    NotStable,
    NotSemibalanced,
    NotTwoComponent,
    Not1General,
    MultipleHalfNodes,
    SpecError,
    InvariantViolation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

// Checks that must hold by theory, not by courtesy of the caller.
inline void require_invariant(bool ok, const std::string& message) {
    if (!ok) fail(ErrorCode::InvariantViolation, message);
}

inline bool is_invariant_violation(ErrorCode code) {
    return code == ErrorCode::InvariantViolation;
}

}  // namespace abelgraph
