#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwisp {

enum class ErrorCode {
    // Bad input or unsatisfiable request; the caller can fix it.
    InvalidInput,
    SelfIntersecting,
    EmptyInstance,
    UnknownId,
    GenerationFailed,
    NotGeneralPosition,
    DegenerateVertex,
    CapExceeded,
    PreconditionHeavyTriangle,
    IoError,
    // Broken internal invariants. These indicate a bug, never bad input.
    TooManyCollisions,
    WalkDiverged,
    DisconnectedLines,
    NoBalancedCycle,
    BalanceUnrepairable,
    InternalInvariant,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that signal an implementation bug rather than bad input.
constexpr bool is_internal(ErrorCode code) {
    return code >= ErrorCode::TooManyCollisions;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mwisp
