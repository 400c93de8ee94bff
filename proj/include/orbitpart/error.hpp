#pragma once

#include <stdexcept>
#include <string>

namespace orbitpart {

/// Failure categories raised by the core library. The C API maps these onto
/// its status codes, and the CLI onto process exit codes.
enum class ErrorCode {
    InvalidOrder,
    InvalidParameter,
    InvalidMatrix,
    NotFiniteWithinCap,
    Precondition,
    DegenerateRepresentation,
    NotFullDimensional,
    PointCount,
    NumericalFailure,
    SizeGuard,
    NotAZero,
    NotApplicable,
    DegenerateInput,
    Parse,
    RenderUnsupported,
    Io,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace orbitpart
