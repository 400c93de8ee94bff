#include "orbitpart/error.hpp"

namespace orbitpart {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidOrder: return "invalid-order";
        case ErrorCode::InvalidParameter: return "invalid-parameter";
        case ErrorCode::InvalidMatrix: return "invalid-matrix";
        case ErrorCode::NotFiniteWithinCap: return "not-finite-within-cap";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::DegenerateRepresentation: return "degenerate-representation";
        case ErrorCode::NotFullDimensional: return "not-full-dimensional";
        case ErrorCode::PointCount: return "point-count";
        case ErrorCode::NumericalFailure: return "numerical-failure";
        case ErrorCode::SizeGuard: return "size-guard";
        case ErrorCode::NotAZero: return "not-a-zero";
        case ErrorCode::NotApplicable: return "not-applicable";
        case ErrorCode::DegenerateInput: return "degenerate-input";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::RenderUnsupported: return "render-unsupported";
        case ErrorCode::Io: return "io";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

}  // namespace orbitpart
