#include "mwisp/error.hpp"

namespace mwisp {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::SelfIntersecting: return "SelfIntersecting";
        case ErrorCode::EmptyInstance: return "EmptyInstance";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
        case ErrorCode::DegenerateVertex: return "DegenerateVertex";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::PreconditionHeavyTriangle: return "PreconditionHeavyTriangle";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::TooManyCollisions: return "TooManyCollisions";
        case ErrorCode::WalkDiverged: return "WalkDiverged";
        case ErrorCode::DisconnectedLines: return "DisconnectedLines";
        case ErrorCode::NoBalancedCycle: return "NoBalancedCycle";
        case ErrorCode::BalanceUnrepairable: return "BalanceUnrepairable";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace mwisp
