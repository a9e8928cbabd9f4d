#include "hypmorse/error.hpp"

namespace hypmorse {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Domain: return "domain";
        case ErrorCode::Pole: return "pole";
        case ErrorCode::NonConvergence: return "non_convergence";
        case ErrorCode::TailDivergence: return "tail_divergence";
        case ErrorCode::ConvergenceViolated: return "convergence_violated";
        case ErrorCode::OutsideSupport: return "outside_support";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::Calibration: return "calibration";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

}  // namespace hypmorse
