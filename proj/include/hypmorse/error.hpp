#pragma once

#include <stdexcept>
#include <string>

namespace hypmorse {

// Mirrors hm_status in hypmorse.h; the C layer maps one onto the other 1:1.
enum class ErrorCode {
    InvalidArgument = 1,
    Domain,                 // argument outside the documented evaluation range
    Pole,                   // gamma / parameter pole
    NonConvergence,         // series or quadrature did not reach tolerance
    TailDivergence,         // semi-infinite integrand is not decaying
    ConvergenceViolated,    // caller-side convergence precondition unmet
    OutsideSupport,
    Unsupported,            // e.g. 2k not an integer where forms require it
    Calibration,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hypmorse
