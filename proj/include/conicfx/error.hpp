#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conicfx {

enum class ErrorCode {
    out_of_range,       // value outside the representable or documented range
    overflow,           // 32-bit fixed-point overflow
    invalid_step,       // angular-increment exponent k outside [0, 16)
    negative_sweep,
    sweep_out_of_range, // |sweep| beyond the single-revolution / hyperbolic limit
    degenerate,         // collinear conjugate diameters or singular conic
    not_ellipse,        // B^2 - 4AC >= 0
    not_calibrated,     // strict mode and calibration number != 1
    empty_ellipse,      // ellipse test passes but no real points (A <= 0 or F >= 0)
    not_centered,       // origin-centered form required (D, E != 0)
    invalid_config,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace conicfx
