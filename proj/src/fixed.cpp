#include "conicfx/fixed.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace conicfx {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::invalid_step: return "invalid_step";
    case ErrorCode::negative_sweep: return "negative_sweep";
    case ErrorCode::sweep_out_of_range: return "sweep_out_of_range";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::not_ellipse: return "not_ellipse";
    case ErrorCode::not_calibrated: return "not_calibrated";
    case ErrorCode::empty_ellipse: return "empty_ellipse";
    case ErrorCode::not_centered: return "not_centered";
    case ErrorCode::invalid_config: return "invalid_config";
    }
    return "unknown";
}

Fixed checked_add(Fixed a, Fixed b) {
    std::int32_t out;
    if (__builtin_add_overflow(a.raw, b.raw, &out))
        fail(ErrorCode::overflow, "fixed-point addition overflows 32 bits");
    return Fixed::from_raw(out);
}

Fixed checked_sub(Fixed a, Fixed b) {
    std::int32_t out;
    if (__builtin_sub_overflow(a.raw, b.raw, &out))
        fail(ErrorCode::overflow, "fixed-point subtraction overflows 32 bits");
    return Fixed::from_raw(out);
}

Fixed from_float(double v) {
    if (!(std::fabs(v) < 32768.0))
        fail(ErrorCode::out_of_range, "value " + std::to_string(v) + " is outside the 16.16 range");
    return Fixed::from_raw(static_cast<std::int32_t>(std::trunc(v * Fixed::one_raw)));
}

PointFx point_from_float(double x, double y) { return {from_float(x), from_float(y)}; }

void check_coordinate(PointFx p, const char* what) {
    constexpr std::int32_t limit = static_cast<std::int32_t>(max_coordinate_px) * Fixed::one_raw;
    auto ok = [](std::int32_t r) { return r > -limit && r < limit; };
    if (!ok(p.x.raw) || !ok(p.y.raw))
        fail(ErrorCode::out_of_range,
             std::string(what) + " exceeds the supported coordinate range of +/-16384 px");
}

}  // namespace conicfx
