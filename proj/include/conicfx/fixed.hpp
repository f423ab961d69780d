#pragma once

// 16.16 fixed-point scalar used for every coordinate and angle on the
// plotting path. Arithmetic is exact two's-complement; right shifts are
// arithmetic (floor toward negative infinity), as guaranteed by C++20.

#include <compare>
#include <cstdint>
#include <type_traits>

#include "conicfx/error.hpp"

namespace conicfx {

#ifdef CONICFX_VALIDATE
inline constexpr bool validating_build = true;
#else
inline constexpr bool validating_build = false;
#endif

struct Fixed;

// Overflow-reporting arithmetic. Always available; the plain operators
// use these only when CONICFX_VALIDATE is defined.
Fixed checked_add(Fixed a, Fixed b);
Fixed checked_sub(Fixed a, Fixed b);

struct Fixed {
    std::int32_t raw = 0;

    static constexpr int frac_bits = 16;
    static constexpr std::int32_t one_raw = 1 << frac_bits;

    static constexpr Fixed from_raw(std::int32_t r) noexcept { return Fixed{r}; }

    constexpr auto operator<=>(const Fixed&) const = default;

    constexpr Fixed operator-() const noexcept {
        return Fixed{static_cast<std::int32_t>(0u - static_cast<std::uint32_t>(raw))};
    }

    constexpr Fixed& operator+=(Fixed rhs) noexcept(!validating_build);
    constexpr Fixed& operator-=(Fixed rhs) noexcept(!validating_build);

    // Arithmetic right shift, i.e. multiplication by 2^-k with floor.
    constexpr Fixed operator>>(int k) const noexcept { return Fixed{raw >> k}; }
    constexpr Fixed& operator>>=(int k) noexcept {
        raw >>= k;
        return *this;
    }
};

namespace detail {

constexpr std::int32_t wrap_add(std::int32_t a, std::int32_t b) noexcept {
    return static_cast<std::int32_t>(static_cast<std::uint32_t>(a) + static_cast<std::uint32_t>(b));
}

constexpr std::int32_t wrap_sub(std::int32_t a, std::int32_t b) noexcept {
    return static_cast<std::int32_t>(static_cast<std::uint32_t>(a) - static_cast<std::uint32_t>(b));
}

}  // namespace detail

constexpr Fixed& Fixed::operator+=(Fixed rhs) noexcept(!validating_build) {
#ifdef CONICFX_VALIDATE
    if (!std::is_constant_evaluated()) {
        *this = checked_add(*this, rhs);
        return *this;
    }
#endif
    raw = detail::wrap_add(raw, rhs.raw);
    return *this;
}

constexpr Fixed& Fixed::operator-=(Fixed rhs) noexcept(!validating_build) {
#ifdef CONICFX_VALIDATE
    if (!std::is_constant_evaluated()) {
        *this = checked_sub(*this, rhs);
        return *this;
    }
#endif
    raw = detail::wrap_sub(raw, rhs.raw);
    return *this;
}

constexpr Fixed operator+(Fixed a, Fixed b) noexcept(!validating_build) { return a += b; }
constexpr Fixed operator-(Fixed a, Fixed b) noexcept(!validating_build) { return a -= b; }

// floor(x / 2^k) on the raw integer, 0 <= k <= 31.
constexpr Fixed shr(Fixed x, int k) noexcept { return x >> k; }

// Like shr() but accepts any nonnegative k; shifts past 31 saturate to
// 0 or -1, which is floor(x / 2^k) for every 32-bit x.
constexpr Fixed shr_wide(Fixed x, int k) noexcept { return x >> (k > 31 ? 31 : k); }

// |v| < 32768; truncates toward zero.
Fixed from_float(double v);
constexpr double to_float(Fixed x) noexcept { return static_cast<double>(x.raw) / Fixed::one_raw; }

constexpr Fixed fixed_from_int(std::int32_t px) noexcept { return Fixed{px * Fixed::one_raw}; }

// 2*pi rounded to nearest in 16.16 (truncation would give 411774).
inline constexpr Fixed FIX_2PI = Fixed::from_raw(411775);

// Largest coordinate magnitude accepted at public entry points, in pixels.
// Keeps sums such as xP + xQ inside 32 bits.
inline constexpr double max_coordinate_px = 16384.0;

struct PointFx {
    Fixed x;
    Fixed y;

    constexpr bool operator==(const PointFx&) const = default;
};

constexpr PointFx operator+(PointFx a, PointFx b) { return {a.x + b.x, a.y + b.y}; }
constexpr PointFx operator-(PointFx a, PointFx b) { return {a.x - b.x, a.y - b.y}; }
constexpr PointFx operator-(PointFx a) { return {-a.x, -a.y}; }

PointFx point_from_float(double x, double y);

// Throws out_of_range unless both components are below max_coordinate_px.
void check_coordinate(PointFx p, const char* what);

}  // namespace conicfx
