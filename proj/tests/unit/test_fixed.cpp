#include <climits>
#include <cmath>
#include <numbers>
#include <random>

#include "conicfx/fixed.hpp"
#include "doctest.h"

using namespace conicfx;

TEST_CASE("from_float truncates toward zero") {
    CHECK(from_float(1.0).raw == 65536);
    CHECK(from_float(-0.5).raw == -32768);
    CHECK(from_float(2.0 * std::numbers::pi).raw == 411774);
    CHECK(from_float(1e-6).raw == 0);
    CHECK(from_float(-1e-6).raw == 0);
    CHECK(from_float(-1.75 / 65536.0).raw == -1);
}

TEST_CASE("from_float rejects values outside the 16.16 range") {
    CHECK_THROWS_AS(from_float(32768.0), Error);
    CHECK_THROWS_AS(from_float(-32768.0), Error);
    CHECK_THROWS_AS(from_float(std::nan("")), Error);
    CHECK_THROWS_AS(from_float(INFINITY), Error);
    try {
        from_float(1e9);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::out_of_range);
    }
    CHECK(from_float(32767.99).raw > 0);
}

TEST_CASE("to_float(from_float(v)) is within one ulp") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-32767.0, 32767.0);
    for (int i = 0; i < 100000; ++i) {
        const double v = d(rng);
        CHECK(std::fabs(to_float(from_float(v)) - v) < std::ldexp(1.0, -16));
    }
}

TEST_CASE("shr is floor division") {
    CHECK(shr(Fixed::from_raw(65536), 3).raw == 8192);
    CHECK(shr(Fixed::from_raw(-1), 1).raw == -1);
    CHECK(shr(Fixed::from_raw(7), 1).raw == 3);
    CHECK(shr(Fixed::from_raw(-7), 1).raw == -4);

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::int32_t> d(INT32_MIN, INT32_MAX);
    std::vector<std::int32_t> xs = {0, 1, -1, INT32_MAX, INT32_MIN, 65535, -65536};
    for (int i = 0; i < 2000; ++i)
        xs.push_back(d(rng));
    for (std::int32_t x : xs)
        for (int k = 0; k <= 31; ++k) {
            const auto want = static_cast<std::int64_t>(std::floor(static_cast<double>(x) / std::ldexp(1.0, k)));
            REQUIRE(shr(Fixed::from_raw(x), k).raw == want);
        }
}

TEST_CASE("shr_wide saturates the shift count") {
    CHECK(shr_wide(Fixed::from_raw(-5), 40).raw == -1);
    CHECK(shr_wide(Fixed::from_raw(5), 40).raw == 0);
    CHECK(shr_wide(Fixed::from_raw(5), 1).raw == 2);
}

TEST_CASE("FIX_2PI is 2 pi rounded to nearest") {
    CHECK(FIX_2PI.raw == 411775);
    CHECK(std::fabs(FIX_2PI.raw - 2.0 * std::numbers::pi * 65536.0) <= 0.5);
}

TEST_CASE("addition and subtraction") {
    const Fixed a = fixed_from_int(3);
    const Fixed b = from_float(-1.25);
    CHECK((a + b).raw == 3 * 65536 - 81920);
    CHECK((a - b).raw == 3 * 65536 + 81920);
    CHECK((-a).raw == -3 * 65536);

    const Fixed big = Fixed::from_raw(INT32_MAX);
    if constexpr (validating_build) {
        CHECK_THROWS_AS(big + Fixed::from_raw(1), Error);
    } else {
        CHECK((big + Fixed::from_raw(1)).raw == INT32_MIN);
    }
    CHECK_THROWS_AS(checked_add(big, Fixed::from_raw(1)), Error);
    CHECK_THROWS_AS(checked_sub(Fixed::from_raw(INT32_MIN), Fixed::from_raw(1)), Error);
    CHECK(checked_add(a, b) == a + b);
}

TEST_CASE("constant evaluation") {
    constexpr Fixed x = fixed_from_int(2) + Fixed::from_raw(3);
    static_assert(x.raw == 131075);
    static_assert(shr(Fixed::from_raw(-3), 1).raw == -2);
    static_assert(to_float(fixed_from_int(-2)) == -2.0);
}

TEST_CASE("coordinate range") {
    CHECK_NOTHROW(check_coordinate(point_from_float(16383.0, -16383.0), "p"));
    CHECK_THROWS_AS(check_coordinate(point_from_float(16384.0, 0.0), "p"), Error);
    CHECK_THROWS_AS(check_coordinate(point_from_float(0.0, -16384.0), "p"), Error);
    const PointFx p = point_from_float(1.5, -2.0);
    CHECK(p.x.raw == 98304);
    CHECK(p.y.raw == -131072);
    CHECK((p + p).x.raw == 196608);
    CHECK((p - p) == PointFx{});
}

TEST_CASE("error codes have stable names") {
    CHECK(to_string(ErrorCode::degenerate) == "degenerate");
    CHECK(to_string(ErrorCode::not_ellipse) == "not_ellipse");
    CHECK(to_string(ErrorCode::sweep_out_of_range) == "sweep_out_of_range");
    CHECK(to_string(ErrorCode::invalid_config) == "invalid_config");
}
