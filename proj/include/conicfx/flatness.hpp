#pragma once

// Choosing the angular increment eps = 1/2^k from a flatness tolerance.
// The worst chord-to-arc gap on an ellipse equals the gap on its
// auxiliary circle (radius = semi-major axis), so k is picked for that
// circle. The default path estimates the radius with shift-add vector
// lengths; strict mode uses the closed-form radius and the exact sagitta
// plus a bound on the generator's own position error.

#include <algorithm>

#include "conicfx/fixed.hpp"
#include "conicfx/refmodel.hpp"

namespace conicfx {

inline constexpr int default_kmax = 6;
inline constexpr double min_flatness_px = 1.0 / 16.0;
inline constexpr double max_flatness_px = 64.0;

struct FlatnessConfig {
    Fixed flatness = fixed_from_int(1);
    int kmax = default_kmax;
    bool strict = false;   // closed-form radius, exact sagitta + generator error
    bool clamped = false;  // requested flatness was outside [1/16, 64] px

    // Clamps flatness into [1/16, 64] px (setting `clamped`); rejects
    // nonpositive or non-finite flatness and kmax outside [0, 15].
    static FlatnessConfig make(double flatness_px, int kmax = default_kmax, bool strict = false);
};

// Approximate length of (x, y): larger + max(smaller/8, smaller/2 - larger/8).
// Relative error lies in [-2.8%, +0.78%].
constexpr Fixed vlen(Fixed x, Fixed y) {
    std::int32_t a = x.raw < 0 ? -x.raw : x.raw;
    std::int32_t b = y.raw < 0 ? -y.raw : y.raw;
    if (a > b)
        return Fixed::from_raw(a + std::max(b >> 3, (b >> 1) - (a >> 3)));
    return Fixed::from_raw(b + std::max(a >> 3, (a >> 1) - (b >> 3)));
}

// Shift-add estimate of the auxiliary-circle radius from center-relative
// conjugate diameter end points: the longest of |OP|, |OQ| inflated by
// 1/16 against the longest corner half-diagonal |OJ|, |OK| scaled by 3/4.
Fixed aux_radius(PointFx p, PointFx q);

// Exact auxiliary radius, r^2 = (A + C + sqrt((A - C)^2 + B^2)) / 2 with
// A = yP^2 + yQ^2, B = -2(xP yP + xQ yQ), C = xP^2 + xQ^2.
double aux_radius_exact(RealPoint p, RealPoint q);

// Smallest k in [0, kmax] with r*(eps^2/8 + eps^4/128) <= flatness, using
// the truncating shift schedule of the fixed-point test; kmax if none.
int angular_inc_for_radius(Fixed r, Fixed flatness, int kmax);

// Smallest k in [0, kmax] with r*(1 - sqrt(1 - eps^2/4)) <= flatness.
int angular_inc_exact(double r, double flatness, int kmax);

// Bound (px) on how far generated ellipse points stray from the true curve
// at step exponent k: shift truncation plus the truncated initial-value
// series. Strict mode adds it to the sagitta so the measured chord
// deviation stays within the requested flatness.
double generator_error_bound(double r, int k);

// k for the ellipse with center-relative conjugate end points p, q.
int angular_inc(PointFx p, PointFx q, const FlatnessConfig& cfg);

struct AngularIncInfo {
    int k = 0;
    double radius = 0.0;  // auxiliary radius used, px
    bool capped = false;  // k == kmax and the tolerance is still not met
};

AngularIncInfo angular_inc_info(PointFx p, PointFx q, const FlatnessConfig& cfg);

// ceil(1/2 log2(r_max / (8 delta_min))), clamped below at 0.
int kmax_for(double r_max, double delta_min);

}  // namespace conicfx
