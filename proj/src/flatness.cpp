#include "conicfx/flatness.hpp"

#include <cmath>
#include <string>

#include "conicfx/minsky.hpp"

namespace conicfx {

FlatnessConfig FlatnessConfig::make(double flatness_px, int kmax, bool strict) {
    if (!std::isfinite(flatness_px) || flatness_px <= 0.0)
        fail(ErrorCode::invalid_config, "flatness must be a positive number of pixels");
    if (!valid_step_exponent(kmax))
        fail(ErrorCode::invalid_config, "kmax=" + std::to_string(kmax) + " must lie in [0, 15]");

    FlatnessConfig cfg;
    cfg.kmax = kmax;
    cfg.strict = strict;
    const double clamped = std::clamp(flatness_px, min_flatness_px, max_flatness_px);
    cfg.clamped = clamped != flatness_px;
    cfg.flatness = from_float(clamped);
    return cfg;
}

Fixed aux_radius(PointFx p, PointFx q) {
    const Fixed dP = vlen(p.x, p.y);
    const Fixed dQ = vlen(q.x, q.y);
    const Fixed dJ = vlen(p.x + q.x, p.y + q.y);
    const Fixed dK = vlen(p.x - q.x, p.y - q.y);
    const Fixed r1 = std::max(dP, dQ);
    const Fixed r2 = std::max(dJ, dK);

    // Both operands are nonnegative, so the shifts equal the divisions.
    return std::max(r1 + (r1 >> 4), r2 - (r2 >> 2));
}

double aux_radius_exact(RealPoint p, RealPoint q) {
    const double A = p.y * p.y + q.y * q.y;
    const double B = -2.0 * (p.x * p.y + q.x * q.y);
    const double C = p.x * p.x + q.x * q.x;
    return std::sqrt(0.5 * (A + C + std::hypot(A - C, B)));
}

int angular_inc_for_radius(Fixed r, Fixed flatness, int kmax) {
    Fixed err2 = r >> 3;  // 2nd-order term
    Fixed err4 = r >> 7;  // 4th-order term

    for (int k = 0; k < kmax; ++k) {
        if (flatness >= err2 + err4)
            return k;

        err2 >>= 2;
        err4 >>= 4;
    }
    return kmax;
}

int angular_inc_exact(double r, double flatness, int kmax) {
    for (int k = 0; k < kmax; ++k) {
        if (chord_to_arc_exact(r, std::ldexp(1.0, -k)) <= flatness)
            return k;
    }
    return kmax;
}

double generator_error_bound(double r, int k) {
    // Floor truncation in the two shifts has a mean of half an ulp per
    // step; summed through the rotation it stays within about sqrt(2) 2^k
    // ulps. 3 * 2^k leaves room for the fluctuating part.
    const double truncation = 3.0 * std::ldexp(1.0, k - 16);
    // Initial-value series stops after the x^3 term, x = eps^2 / 4.
    const double x = std::ldexp(1.0, -2 * k) / 4.0;
    const double series = r * (5.0 / 128.0) * x * x * x * x / ((1.0 - x) * std::sqrt(1.0 - x));
    return truncation + series;
}

AngularIncInfo angular_inc_info(PointFx p, PointFx q, const FlatnessConfig& cfg) {
    AngularIncInfo info;
    if (cfg.strict) {
        info.radius = aux_radius_exact(to_real(p), to_real(q));
        const double f = to_float(cfg.flatness);
        auto fits = [&](int k) {
            return chord_to_arc_exact(info.radius, std::ldexp(1.0, -k)) + generator_error_bound(info.radius, k) <= f;
        };
        info.k = cfg.kmax;
        for (int k = 0; k < cfg.kmax; ++k)
            if (fits(k)) {
                info.k = k;
                break;
            }
        info.capped = !fits(info.k);
    } else {
        const Fixed r = aux_radius(p, q);
        info.radius = to_float(r);
        info.k = angular_inc_for_radius(r, cfg.flatness, cfg.kmax);
        info.capped = info.k == cfg.kmax &&
                      !(cfg.flatness >= shr_wide(r, 3 + 2 * info.k) + shr_wide(r, 7 + 4 * info.k));
    }
    return info;
}

int angular_inc(PointFx p, PointFx q, const FlatnessConfig& cfg) {
    return angular_inc_info(p, q, cfg).k;
}

int kmax_for(double r_max, double delta_min) {
    if (!(r_max > 0.0) || !(delta_min > 0.0))
        fail(ErrorCode::out_of_range, "kmax_for requires positive radius and flatness");
    const double bound = 0.5 * std::log2(r_max / (8.0 * delta_min));
    return bound <= 0.0 ? 0 : static_cast<int>(std::ceil(bound));
}

}  // namespace conicfx
