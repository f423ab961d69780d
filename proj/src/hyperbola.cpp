#include "conicfx/hyperbola.hpp"

#include <cmath>
#include <tuple>

namespace conicfx {

namespace {

Fixed scaled_sum(Fixed a, double ca, Fixed b, double cb) {
    const double v = static_cast<double>(a.raw) * ca + static_cast<double>(b.raw) * cb;
    return Fixed::from_raw(static_cast<std::int32_t>(std::trunc(v)));
}

struct Checked {
    PointFx center;
    PointFx p;
    PointFx q;
};

Checked check_hyperbola(const ConjugateHyperbola& h, double astart, double asweep) {
    if (!std::isfinite(astart) || !std::isfinite(asweep))
        fail(ErrorCode::out_of_range, "hyperbolic angles must be finite");
    if (std::fabs(asweep) > max_hyperbolic_sweep)
        fail(ErrorCode::sweep_out_of_range, "|asweep| must not exceed 8 for hyperbolic arcs");

    check_coordinate(h.center, "hyperbola center");
    check_coordinate(h.p, "conjugate end point P");
    check_coordinate(h.q, "conjugate end point Q");
    const PointFx p = {checked_sub(h.p.x, h.center.x), checked_sub(h.p.y, h.center.y)};
    const PointFx q = {checked_sub(h.q.x, h.center.x), checked_sub(h.q.y, h.center.y)};
    if (cross_raw(p, q) == 0)
        fail(ErrorCode::degenerate, "conjugate diameters are collinear (degenerate hyperbola)");

    // |xP cosh t + xQ sinh t| <= (|xP| + |xQ|) cosh(max |t|) bounds both the
    // plotted coordinate and the generator's conjugate component.
    const double t_max = std::max(std::fabs(astart), std::fabs(astart + asweep));
    const double grow = std::cosh(t_max);
    const double ext_x = (std::fabs(to_float(p.x)) + std::fabs(to_float(q.x))) * grow;
    const double ext_y = (std::fabs(to_float(p.y)) + std::fabs(to_float(q.y))) * grow;
    if (ext_x + std::fabs(to_float(h.center.x)) >= max_coordinate_px ||
        ext_y + std::fabs(to_float(h.center.y)) >= max_coordinate_px)
        fail(ErrorCode::out_of_range, "hyperbolic arc leaves the supported coordinate range");
    return {h.center, p, q};
}

}  // namespace

std::pair<PointFx, PointFx> hyperbolic_rotate(PointFx p, PointFx q, double phi) {
    const double c = std::cosh(phi);
    const double s = std::sinh(phi);
    const PointFx p2{scaled_sum(p.x, c, q.x, s), scaled_sum(p.y, c, q.y, s)};
    const PointFx q2{scaled_sum(q.x, c, p.x, s), scaled_sum(q.y, c, p.y, s)};
    return {p2, q2};
}

std::pair<RealPoint, RealPoint> hyperbolic_rotate(RealPoint p, RealPoint q, double phi) {
    const double c = std::cosh(phi);
    const double s = std::sinh(phi);
    return {{p.x * c + q.x * s, p.y * c + q.y * s}, {q.x * c + p.x * s, q.y * c + p.y * s}};
}

void plot_hyperbolic_arc(const ConjugateHyperbola& h, double astart, double asweep, int k,
                         const PointSink& sink, HyperbolaOptions opts) {
    check_step_exponent(k);
    const Checked in = check_hyperbola(h, astart, asweep);

    // Restarts and the end point are rotated from the original P and Q so
    // truncation in the start rotation is not amplified.
    PointFx p0 = in.p;
    PointFx q0 = in.q;
    if (astart != 0.0)
        std::tie(p0, q0) = hyperbolic_rotate(in.p, in.q, astart);

    const bool forward = asweep >= 0.0;
    const long count = shr(from_float(std::fabs(asweep)), 16 - k).raw;
    const long interval = opts.reseed_interval < 0 ? (1L << k) : opts.reseed_interval;
    const double step = hyper_step_angle(k);

    Fixed xP = p0.x;
    Fixed yP = p0.y;
    Fixed xQ = hyper_initial_value(q0.x, p0.x, k);
    Fixed yQ = hyper_initial_value(q0.y, p0.y, k);

    sink(p0 + in.center);
    for (long i = 0; i < count; ++i) {
        if (interval > 0 && i > 0 && i % interval == 0) {
            const double t = forward ? i * step : -(i * step);
            const auto [p, q] = hyperbolic_rotate(in.p, in.q, astart + t);
            xP = p.x;
            yP = p.y;
            xQ = hyper_initial_value(q.x, p.x, k);
            yQ = hyper_initial_value(q.y, p.y, k);
        }
        if (forward) {
            hyper_gen(xQ, xP, k);
            hyper_gen(yQ, yP, k);
        } else {
            hyper_gen_reverse(xQ, xP, k);
            hyper_gen_reverse(yQ, yP, k);
        }
        sink(PointFx{xP + in.center.x, yP + in.center.y});
    }

    if (asweep != 0.0)
        sink(hyperbolic_rotate(in.p, in.q, astart + asweep).first + in.center);
}

Polyline plot_hyperbolic_arc(const ConjugateHyperbola& h, double astart, double asweep, int k,
                             HyperbolaOptions opts) {
    Polyline out;
    plot_hyperbolic_arc(h, astart, asweep, k, [&](PointFx pt) { out.points.push_back(pt); }, opts);
    return out;
}

}  // namespace conicfx
