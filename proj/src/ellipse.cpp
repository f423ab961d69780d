#include "conicfx/ellipse.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

namespace conicfx {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Fixed scaled_sum(Fixed a, double ca, Fixed b, double cb) {
    // Raw values times floats, truncated toward zero on the way back.
    const double v = static_cast<double>(a.raw) * ca + static_cast<double>(b.raw) * cb;
    return Fixed::from_raw(static_cast<std::int32_t>(std::trunc(v)));
}

void check_arc(ArcSpec arc) {
    if (!std::isfinite(arc.astart) || !std::isfinite(arc.asweep))
        fail(ErrorCode::out_of_range, "arc angles must be finite");
    if (std::fabs(arc.asweep) > two_pi)
        fail(ErrorCode::sweep_out_of_range, "|asweep| must not exceed 2*pi");
}

}  // namespace

std::pair<PointFx, PointFx> conjugate_rotate(PointFx p, PointFx q, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const PointFx p2{scaled_sum(p.x, c, q.x, s), scaled_sum(p.y, c, q.y, s)};
    const PointFx q2{scaled_sum(q.x, c, p.x, -s), scaled_sum(q.y, c, p.y, -s)};
    return {p2, q2};
}

std::pair<RealPoint, RealPoint> conjugate_rotate(RealPoint p, RealPoint q, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {{p.x * c + q.x * s, p.y * c + q.y * s}, {q.x * c - p.x * s, q.y * c - p.y * s}};
}

PointFx arc_endpoint(PointFx p, PointFx q, double asweep) {
    const double c = std::cos(asweep);
    const double s = std::sin(asweep);
    return {scaled_sum(p.x, c, q.x, s), scaled_sum(p.y, c, q.y, s)};
}

std::int64_t cross_raw(PointFx p, PointFx q) {
    return static_cast<std::int64_t>(p.x.raw) * q.y.raw - static_cast<std::int64_t>(q.x.raw) * p.y.raw;
}

ConjugateEllipse to_center_relative(const ConjugateEllipse& e) {
    check_coordinate(e.center, "ellipse center");
    check_coordinate(e.p, "conjugate end point P");
    check_coordinate(e.q, "conjugate end point Q");
    // Differences of in-range values fit in 32 bits; only the result range
    // needs checking.
    const PointFx p = {checked_sub(e.p.x, e.center.x), checked_sub(e.p.y, e.center.y)};
    const PointFx q = {checked_sub(e.q.x, e.center.x), checked_sub(e.q.y, e.center.y)};
    check_coordinate(p, "center-relative P");
    check_coordinate(q, "center-relative Q");
    if (cross_raw(p, q) == 0)
        fail(ErrorCode::degenerate, "conjugate diameters are collinear (degenerate ellipse)");
    return {e.center, p, q};
}

void plot_ellipse(const ConjugateEllipse& e, int k, const PointSink& sink) {
    check_step_exponent(k);
    ellipse_core(to_center_relative(e), FIX_2PI, k, sink);
}

Polyline plot_ellipse(const ConjugateEllipse& e, int k) {
    Polyline out;
    out.closed = true;
    plot_ellipse(e, k, [&](PointFx pt) { out.points.push_back(pt); });
    return out;
}

Polyline plot_ellipse(const ConjugateEllipse& e, const FlatnessConfig& cfg) {
    const ConjugateEllipse rel = to_center_relative(e);
    return plot_ellipse(e, angular_inc(rel.p, rel.q, cfg));
}

void plot_elliptic_arc(const ConjugateEllipse& e, ArcSpec arc, int k, const PointSink& sink) {
    check_step_exponent(k);
    check_arc(arc);
    ConjugateEllipse rel = to_center_relative(e);

    if (arc.astart != 0.0) {
        // New conjugate diameter end points P' and Q'
        std::tie(rel.p, rel.q) = conjugate_rotate(rel.p, rel.q, arc.astart);
    }

    // If sweep angle is negative, switch direction
    double asweep = arc.asweep;
    if (asweep < 0.0) {
        rel.q = -rel.q;
        asweep = -asweep;
    }
    ellipse_core(rel, from_float(asweep), k, sink);

    sink(arc_endpoint(rel.p, rel.q, asweep) + rel.center);
}

Polyline plot_elliptic_arc(const ConjugateEllipse& e, ArcSpec arc, int k) {
    Polyline out;
    plot_elliptic_arc(e, arc, k, [&](PointFx pt) { out.points.push_back(pt); });
    return out;
}

Polyline plot_elliptic_arc(const ConjugateEllipse& e, ArcSpec arc, const FlatnessConfig& cfg) {
    const ConjugateEllipse rel = to_center_relative(e);
    return plot_elliptic_arc(e, arc, angular_inc(rel.p, rel.q, cfg));
}

std::vector<RealPoint> to_real(const Polyline& poly) {
    std::vector<RealPoint> out;
    out.reserve(poly.points.size());
    for (const PointFx& p : poly.points)
        out.push_back(to_real(p));
    return out;
}

}  // namespace conicfx
