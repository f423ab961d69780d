#pragma once

// Error-corrected ellipse and elliptic-arc plotting.
//
// An ellipse is given by its center and the end points P, Q of a pair of
// conjugate diameters (the midpoints of two adjacent sides of the enclosing
// parallelogram). Points are generated at parameter angles n*alpha where
// sin(alpha/2) = eps/2 and eps = 1/2^k, using two shift-add circle
// generators whose starting values are pre-corrected so every plotted
// point lies on the ellipse to fixed-point precision.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "conicfx/fixed.hpp"
#include "conicfx/flatness.hpp"
#include "conicfx/minsky.hpp"
#include "conicfx/refmodel.hpp"

namespace conicfx {

struct ConjugateEllipse {
    PointFx center;
    PointFx p;
    PointFx q;
};

// Start and sweep on the unit-circle pre-image, radians. Positive angles
// run from P toward Q.
struct ArcSpec {
    double astart = 0.0;
    double asweep = 0.0;
};

struct Polyline {
    std::vector<PointFx> points;
    bool closed = false;  // the edge back to points.front() is implied, never stored
};

using PointSink = std::function<void(PointFx)>;

// x_P*cos(phi) + x_Q*sin(phi) etc. P' is the point at angle phi, and
// P', Q' are conjugate diameter end points of the same ellipse. The
// fixed-point overload truncates toward zero, as the plotting path does.
std::pair<PointFx, PointFx> conjugate_rotate(PointFx p, PointFx q, double phi);
std::pair<RealPoint, RealPoint> conjugate_rotate(RealPoint p, RealPoint q, double phi);

// Center-relative arc end point P*cos(asweep) + Q*sin(asweep), truncated.
PointFx arc_endpoint(PointFx p, PointFx q, double asweep);

// x_P*y_Q - x_Q*y_P on raw values (exact in 64 bits).
std::int64_t cross_raw(PointFx p, PointFx q);

namespace detail {

// Plots the start point, then `count` corrected steps. xQ and yQ must
// already hold the corrected initial values. Per point: four adds and four
// shifts in the two generators plus two adds for the center translation.
template <class T, class Emit>
void ellipse_loop(T xC, T yC, T xP, T yP, T xQ, T yQ, long count, int k, Emit&& emit) {
    emit(xP + xC, yP + yC);
    for (long i = 0; i < count; ++i) {
        circle_gen(xQ, xP, k);
        circle_gen(yQ, yP, k);
        emit(xP + xC, yP + yC);
    }
}

}  // namespace detail

// Core plotter: p and q are center-relative, sweep >= 0 in 16.16 radians.
// Emits the start point P + center and then exactly shr(sweep, 16 - k)
// further points. Runs on any input, including collinear P and Q.
// Returns the number of points emitted.
template <class Sink>
std::size_t ellipse_core(const ConjugateEllipse& e, Fixed sweep, int k, Sink&& sink) {
    check_step_exponent(k);
    if (sweep.raw < 0)
        fail(ErrorCode::negative_sweep, "ellipse_core requires a nonnegative sweep");

    const long count = shr(sweep, 16 - k).raw;
    const Fixed xQ = initial_value(e.q.x, e.p.x, k);
    const Fixed yQ = initial_value(e.q.y, e.p.y, k);
    detail::ellipse_loop(e.center.x, e.center.y, e.p.x, e.p.y, xQ, yQ, count, k,
                         [&](Fixed x, Fixed y) { sink(PointFx{x, y}); });
    return static_cast<std::size_t>(count) + 1;
}

// Full ellipse from window-relative center, P and Q. The first point is P
// and points advance toward Q. The polyline is closed; the residual sweep
// between the last generated point and P (less than one step) is covered by
// the implied closing edge and no extra end point is appended.
Polyline plot_ellipse(const ConjugateEllipse& e, int k);
Polyline plot_ellipse(const ConjugateEllipse& e, const FlatnessConfig& cfg);
void plot_ellipse(const ConjugateEllipse& e, int k, const PointSink& sink);

// Elliptic arc from window-relative center, P and Q. A nonzero start
// angle replaces (P, Q) by the rotated pair; a negative sweep runs toward
// -Q instead. The exact arc end point is appended after the generated
// points. Requires |asweep| <= 2*pi.
Polyline plot_elliptic_arc(const ConjugateEllipse& e, ArcSpec arc, int k);
Polyline plot_elliptic_arc(const ConjugateEllipse& e, ArcSpec arc, const FlatnessConfig& cfg);
void plot_elliptic_arc(const ConjugateEllipse& e, ArcSpec arc, int k, const PointSink& sink);

// Center-relative copy of a window-relative ellipse after range and
// degeneracy checks (used by the public plotters).
ConjugateEllipse to_center_relative(const ConjugateEllipse& e);

std::vector<RealPoint> to_real(const Polyline& poly);

}  // namespace conicfx
