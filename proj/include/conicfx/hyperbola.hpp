#pragma once

// Error-corrected hyperbolic arcs. A hyperbola (with its conjugate
// hyperbola) is described like an ellipse: a center plus conjugate
// diameter end points P and Q, giving
//   x(t) = xP cosh t + xQ sinh t,   y(t) = yP cosh t + yQ sinh t.
// Points are generated at hyperbolic angles n*a, cosh(a) = 1 + eps^2/2,
// by two shift-add hyperbolic generators with pre-corrected starting
// values. Negative sweeps use the reverse generator.
//
// Unlike the circle generator, the hyperbolic recurrence amplifies its own
// truncation error by roughly e^|t| over an arc. The plotter therefore
// restarts both generators from exactly computed conjugate end points every
// `reseed_interval` steps (about one unit of hyperbolic angle by default),
// which keeps the point spacing unchanged and bounds the amplification.
// There is no flatness-driven choice of k for hyperbolas; callers pass k.

#include "conicfx/ellipse.hpp"

namespace conicfx {

struct ConjugateHyperbola {
    PointFx center;
    PointFx p;
    PointFx q;
};

inline constexpr double max_hyperbolic_sweep = 8.0;

struct HyperbolaOptions {
    // Steps between restarts; -1 selects 2^k (about one unit of hyperbolic
    // angle), 0 disables restarts and runs the bare recurrence.
    long reseed_interval = -1;
};

// P' = P cosh(phi) + Q sinh(phi), Q' = Q cosh(phi) + P sinh(phi); the
// fixed-point overload truncates toward zero.
std::pair<PointFx, PointFx> hyperbolic_rotate(PointFx p, PointFx q, double phi);
std::pair<RealPoint, RealPoint> hyperbolic_rotate(RealPoint p, RealPoint q, double phi);

// Plots the arc from parameter astart through astart + asweep with
// window-relative center, P and Q. Emits the start point, the generated
// points, and (for asweep != 0) the exact end point. |asweep| <= 8 and the
// whole arc must stay within the coordinate range.
Polyline plot_hyperbolic_arc(const ConjugateHyperbola& h, double astart, double asweep, int k,
                             HyperbolaOptions opts = {});
void plot_hyperbolic_arc(const ConjugateHyperbola& h, double astart, double asweep, int k,
                         const PointSink& sink, HyperbolaOptions opts = {});

}  // namespace conicfx
