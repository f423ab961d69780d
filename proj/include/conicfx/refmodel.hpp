#pragma once

// Double-precision reference model: parametric evaluation of ellipses and
// hyperbolas from conjugate diameters, the exact chord-to-arc sagitta, and
// dense-sampling measurement of how far a plotted polyline strays from the
// true curve. Used as the oracle by tests, the acceptance suite, and the
// CLI's verify command.

#include <span>

#include "conicfx/fixed.hpp"

namespace conicfx {

struct RealPoint {
    double x = 0.0;
    double y = 0.0;
};

inline RealPoint to_real(PointFx p) { return {to_float(p.x), to_float(p.y)}; }

inline double cross(RealPoint a, RealPoint b) { return a.x * b.y - a.y * b.x; }

// x(t) = xP cos t + xQ sin t,  y(t) = yP cos t + yQ sin t
RealPoint ellipse_point(RealPoint p, RealPoint q, double theta);

// x(t) = xP cosh t + xQ sinh t,  y(t) = yP cosh t + yQ sinh t
RealPoint hyperbola_point(RealPoint p, RealPoint q, double t);

// r * (1 - sqrt(1 - eps^2/4)): largest gap between a chord of length
// r*eps and its arc on a circle of radius r.
double chord_to_arc_exact(double r, double eps);

// r * (eps^2/8 + eps^4/128), the truncated series used by the
// fixed-point flatness test.
double chord_to_arc_series(double r, double eps);

// Parameter interval covered by a polyline: the curve runs from `start`
// for `sweep` (signed). A closed polyline also has an edge from its last
// point back to its first.
struct CurveSpan {
    double start = 0.0;
    double sweep = 0.0;
    bool closed = false;
};

enum class CurveKind { ellipse, hyperbola };

struct DeviationReport {
    double max_deviation = 0.0;  // px
    std::size_t worst_edge = 0;  // index of the first point of the worst edge
    std::size_t edges = 0;
};

// Maximum distance from each chord of `points` to the true curve between
// the chord's end points. Each point's curve parameter is recovered by
// inverting the conjugate-diameter map, the curve is sampled densely
// (`samples_per_chord`, at least 64) between adjacent parameters, and the
// sampled maximum is refined by golden-section search.
DeviationReport max_chord_deviation(std::span<const RealPoint> points, RealPoint center,
                                    RealPoint p, RealPoint q, CurveSpan span,
                                    CurveKind kind = CurveKind::ellipse,
                                    int samples_per_chord = 64);

// Parameter of a point on the curve (inverse of ellipse_point /
// hyperbola_point for center-relative points).
double ellipse_parameter(RealPoint rel, RealPoint p, RealPoint q);
double hyperbola_parameter(RealPoint rel, RealPoint p, RealPoint q);

// Signed area (shoelace), positive when counterclockwise in a y-up frame.
double signed_area(std::span<const RealPoint> points);

}  // namespace conicfx
