#include "conicfx/refmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace conicfx {

RealPoint ellipse_point(RealPoint p, RealPoint q, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {p.x * c + q.x * s, p.y * c + q.y * s};
}

RealPoint hyperbola_point(RealPoint p, RealPoint q, double t) {
    const double c = std::cosh(t);
    const double s = std::sinh(t);
    return {p.x * c + q.x * s, p.y * c + q.y * s};
}

double chord_to_arc_exact(double r, double eps) {
    // 1 - sqrt(1 - x) rewritten as x / (1 + sqrt(1 - x)) to avoid cancellation.
    const double x = 0.25 * eps * eps;
    return r * x / (1.0 + std::sqrt(1.0 - x));
}

double chord_to_arc_series(double r, double eps) {
    const double e2 = eps * eps;
    return r * (e2 / 8.0 + e2 * e2 / 128.0);
}

namespace {

// Coordinates of `rel` in the (P, Q) basis.
RealPoint unmap(RealPoint rel, RealPoint p, RealPoint q) {
    const double det = cross(p, q);
    if (det == 0.0)
        fail(ErrorCode::degenerate, "conjugate diameters are collinear; curve parameter is undefined");
    return {(rel.x * q.y - rel.y * q.x) / det, (p.x * rel.y - p.y * rel.x) / det};
}

double distance_to_line(RealPoint pt, RealPoint a, RealPoint b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    if (len < 1e-12)
        return std::hypot(pt.x - a.x, pt.y - a.y);
    return std::fabs(dx * (pt.y - a.y) - dy * (pt.x - a.x)) / len;
}

double wrap_angle(double d) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    d = std::remainder(d, two_pi);
    return d;
}

}  // namespace

double ellipse_parameter(RealPoint rel, RealPoint p, RealPoint q) {
    const RealPoint uv = unmap(rel, p, q);
    return std::atan2(uv.y, uv.x);
}

double hyperbola_parameter(RealPoint rel, RealPoint p, RealPoint q) {
    const RealPoint uv = unmap(rel, p, q);
    return std::asinh(uv.y);
}

DeviationReport max_chord_deviation(std::span<const RealPoint> points, RealPoint center,
                                    RealPoint p, RealPoint q, CurveSpan span, CurveKind kind,
                                    int samples_per_chord) {
    DeviationReport report;
    if (points.size() < 2)
        return report;
    samples_per_chord = std::max(samples_per_chord, 64);

    if (cross(p, q) == 0.0) {
        // Collinear diameters: the curve is a segment of the line through
        // the center along P (or Q). Each chord's gap is its distance from
        // that line.
        const RealPoint dir = std::hypot(p.x, p.y) > 0.0 ? p : q;
        const RealPoint far{center.x + dir.x, center.y + dir.y};
        const std::size_t edges = span.closed ? points.size() : points.size() - 1;
        for (std::size_t i = 0; i < edges; ++i) {
            const RealPoint a = points[i];
            const RealPoint b = points[(i + 1) % points.size()];
            const double d = std::max(distance_to_line(a, center, far), distance_to_line(b, center, far));
            if (d > report.max_deviation) {
                report.max_deviation = d;
                report.worst_edge = i;
            }
        }
        report.edges = edges;
        return report;
    }

    auto curve = [&](double t) {
        const RealPoint r = kind == CurveKind::ellipse ? ellipse_point(p, q, t) : hyperbola_point(p, q, t);
        return RealPoint{r.x + center.x, r.y + center.y};
    };
    auto rel = [&](RealPoint a) { return RealPoint{a.x - center.x, a.y - center.y}; };

    // Curve parameter of each point, unwrapped so consecutive values are
    // within half a turn of each other. The first point is pinned to the
    // nearest representative of span.start.
    std::vector<double> params(points.size());
    if (kind == CurveKind::ellipse) {
        params[0] = span.start + wrap_angle(ellipse_parameter(rel(points[0]), p, q) - span.start);
        for (std::size_t i = 1; i < points.size(); ++i) {
            const double raw = ellipse_parameter(rel(points[i]), p, q);
            params[i] = params[i - 1] + wrap_angle(raw - params[i - 1]);
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i)
            params[i] = hyperbola_parameter(rel(points[i]), p, q);
    }

    if (!span.closed && std::fabs(params.back() - (span.start + span.sweep)) > 1e-3)
        fail(ErrorCode::out_of_range, "polyline does not end at start + sweep of the given curve");

    auto edge_deviation = [&](RealPoint a, RealPoint b, double ta, double tb) {
        auto dist = [&](double t) { return distance_to_line(curve(t), a, b); };
        const int n = samples_per_chord;
        double best = -1.0;
        int best_j = 0;
        for (int j = 0; j <= n; ++j) {
            const double d = dist(ta + (tb - ta) * j / n);
            if (d > best) {
                best = d;
                best_j = j;
            }
        }
        // Golden-section refinement on the bracketing sample interval.
        double lo = ta + (tb - ta) * std::max(best_j - 1, 0) / n;
        double hi = ta + (tb - ta) * std::min(best_j + 1, n) / n;
        constexpr double g = 0.6180339887498949;
        double x1 = hi - g * (hi - lo);
        double x2 = lo + g * (hi - lo);
        double f1 = dist(x1);
        double f2 = dist(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = dist(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = dist(x1);
            }
        }
        return std::max({best, f1, f2});
    };

    const std::size_t n = points.size();
    const std::size_t edges = span.closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        const std::size_t j = (i + 1) % n;
        double tb = params[j];
        if (j == 0)
            tb = params[i] + wrap_angle(params[0] - params[i]);
        const double d = edge_deviation(points[i], points[j], params[i], tb);
        if (d > report.max_deviation) {
            report.max_deviation = d;
            report.worst_edge = i;
        }
    }
    report.edges = edges;
    return report;
}

double signed_area(std::span<const RealPoint> points) {
    double twice = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const RealPoint a = points[i];
        const RealPoint b = points[(i + 1) % points.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * twice;
}

}  // namespace conicfx
