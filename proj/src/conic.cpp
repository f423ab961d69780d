#include "conicfx/conic.hpp"

#include <algorithm>
#include <cmath>

namespace conicfx {

namespace {

// a*b - c*d with one rounding (Kahan's fma trick), so 4AC - B^2 keeps full
// relative precision when the ellipse is long and thin.
double diff_of_products(double a, double b, double c, double d) {
    const double w = c * d;
    const double err = std::fma(-c, d, w);
    return std::fma(a, b, -w) + err;
}

double discriminant(const ImplicitConic& c) { return diff_of_products(4.0 * c.a, c.c, c.b, c.b); }

void require_centered(const ImplicitConic& c) {
    if (c.d != 0.0 || c.e != 0.0)
        fail(ErrorCode::not_centered, "conic must be origin-centered (D = E = 0); translate it first");
}

}  // namespace

ImplicitConic implicit_from_conjugate(RealPoint p, RealPoint q) {
    const double det = cross(p, q);
    if (det == 0.0)
        fail(ErrorCode::degenerate, "conjugate diameters are collinear (degenerate ellipse)");
    ImplicitConic c;
    c.a = p.y * p.y + q.y * q.y;
    c.b = -2.0 * (p.x * p.y + q.x * q.y);
    c.c = p.x * p.x + q.x * q.x;
    // Mathematically 4AC - B^2 = 4 det^2. Taking F from the rounded A, B, C
    // keeps the stored equation calibrated to rounding error.
    c.f = -0.25 * discriminant(c);
    return c;
}

CenteredConic translate_to_origin(const ImplicitConic& c) {
    if (!is_ellipse(c))
        fail(ErrorCode::not_ellipse, "B^2 - 4AC >= 0: the conic is not an ellipse");
    const double den = discriminant(c);
    const double x0 = (c.b * c.e - 2.0 * c.c * c.d) / den;
    const double y0 = (c.b * c.d - 2.0 * c.a * c.e) / den;

    CenteredConic out;
    out.center = {x0, y0};
    out.conic = c;
    out.conic.d = 0.0;
    out.conic.e = 0.0;
    out.conic.f = c.a * x0 * x0 + c.b * x0 * y0 + c.c * y0 * y0 + c.d * x0 + c.e * y0 + c.f;
    return out;
}

double calibration_number(const ImplicitConic& c) {
    require_centered(c);
    const double den = discriminant(c);
    if (den == 0.0)
        fail(ErrorCode::degenerate, "4AC - B^2 = 0: calibration number is undefined");
    return -4.0 * c.f / den;
}

ImplicitConic calibrate(const ImplicitConic& c) {
    const double delta = calibration_number(c);
    if (delta == 0.0)
        fail(ErrorCode::degenerate, "F = 0: the ellipse has collapsed to a point");
    return {c.a * delta, c.b * delta, c.c * delta, c.d * delta, c.e * delta, c.f * delta};
}

ConjugatePair conjugate_from_implicit(const ImplicitConic& in, CalibrationPolicy policy) {
    require_centered(in);
    if (!is_ellipse(in))
        fail(ErrorCode::not_ellipse, "B^2 - 4AC >= 0: the conic is not an ellipse");

    ImplicitConic c = in;
    const double delta = calibration_number(in);
    if (std::fabs(delta - 1.0) > calibration_tolerance) {
        if (policy == CalibrationPolicy::strict)
            fail(ErrorCode::not_calibrated, "coefficients are not calibrated (delta != 1)");
        c = calibrate(in);
    }
    if (!(c.a > 0.0) || !(c.f < 0.0))
        fail(ErrorCode::empty_ellipse, "calibrated coefficients need A > 0 and F < 0 (no real points)");

    ConjugatePair out;
    out.p = {std::sqrt(-c.f / c.a), 0.0};
    const double yq = std::sqrt(c.a);
    out.q = {-c.b / (2.0 * yq), yq};
    return out;
}

CenteredEllipse ellipse_from_implicit(const ImplicitConic& c, CalibrationPolicy policy) {
    const CenteredConic centered = translate_to_origin(c);
    const ConjugatePair pq = conjugate_from_implicit(centered.conic, policy);
    return {centered.center, pq.p, pq.q};
}

ImplicitConic implicit_from_ellipse(const CenteredEllipse& e) {
    ImplicitConic c = implicit_from_conjugate(e.p, e.q);
    // f(x - x0, y - y0) expanded.
    const double x0 = e.center.x;
    const double y0 = e.center.y;
    const ImplicitConic centered = c;
    c.d = -2.0 * centered.a * x0 - centered.b * y0;
    c.e = -2.0 * centered.c * y0 - centered.b * x0;
    c.f = centered.a * x0 * x0 + centered.b * x0 * y0 + centered.c * y0 * y0 + centered.f;
    return c;
}

double aux_radius_from_implicit(const ImplicitConic& c) {
    require_centered(c);
    return std::sqrt(0.5 * (c.a + c.c + std::hypot(c.a - c.c, c.b)));
}

double coefficient_distance(const ImplicitConic& x, const ImplicitConic& y) {
    const double xs[] = {x.a, x.b, x.c, x.d, x.e, x.f};
    const double ys[] = {y.a, y.b, y.c, y.d, y.e, y.f};
    double scale = 0.0;
    double diff = 0.0;
    for (int i = 0; i < 6; ++i) {
        scale = std::max(scale, std::fabs(xs[i]));
        diff = std::max(diff, std::fabs(xs[i] - ys[i]));
    }
    return scale == 0.0 ? diff : diff / scale;
}

}  // namespace conicfx
