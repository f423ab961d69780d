#pragma once

// Conversions between the conjugate-diameter description of an ellipse
// and the implicit equation Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0.
// Floating point throughout: these feed setup, not the inner loop.

#include "conicfx/refmodel.hpp"

namespace conicfx {

struct ImplicitConic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;

    double operator()(double x, double y) const {
        return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
    }
};

inline bool is_ellipse(const ImplicitConic& c) { return c.b * c.b - 4.0 * c.a * c.c < 0.0; }

// Origin-centered coefficients of the ellipse with conjugate end points p, q:
// A = yP^2 + yQ^2, B = -2(xP yP + xQ yQ), C = xP^2 + xQ^2, D = E = 0,
// F = -(xP yQ - xQ yP)^2. The result is already calibrated.
ImplicitConic implicit_from_conjugate(RealPoint p, RealPoint q);

struct CenteredConic {
    ImplicitConic conic;  // D = E = 0
    RealPoint center;
};

// Moves the center to the origin:
// x0 = (BE - 2CD)/(4AC - B^2), y0 = (BD - 2AE)/(4AC - B^2).
CenteredConic translate_to_origin(const ImplicitConic& c);

// delta = -4F / (4AC - B^2) for an origin-centered conic.
double calibration_number(const ImplicitConic& c);

// All six coefficients scaled by the calibration number.
ImplicitConic calibrate(const ImplicitConic& c);

inline constexpr double calibration_tolerance = 1e-9;

enum class CalibrationPolicy {
    automatic,  // rescale uncalibrated input
    strict,     // reject input with |delta - 1| > calibration_tolerance
};

struct ConjugatePair {
    RealPoint p;
    RealPoint q;
};

// One conjugate pair of an origin-centered ellipse, with P on the +x axis:
// yP = 0, xP = +sqrt(-F/A), yQ = +sqrt(A), xQ = -B/(2 yQ).
ConjugatePair conjugate_from_implicit(const ImplicitConic& c,
                                      CalibrationPolicy policy = CalibrationPolicy::automatic);

struct CenteredEllipse {
    RealPoint center;
    RealPoint p;  // center-relative
    RealPoint q;  // center-relative
};

// translate_to_origin followed by conjugate_from_implicit.
CenteredEllipse ellipse_from_implicit(const ImplicitConic& c,
                                      CalibrationPolicy policy = CalibrationPolicy::automatic);

// Implicit equation of the ellipse centered at `center`.
ImplicitConic implicit_from_ellipse(const CenteredEllipse& e);

// Auxiliary radius from calibrated, origin-centered coefficients:
// r^2 = (A + C + sqrt((A - C)^2 + B^2)) / 2.
double aux_radius_from_implicit(const ImplicitConic& c);

// max_i |x_i - y_i| / max_i |x_i| over the six coefficients.
double coefficient_distance(const ImplicitConic& x, const ImplicitConic& y);

}  // namespace conicfx
