#include "conicfx/minsky.hpp"

#include <cmath>
#include <string>

namespace conicfx {

void check_step_exponent(int k) {
    if (!valid_step_exponent(k))
        fail(ErrorCode::invalid_step, "angular increment exponent k=" + std::to_string(k) +
                                          " must satisfy 0 <= k < 16");
}

double circle_step_angle(int k) { return 2.0 * std::asin(std::ldexp(1.0, -k) / 2.0); }

double hyper_step_angle(int k) { return 2.0 * std::asinh(std::ldexp(1.0, -k) / 2.0); }

std::pair<double, double> closed_form_circle(double u0, double v0, double eps, long n) {
    const double alpha = 2.0 * std::asin(eps / 2.0);
    const double c = std::sqrt(1.0 - 0.25 * eps * eps);
    const double cn = std::cos(n * alpha);
    const double sn = std::sin(n * alpha);
    const double u = u0 * cn - (v0 - 0.5 * eps * u0) / c * sn;
    const double v = (u0 - 0.5 * eps * v0) / c * sn + v0 * cn;
    return {u, v};
}

std::pair<double, double> closed_form_hyper(double u0, double v0, double eps, long n) {
    const double a = 2.0 * std::asinh(eps / 2.0);
    const double c = std::sqrt(1.0 + 0.25 * eps * eps);
    const double chn = std::cosh(n * a);
    const double shn = std::sinh(n * a);
    const double u = u0 * chn + (v0 - 0.5 * eps * u0) / c * shn;
    const double v = v0 * chn + (u0 + 0.5 * eps * v0) / c * shn;
    return {u, v};
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 mat2_pow(const Mat2& m, int n) {
    if (n < 0)
        fail(ErrorCode::out_of_range, "mat2_pow requires n >= 0");

    const double a2 = m[0][0] + m[1][1];
    const double b2 = m[0][1] * m[1][0] - m[0][0] * m[1][1];

    // (a_0, b_0) = (0, 1) gives M^0 = I.
    double an = 0.0;
    double bn = 1.0;
    for (int i = 1; i <= n; ++i) {
        const double next_a = a2 * an + bn;
        const double next_b = an * b2;
        an = next_a;
        bn = next_b;
    }
    return {{{an * m[0][0] + bn, an * m[0][1]}, {an * m[1][0], an * m[1][1] + bn}}};
}

Mat2 circle_step_matrix(double eps) { return {{{1.0, -eps}, {eps, 1.0 - eps * eps}}}; }

Mat2 hyper_step_matrix(double eps) { return {{{1.0, eps}, {eps, 1.0 + eps * eps}}}; }

}  // namespace conicfx
