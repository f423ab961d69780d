#pragma once

// Shift-and-add rotation generators with angular increment eps = 1/2^k.
//
// The four variants step a state (u, v):
//   circle forward     u -= v>>k;  v += u>>k
//   circle reverse     v -= u>>k;  u += v>>k
//   hyperbola forward  u += v>>k;  v += u>>k
//   hyperbola reverse  v -= u>>k;  u -= v>>k
// Each reverse variant undoes its forward variant exactly, bit for bit.
//
// The step templates accept any type with +=, -= and >> so that the
// operation count per point can be audited with an instrumented scalar.

#include <array>
#include <utility>

#include "conicfx/fixed.hpp"

namespace conicfx {

inline constexpr int max_step_exponent = 15;

constexpr bool valid_step_exponent(int k) noexcept { return k >= 0 && k <= max_step_exponent; }

// Throws invalid_step unless 0 <= k < 16.
void check_step_exponent(int k);

struct GenState {
    Fixed u;
    Fixed v;

    constexpr bool operator==(const GenState&) const = default;
};

template <class T>
constexpr void circle_gen(T& u, T& v, int k) {
    u -= v >> k;
    v += u >> k;
}

template <class T>
constexpr void circle_gen_reverse(T& u, T& v, int k) {
    v -= u >> k;
    u += v >> k;
}

template <class T>
constexpr void hyper_gen(T& u, T& v, int k) {
    u += v >> k;
    v += u >> k;
}

template <class T>
constexpr void hyper_gen_reverse(T& u, T& v, int k) {
    v -= u >> k;
    u -= v >> k;
}

constexpr GenState circle_step_forward(GenState s, int k) {
    circle_gen(s.u, s.v, k);
    return s;
}

constexpr GenState circle_step_reverse(GenState s, int k) {
    circle_gen_reverse(s.u, s.v, k);
    return s;
}

constexpr GenState hyper_step_forward(GenState s, int k) {
    hyper_gen(s.u, s.v, k);
    return s;
}

constexpr GenState hyper_step_reverse(GenState s, int k) {
    hyper_gen_reverse(s.u, s.v, k);
    return s;
}

// Corrected starting value for u so that the circle generator's v output
// follows v0*cos(n*alpha) + u0*sin(n*alpha) exactly:
//   U0 = u0*(1 - eps^2/8 - eps^4/128 - eps^6/1024) + v0*eps/2
// evaluated with the same truncating shift sequence as the reference code.
constexpr Fixed initial_value(Fixed u0, Fixed v0, int k) {
    const int shift = 2 * k + 3;
    Fixed w = shr_wide(u0, shift);
    Fixed U0 = u0 - w + shr_wide(v0, k + 1);

    w = shr_wide(w, shift + 1);
    U0 -= w;
    w = shr_wide(w, shift);
    U0 -= w;
    return U0;
}

// Hyperbolic counterpart of initial_value():
//   U0 = u0*sqrt(1 + eps^2/4) - v0*eps/2
//      ~ u0*(1 + eps^2/8 - eps^4/128 + eps^6/1024) - v0*eps/2
// With this substitution both hyperbolic variants make v follow
// v0*cosh(n*a) +/- u0*sinh(n*a), where cosh(a) = 1 + eps^2/2.
constexpr Fixed hyper_initial_value(Fixed u0, Fixed v0, int k) {
    const int shift = 2 * k + 3;
    Fixed w = shr_wide(u0, shift);
    Fixed U0 = u0 + w - shr_wide(v0, k + 1);

    w = shr_wide(w, shift + 1);
    U0 -= w;
    w = shr_wide(w, shift);
    U0 += w;
    return U0;
}

// Exact per-step angle of the circle generator: sin(alpha/2) = eps/2.
double circle_step_angle(int k);

// Exact per-step hyperbolic angle: sinh(a/2) = eps/2, i.e. cosh(a) = 1 + eps^2/2.
double hyper_step_angle(int k);

// Closed-form state of the uncorrected circle generator after n steps
// (floating point). Negative n gives the reverse variant.
std::pair<double, double> closed_form_circle(double u0, double v0, double eps, long n);

// Closed-form state of the uncorrected hyperbolic generator after n steps:
//   u_n = u0 cosh(na) + (v0 - eps/2 u0)/sqrt(1 + eps^2/4) sinh(na)
//   v_n = v0 cosh(na) + (u0 + eps/2 v0)/sqrt(1 + eps^2/4) sinh(na)
// Negative n gives the reverse variant.
std::pair<double, double> closed_form_hyper(double u0, double v0, double eps, long n);

using Mat2 = std::array<std::array<double, 2>, 2>;

// M^n through the Cayley-Hamilton recurrence
//   a_n = tr(M) a_{n-1} + b_{n-1},  b_n = -det(M) a_{n-1},  M^n = a_n M + b_n I.
Mat2 mat2_pow(const Mat2& m, int n);

Mat2 mat2_mul(const Mat2& a, const Mat2& b);

// One-step matrices acting on (u, v).
Mat2 circle_step_matrix(double eps);
Mat2 hyper_step_matrix(double eps);

}  // namespace conicfx
