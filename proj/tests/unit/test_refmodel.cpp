#include <cmath>
#include <numbers>
#include <vector>

#include "conicfx/ellipse.hpp"
#include "conicfx/refmodel.hpp"
#include "doctest.h"

using namespace conicfx;
using std::numbers::pi;

TEST_CASE("parametric points") {
    const RealPoint p{3, 1}, q{-1, 2};
    const RealPoint a = ellipse_point(p, q, 0.0);
    CHECK(a.x == 3.0);
    CHECK(a.y == 1.0);
    const RealPoint b = ellipse_point(p, q, pi / 2);
    CHECK(b.x == doctest::Approx(-1.0));
    CHECK(b.y == doctest::Approx(2.0));
    const RealPoint h = hyperbola_point(p, q, 0.0);
    CHECK(h.x == 3.0);
    CHECK(h.y == 1.0);
    const RealPoint h1 = hyperbola_point({1, 0}, {0, 1}, 1.0);
    CHECK(h1.x * h1.x - h1.y * h1.y == doctest::Approx(1.0));
}

TEST_CASE("parameter recovery inverts the parametric map") {
    const RealPoint p{120, 30}, q{-20, 75};
    for (double t = -3.0; t < 3.0; t += 0.37) {
        CHECK(ellipse_parameter(ellipse_point(p, q, t), p, q) ==
              doctest::Approx(std::remainder(t, 2 * pi)).epsilon(1e-9));
        CHECK(hyperbola_parameter(hyperbola_point(p, q, t), p, q) == doctest::Approx(t).epsilon(1e-9));
    }
}

TEST_CASE("chord-to-arc sagitta") {
    CHECK(chord_to_arc_exact(1.0, 0.0) == 0.0);
    CHECK(chord_to_arc_exact(1.0, 1.0) == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0));
    CHECK(chord_to_arc_series(512.0, 0.125) == doctest::Approx(512.0 * (1.0 / 512 + 1.0 / (4096.0 * 128))));
    // The series stops after eps^4 and so underestimates by less than r eps^6 / 512.
    for (double eps = 1.0 / 1024; eps <= 0.5; eps *= 2) {
        const double gap = chord_to_arc_exact(100.0, eps) - chord_to_arc_series(100.0, eps);
        CHECK(gap >= 0.0);
        CHECK(gap < 100.0 * std::pow(eps, 6) / 512.0);
    }
}

TEST_CASE("signed area follows orientation") {
    std::vector<RealPoint> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(signed_area(square) == doctest::Approx(1.0));
    std::reverse(square.begin(), square.end());
    CHECK(signed_area(square) == doctest::Approx(-1.0));
}

TEST_CASE("chord deviation of exact samples is the sagitta") {
    const RealPoint center{500, 400}, p{200, 0}, q{0, 200};
    std::vector<RealPoint> pts;
    const int n = 64;
    for (int i = 0; i < n; ++i) {
        const RealPoint r = ellipse_point(p, q, 2 * pi * i / n);
        pts.push_back({center.x + r.x, center.y + r.y});
    }
    const DeviationReport dev = max_chord_deviation(pts, center, p, q, {0.0, 2 * pi, true});
    CHECK(dev.edges == static_cast<std::size_t>(n));
    CHECK(dev.max_deviation == doctest::Approx(200.0 * (1.0 - std::cos(pi / n))).epsilon(1e-6));
}

TEST_CASE("chord deviation of an open arc ignores the closing edge") {
    const RealPoint center{0, 0}, p{100, 0}, q{0, 100};
    std::vector<RealPoint> pts = {ellipse_point(p, q, 0.0), ellipse_point(p, q, pi / 2)};
    const DeviationReport open = max_chord_deviation(pts, center, p, q, {0.0, pi / 2, false});
    CHECK(open.edges == 1);
    CHECK(open.max_deviation == doctest::Approx(100.0 * (1.0 - std::sqrt(0.5))).epsilon(1e-6));
}

TEST_CASE("deviation of the plotted ellipse decreases with k") {
    const ConjugateEllipse e{point_from_float(1000, 1000), point_from_float(1700, 1200), point_from_float(800, 1400)};
    const ConjugateEllipse rel = to_center_relative(e);
    double prev = INFINITY;
    for (int k = 2; k <= 7; ++k) {
        const std::vector<RealPoint> pts = to_real(plot_ellipse(e, k));
        const double d = max_chord_deviation(pts, to_real(e.center), to_real(rel.p), to_real(rel.q),
                                             {0.0, 2 * pi, true})
                             .max_deviation;
        CAPTURE(k);
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("hyperbolic chord deviation") {
    const RealPoint center{0, 0}, p{50, 0}, q{0, 50};
    std::vector<RealPoint> pts;
    for (int i = 0; i <= 20; ++i)
        pts.push_back(hyperbola_point(p, q, -1.0 + 0.1 * i));
    const DeviationReport dev =
        max_chord_deviation(pts, center, p, q, {-1.0, 2.0, false}, CurveKind::hyperbola);
    CHECK(dev.edges == 20);
    CHECK(dev.max_deviation > 0.0);
    CHECK(dev.max_deviation < 0.2);
}
