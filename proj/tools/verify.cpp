#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "conicfx/conic.hpp"
#include "conicfx/ellipse.hpp"
#include "conicfx/flatness.hpp"
#include "conicfx/hyperbola.hpp"
#include "conicfx/minsky.hpp"
#include "conicfx/refmodel.hpp"

namespace conicfx::verify {

namespace {

using json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

constexpr double pi = std::numbers::pi;
const double ulp_px = std::ldexp(1.0, -16);
const double step_bound_px = std::ldexp(1.0, -15);  // allowed drift per generator step

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

RealPoint in_disk(Rng& rng, double radius) {
    for (;;) {
        const RealPoint p{uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
        if (p.x * p.x + p.y * p.y <= radius * radius)
            return p;
    }
}

long cases_or(const Options& o, long fallback) { return o.cases > 0 ? o.cases : fallback; }

struct RandomEllipse {
    RealPoint center;
    RealPoint p;  // center-relative
    RealPoint q;
};

// Semi-axes drawn independently from [rmin, rmax], random orientation and
// random phase of the conjugate pair along the ellipse.
RandomEllipse random_ellipse(Rng& rng, double rmin, double rmax, double center_range) {
    const double a = uniform(rng, rmin, rmax);
    const double b = uniform(rng, rmin, rmax);
    const double theta = uniform(rng, 0.0, pi);
    const double phase = uniform(rng, 0.0, 2.0 * pi);
    const double ct = std::cos(theta), st = std::sin(theta);
    auto rot = [&](double x, double y) { return RealPoint{x * ct - y * st, x * st + y * ct}; };
    RandomEllipse e;
    e.center = {uniform(rng, -center_range, center_range), uniform(rng, -center_range, center_range)};
    e.p = rot(a * std::cos(phase), b * std::sin(phase));
    e.q = rot(-a * std::sin(phase), b * std::cos(phase));
    return e;
}

PointFx fx(RealPoint p) { return point_from_float(p.x, p.y); }

RealPoint add(RealPoint a, RealPoint b) { return {a.x + b.x, a.y + b.y}; }

json point_json(RealPoint p) { return json::array({p.x, p.y}); }

Report reversibility(const Options& o) {
    const long n = cases_or(o, 1'000'000);
    Rng rng(o.seed);
    // |u|, |v| < 2^29 raw keeps every intermediate inside int32 even at k = 0.
    std::uniform_int_distribution<std::int32_t> coord(-(1 << 29), 1 << 29);
    long circle_mismatch = 0;
    long hyper_mismatch = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (long i = 0; i < n; ++i) {
        const GenState s{Fixed::from_raw(coord(rng)), Fixed::from_raw(coord(rng))};
        const int k = uniform_int(rng, 0, max_step_exponent);
        if (circle_step_reverse(circle_step_forward(s, k), k) != s)
            ++circle_mismatch;
        if (hyper_step_reverse(hyper_step_forward(s, k), k) != s)
            ++hyper_mismatch;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    Report r{"reversibility", false, json::object(), elapsed};
    r.stats["cases"] = n;
    r.stats["circle_mismatches"] = circle_mismatch;
    r.stats["hyperbola_mismatches"] = hyper_mismatch;
    r.stats["runtime_limit_s"] = 5.0;
    r.stats["runtime_ok"] = elapsed < 5.0;
    r.pass = circle_mismatch == 0 && hyper_mismatch == 0 && elapsed < 5.0;
    return r;
}

Report drift(const Options& o) {
    const long per_k = cases_or(o, 2000);
    Rng rng(o.seed);
    Report r{"drift", true, json::object(), 0.0};
    json rows = json::array();
    double worst_ratio = 0.0;
    for (int k = 2; k <= 6; ++k) {
        const long n = static_cast<long>(std::floor(2.0 * pi * std::ldexp(1.0, k)));
        const double eps = std::ldexp(1.0, -k);
        double max_dev = 0.0;
        double k_ratio = 0.0;
        for (long c = 0; c < per_k; ++c) {
            const Fixed u0 = from_float(uniform(rng, -4096.0, 4096.0));
            const Fixed v0 = from_float(uniform(rng, -4096.0, 4096.0));
            const Fixed start = initial_value(u0, v0, k);
            Fixed u = start;
            Fixed v = v0;
            // Every intermediate state i is held to i * 2^-15, not only the last.
            for (long i = 1; i <= n; ++i) {
                circle_gen(u, v, k);
                const auto [cu, cv] = closed_form_circle(to_float(start), to_float(v0), eps, i);
                const double dev = std::max(std::fabs(to_float(u) - cu), std::fabs(to_float(v) - cv));
                max_dev = std::max(max_dev, dev);
                k_ratio = std::max(k_ratio, dev / (i * step_bound_px));
            }
        }
        worst_ratio = std::max(worst_ratio, k_ratio);
        rows.push_back({{"k", k}, {"steps", n}, {"max_deviation_px", max_dev},
                        {"bound_px", n * step_bound_px}, {"worst_ratio", k_ratio}});
        if (k_ratio > 1.0)
            r.pass = false;
    }
    r.stats["cases_per_k"] = per_k;
    r.stats["per_k"] = rows;
    r.stats["worst_ratio"] = worst_ratio;
    return r;
}

Report radial(const Options&) {
    const RealPoint c{2048.0, 1536.0};
    const double radius = 1000.0;
    const ConjugateEllipse e{fx(c), fx({c.x + radius, c.y}), fx({c.x, c.y + radius})};
    const FlatnessConfig cfg = FlatnessConfig::make(0.25);
    const AngularIncInfo info = angular_inc_info(to_center_relative(e).p, to_center_relative(e).q, cfg);
    const Polyline poly = plot_ellipse(e, cfg);
    double max_err = 0.0;
    for (const PointFx& pt : poly.points) {
        const RealPoint p = to_real(pt);
        max_err = std::max(max_err, std::fabs(std::hypot(p.x - c.x, p.y - c.y) - radius));
    }
    Report r{"radial", max_err <= 0.1, json::object(), 0.0};
    r.stats["radius_px"] = radius;
    r.stats["flatness_px"] = 0.25;
    r.stats["k"] = info.k;
    r.stats["aux_radius_px"] = info.radius;
    r.stats["points"] = poly.points.size();
    r.stats["max_radial_error_px"] = max_err;
    r.stats["bound_px"] = 0.1;
    return r;
}

Report flatness(const Options& o) {
    const long n = cases_or(o, 200);
    Rng rng(o.seed);
    const double flatnesses[] = {0.1, 0.25, 1.0};
    // The listing's radius estimate can exceed the true radius by 7.1%, and
    // the smallest tolerance must still be reachable at the largest radius.
    const int kmax = kmax_for(4000.0 * 1.071, 0.1);

    std::vector<RandomEllipse> shapes;
    for (long i = 0; i < n; ++i)
        shapes.push_back(random_ellipse(rng, 10.0, 4000.0, 8000.0));

    Report r{"flatness", true, json::object(), 0.0};
    json rows = json::array();
    for (bool strict : {false, true}) {
        const double limit = strict ? 1.001 : 1.10;
        for (double f : flatnesses) {
            const FlatnessConfig cfg = FlatnessConfig::make(f, kmax, strict);
            double worst = 0.0;
            long capped = 0;
            long worst_index = -1;
            for (long i = 0; i < n; ++i) {
                const RandomEllipse& s = shapes[static_cast<std::size_t>(i)];
                const ConjugateEllipse e{fx(s.center), fx(add(s.center, s.p)), fx(add(s.center, s.q))};
                const ConjugateEllipse rel = to_center_relative(e);
                if (angular_inc_info(rel.p, rel.q, cfg).capped)
                    ++capped;
                const Polyline poly = plot_ellipse(e, cfg);
                const std::vector<RealPoint> pts = to_real(poly);
                const DeviationReport dev = max_chord_deviation(pts, to_real(rel.center), to_real(rel.p),
                                                                to_real(rel.q), {0.0, 2.0 * pi, true});
                const double ratio = dev.max_deviation / f;
                if (ratio > worst) {
                    worst = ratio;
                    worst_index = i;
                }
            }
            rows.push_back({{"strict", strict},
                            {"flatness_px", f},
                            {"worst_ratio", worst},
                            {"limit_ratio", limit},
                            {"worst_case", worst_index},
                            {"capped", capped}});
            if (worst > limit)
                r.pass = false;
        }
    }
    r.stats["ellipses"] = n;
    r.stats["kmax"] = kmax;
    r.stats["runs"] = rows;
    return r;
}

Report vlen_band(const Options& o) {
    const long n = cases_or(o, 1'000'000);
    Rng rng(o.seed);
    double lo = 0.0, hi = 0.0;
    for (long i = 0; i < n; ++i) {
        const Fixed x = from_float(uniform(rng, -4096.0, 4096.0));
        const Fixed y = from_float(uniform(rng, -4096.0, 4096.0));
        const double exact = std::hypot(to_float(x), to_float(y));
        if (exact == 0.0)
            continue;
        const double rel = (to_float(vlen(x, y)) - exact) / exact;
        lo = std::min(lo, rel);
        hi = std::max(hi, rel);
    }
    const double slack = 0.0005;
    Report r{"vlen-band", lo >= -0.028 - slack && hi <= 0.0078 + slack, json::object(), 0.0};
    r.stats["cases"] = n;
    r.stats["min_rel_error"] = lo;
    r.stats["max_rel_error"] = hi;
    r.stats["band"] = json::array({-0.028, 0.0078});
    r.stats["slack"] = slack;
    return r;
}

Report auxradius_band(const Options& o) {
    const long n = cases_or(o, 100'000);
    Rng rng(o.seed);
    const double band_lo = -0.042, band_hi = 0.071;
    double lo = 0.0, hi = 0.0;
    long below = 0, above = 0, used = 0;
    RealPoint worst_p, worst_q;
    for (long i = 0; i < n; ++i) {
        const PointFx p = fx(in_disk(rng, 4000.0));
        const PointFx q = fx(in_disk(rng, 4000.0));
        if (cross_raw(p, q) == 0)
            continue;
        ++used;
        const double exact = aux_radius_exact(to_real(p), to_real(q));
        const double rel = (to_float(aux_radius(p, q)) - exact) / exact;
        if (rel < lo) {
            lo = rel;
            worst_p = to_real(p);
            worst_q = to_real(q);
        }
        hi = std::max(hi, rel);
        below += rel < band_lo;
        above += rel > band_hi;
    }
    Report r{"auxradius-band", below == 0 && above == 0, json::object(), 0.0};
    r.stats["cases"] = used;
    r.stats["min_rel_error"] = lo;
    r.stats["max_rel_error"] = hi;
    r.stats["band"] = json::array({band_lo, band_hi});
    r.stats["below_band"] = below;
    r.stats["above_band"] = above;
    r.stats["worst_p"] = point_json(worst_p);
    r.stats["worst_q"] = point_json(worst_q);
    return r;
}

Report kmax(const Options&) {
    const int k = kmax_for(5000.0, 0.25);
    Report r{"kmax", k == 6, json::object(), 0.0};
    r.stats["r_max_px"] = 5000.0;
    r.stats["flatness_px"] = 0.25;
    r.stats["kmax"] = k;
    r.stats["expected"] = 6;
    return r;
}

Report conic_roundtrip(const Options& o) {
    const long n = cases_or(o, 10'000);
    Rng rng(o.seed);
    double worst_form = 0.0, worst_delta = 0.0, worst_center = 0.0;
    for (long i = 0; i < n; ++i) {
        const RandomEllipse s = random_ellipse(rng, 10.0, 4000.0, 8000.0);
        const ImplicitConic origin = implicit_from_conjugate(s.p, s.q);
        worst_delta = std::max(worst_delta, std::fabs(calibration_number(origin) - 1.0));

        const ImplicitConic placed = implicit_from_ellipse({s.center, s.p, s.q});
        const CenteredEllipse back = ellipse_from_implicit(placed);
        const double scale = std::max({1.0, std::fabs(s.center.x), std::fabs(s.center.y)});
        worst_center = std::max({worst_center, std::fabs(back.center.x - s.center.x) / scale,
                                 std::fabs(back.center.y - s.center.y) / scale});
        worst_form = std::max(worst_form, coefficient_distance(placed, implicit_from_ellipse(back)));
    }
    const bool pass = worst_form <= 1e-9 && worst_delta <= 1e-12 && worst_center <= 1e-9;
    Report r{"conic-roundtrip", pass, json::object(), 0.0};
    r.stats["cases"] = n;
    r.stats["max_form_distance"] = worst_form;
    r.stats["max_calibration_error"] = worst_delta;
    r.stats["max_center_error"] = worst_center;
    r.stats["bounds"] = {{"form", 1e-9}, {"calibration", 1e-12}, {"center", 1e-9}};
    return r;
}

Report matrix_power(const Options& o) {
    const long n = cases_or(o, 10'000);
    Rng rng(o.seed);
    double worst = 0.0;
    long identity_failures = 0;
    long used = 0;
    const Mat2 eye{{{1.0, 0.0}, {0.0, 1.0}}};
    while (used < n) {
        Mat2 m;
        for (auto& row : m)
            for (double& x : row)
                x = uniform(rng, -2.0, 2.0);
        const double tr = m[0][0] + m[1][1];
        const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (std::fabs(tr * tr - 4.0 * det) < 1e-6)
            continue;  // repeated eigenvalue
        ++used;
        if (mat2_pow(m, 0) != eye || mat2_pow(m, 1) != m)
            ++identity_failures;
        Mat2 naive = eye;
        for (int p = 1; p <= 20; ++p) {
            naive = mat2_mul(naive, m);
            const Mat2 fast = mat2_pow(m, p);
            double scale = 0.0, diff = 0.0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    scale = std::max(scale, std::fabs(naive[i][j]));
                    diff = std::max(diff, std::fabs(naive[i][j] - fast[i][j]));
                }
            if (scale > 0.0)
                worst = std::max(worst, diff / scale);
        }
    }
    Report r{"matrix-power", worst <= 1e-9 && identity_failures == 0, json::object(), 0.0};
    r.stats["matrices"] = used;
    r.stats["max_power"] = 20;
    r.stats["max_rel_error"] = worst;
    r.stats["bound"] = 1e-9;
    r.stats["identity_failures"] = identity_failures;
    return r;
}

// Brute-force validation of the derived hyperbolic correction and closed
// form: iterate the generator and compare against both.
json hyperbola_gate(Rng& rng, long n, bool& pass) {
    double worst_closed = 0.0, worst_curve = 0.0;
    for (long c = 0; c < n; ++c) {
        const int k = uniform_int(rng, 2, 8);
        const double eps = std::ldexp(1.0, -k);
        const double a = hyper_step_angle(k);
        const long steps = uniform_int(rng, 1, 1 << k);
        const bool forward = c % 2 == 0;
        const Fixed u0 = from_float(uniform(rng, -1024.0, 1024.0));
        const Fixed v0 = from_float(uniform(rng, -1024.0, 1024.0));
        const Fixed start = hyper_initial_value(u0, v0, k);
        Fixed u = start;
        Fixed v = v0;
        for (long i = 0; i < steps; ++i) {
            if (forward)
                hyper_gen(u, v, k);
            else
                hyper_gen_reverse(u, v, k);
        }
        const long signed_steps = forward ? steps : -steps;
        const auto [cu, cv] = closed_form_hyper(to_float(start), to_float(v0), eps, signed_steps);
        const double bound = steps * step_bound_px;
        worst_closed = std::max(worst_closed,
                                std::max(std::fabs(to_float(u) - cu), std::fabs(to_float(v) - cv)) / bound);
        // The corrected start puts v on v0 cosh(t) + u0 sinh(t).
        const double t = signed_steps * a;
        const double target = to_float(v0) * std::cosh(t) + to_float(u0) * std::sinh(t);
        worst_curve = std::max(worst_curve, std::fabs(to_float(v) - target) / bound);
    }
    pass = worst_closed <= 1.0 && worst_curve <= 1.0;
    return {{"cases", n}, {"closed_form_worst_ratio", worst_closed}, {"correction_worst_ratio", worst_curve},
            {"pass", pass}};
}

Report hyperbola(const Options& o) {
    const long n = cases_or(o, 1000);
    Rng rng(o.seed);
    Report r{"hyperbola", false, json::object(), 0.0};
    bool gate_ok = false;
    r.stats["gate"] = hyperbola_gate(rng, std::max(10 * n, 10'000L), gate_ok);
    if (!gate_ok)
        return r;

    double worst_ratio = 0.0, worst_dev = 0.0;
    long worst_case = -1;
    for (long c = 0; c < n; ++c) {
        const int k = uniform_int(rng, 2, 8);
        const double astart = uniform(rng, -1.0, 1.0);
        const double asweep = uniform(rng, -4.0, 4.0);
        const double t_max = std::max(std::fabs(astart), std::fabs(astart + asweep));
        const double reach = std::min(1000.0, 12000.0 / (2.0 * std::cosh(t_max)));
        const RealPoint center{uniform(rng, -2000.0, 2000.0), uniform(rng, -2000.0, 2000.0)};
        RealPoint p, q;
        do {
            p = in_disk(rng, reach);
            q = in_disk(rng, reach);
        } while (std::fabs(cross(p, q)) < 0.01 * reach * reach);

        const ConjugateHyperbola h{fx(center), fx(add(center, p)), fx(add(center, q))};
        const Polyline poly = plot_hyperbolic_arc(h, astart, asweep, k);
        // Oracle on the representable geometry actually handed to the plotter.
        const RealPoint c0 = to_real(h.center);
        const RealPoint pr{to_float(h.p.x) - c0.x, to_float(h.p.y) - c0.y};
        const RealPoint qr{to_float(h.q.x) - c0.x, to_float(h.q.y) - c0.y};
        const double a = hyper_step_angle(k);
        const long steps = static_cast<long>(poly.points.size()) - 2;
        const double bound = std::max(steps, 1L) * step_bound_px;
        double dev = 0.0;
        for (std::size_t i = 0; i < poly.points.size(); ++i) {
            const bool last = i + 1 == poly.points.size();
            const double t = last ? astart + asweep
                                  : astart + (asweep >= 0 ? 1.0 : -1.0) * static_cast<double>(i) * a;
            const RealPoint want = add(c0, hyperbola_point(pr, qr, t));
            const RealPoint got = to_real(poly.points[i]);
            dev = std::max({dev, std::fabs(got.x - want.x), std::fabs(got.y - want.y)});
        }
        if (dev / bound > worst_ratio) {
            worst_ratio = dev / bound;
            worst_dev = dev;
            worst_case = c;
        }
    }
    r.stats["arcs"] = n;
    r.stats["worst_ratio"] = worst_ratio;
    r.stats["worst_deviation_px"] = worst_dev;
    r.stats["worst_case"] = worst_case;
    r.stats["ulp_px"] = ulp_px;
    r.pass = worst_ratio <= 1.0;
    return r;
}

using SuiteFn = std::function<Report(const Options&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
    static const std::map<std::string, SuiteFn, std::less<>> suites = {
        {"reversibility", reversibility}, {"drift", drift},
        {"radial", radial},               {"flatness", flatness},
        {"vlen-band", vlen_band},         {"auxradius-band", auxradius_band},
        {"kmax", kmax},                   {"conic-roundtrip", conic_roundtrip},
        {"matrix-power", matrix_power},   {"hyperbola", hyperbola},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

bool has_suite(std::string_view name) { return registry().find(name) != registry().end(); }

Report run(std::string_view name, const Options& opts) {
    const auto it = registry().find(name);
    if (it == registry().end())
        fail(ErrorCode::invalid_config, "unknown verification suite: " + std::string(name));
    const auto t0 = std::chrono::steady_clock::now();
    Report r = it->second(opts);
    if (r.elapsed_s == 0.0)
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

json to_json(const Report& r) {
    json out;
    out["suite"] = r.suite;
    out["pass"] = r.pass;
    out["stats"] = r.stats;
    return out;
}

}  // namespace conicfx::verify
