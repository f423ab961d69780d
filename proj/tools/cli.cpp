#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conicfx/conic.hpp"
#include "conicfx/ellipse.hpp"
#include "conicfx/hyperbola.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace conicfx::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double default_flatness_px = 0.25;
constexpr double two_pi = 2.0 * std::numbers::pi;

struct CliError : std::runtime_error {
    CliError(std::string c, const std::string& msg, int exit = exit_validation)
        : std::runtime_error(msg), code(std::move(c)), exit_code(exit) {}
    std::string code;
    int exit_code;
};

int exit_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::degenerate:
    case ErrorCode::not_ellipse:
    case ErrorCode::empty_ellipse:
        return exit_degenerate;
    default:
        return exit_validation;
    }
}

std::string error_line(std::string_view code, std::string_view message) {
    json j;
    j["error"] = {{"code", code}, {"message", message}};
    return j.dump() + "\n";
}

// ---- number formatting ----------------------------------------------------

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000")
        s = "0.0000";
    return s;
}

double exact_px(Fixed f) { return static_cast<double>(f.raw) / 65536.0; }

double round4(double v) { return std::strtod(fmt4(v).c_str(), nullptr); }

// ---- argument parsing -----------------------------------------------------

double parse_number(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size() || !std::isfinite(v))
        throw CliError("invalid_argument", what + ": expected a finite number, got '" + text + "'");
    return v;
}

RealPoint parse_point(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw CliError("invalid_argument", flag + ": expected X,Y, got '" + text + "'");
    return {parse_number(text.substr(0, comma), flag), parse_number(text.substr(comma + 1), flag)};
}

PointFx to_fixed(RealPoint p) { return point_from_float(p.x, p.y); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError("io_error", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw CliError("invalid_json", what + ": " + e.what());
    }
}

// ---- settings: flags, then config file, then defaults ---------------------

struct FlagValues {
    std::optional<double> flatness;
    std::optional<int> k;
    std::optional<int> kmax;
    bool strict = false;
    std::optional<std::string> format;
    std::string config;
};

struct Settings {
    std::optional<double> flatness;
    std::optional<int> k;
    int kmax = default_kmax;
    bool strict = false;
    std::string format = "svg";
};

Settings resolve(const FlagValues& flags) {
    Settings s;
    std::optional<double> cfg_flatness;
    if (!flags.config.empty()) {
        const json cfg = parse_json(read_file(flags.config), "config " + flags.config);
        if (!cfg.is_object())
            throw CliError("invalid_config", "config must be a JSON object");
        for (const auto& [key, value] : cfg.items()) {
            if (key == "flatness" && value.is_number())
                cfg_flatness = value.get<double>();
            else if (key == "kmax" && value.is_number_integer())
                s.kmax = value.get<int>();
            else if (key == "strict_flatness" && value.is_boolean())
                s.strict = value.get<bool>();
            else if (key == "format" && value.is_string())
                s.format = value.get<std::string>();
            else
                throw CliError("invalid_config", "config: unknown key or wrong type for '" + key + "'");
        }
    }
    if (flags.kmax)
        s.kmax = *flags.kmax;
    if (flags.strict)
        s.strict = true;
    if (flags.format)
        s.format = *flags.format;
    if (s.format != "svg" && s.format != "csv" && s.format != "json")
        throw CliError("invalid_config", "format must be svg, csv or json");

    // An explicit k on the command line overrides any configured flatness.
    if (flags.k)
        s.k = flags.k;
    else
        s.flatness = flags.flatness ? flags.flatness : cfg_flatness ? cfg_flatness : default_flatness_px;
    return s;
}

// ---- documents ------------------------------------------------------------

struct Curve {
    std::string kind;
    std::vector<PointFx> points;
    bool closed = false;
    int k = 0;
    std::optional<double> aux_radius;
    std::optional<double> flatness;
    std::optional<int> kmax;
    bool strict = false;
    bool capped = false;
    bool clamped = false;
    std::optional<double> start;
    std::optional<double> sweep;
};

struct Document {
    std::string shape;
    std::vector<Curve> curves;
    json extra = json::object();
};

json curve_json(const Curve& c) {
    json j;
    j["kind"] = c.kind;
    j["closed"] = c.closed;
    j["k"] = c.k;
    j["aux_radius"] = c.aux_radius ? json(round4(*c.aux_radius)) : json(nullptr);
    if (c.flatness) {
        j["flatness"] = *c.flatness;
        j["kmax"] = *c.kmax;
        j["strict_flatness"] = c.strict;
        j["flatness_clamped"] = c.clamped;
        j["kmax_capped"] = c.capped;
    }
    if (c.start)
        j["start"] = *c.start;
    if (c.sweep)
        j["sweep"] = *c.sweep;
    j["point_count"] = c.points.size();
    json pts = json::array();
    json raw = json::array();
    for (const PointFx& p : c.points) {
        pts.push_back({round4(exact_px(p.x)), round4(exact_px(p.y))});
        raw.push_back({p.x.raw, p.y.raw});
    }
    j["points"] = std::move(pts);
    j["raw"] = std::move(raw);
    return j;
}

std::string write_json(const Document& d) {
    json j;
    j["shape"] = d.shape;
    for (const auto& [key, value] : d.extra.items())
        j[key] = value;
    if (d.curves.size() == 1) {
        const json curve = curve_json(d.curves.front());
        for (const auto& [key, value] : curve.items())
            j[key] = value;
    } else {
        json arr = json::array();
        for (const Curve& c : d.curves)
            arr.push_back(curve_json(c));
        j["curves"] = std::move(arr);
    }
    return j.dump() + "\n";
}

std::string write_csv(const Document& d) {
    std::string out = "x,y\n";
    for (std::size_t i = 0; i < d.curves.size(); ++i) {
        if (i > 0)
            out += "\n";
        for (const PointFx& p : d.curves[i].points)
            out += fmt4(exact_px(p.x)) + "," + fmt4(exact_px(p.y)) + "\n";
    }
    return out;
}

// Window coordinates are written unchanged, so y grows downward.
std::string write_svg(const Document& d) {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool first = true;
    for (const Curve& c : d.curves)
        for (const PointFx& p : c.points) {
            const double x = exact_px(p.x), y = exact_px(p.y);
            if (first) {
                x0 = x1 = x;
                y0 = y1 = y;
                first = false;
            }
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    const double margin = 8.0;
    x0 = std::floor(x0 - margin);
    y0 = std::floor(y0 - margin);
    x1 = std::ceil(x1 + margin);
    y1 = std::ceil(y1 + margin);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt4(x0) + " " + fmt4(y0) + " " +
                      fmt4(x1 - x0) + " " + fmt4(y1 - y0) + "\" width=\"" + fmt4(x1 - x0) + "\" height=\"" +
                      fmt4(y1 - y0) + "\">\n";
    for (const Curve& c : d.curves) {
        std::string path;
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            path += i == 0 ? "M " : i == 1 ? " L " : " ";
            path += fmt4(exact_px(c.points[i].x)) + " " + fmt4(exact_px(c.points[i].y));
        }
        if (c.closed)
            path += " Z";
        out += "  <path data-kind=\"" + c.kind + "\" data-k=\"" + std::to_string(c.k) + "\" d=\"" + path +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render(const Document& d, const std::string& format) {
    if (format == "json")
        return write_json(d);
    if (format == "csv")
        return write_csv(d);
    return write_svg(d);
}

// ---- shape commands -------------------------------------------------------

struct Geometry {
    std::string center, p, q;
};

ConjugateEllipse ellipse_of(const Geometry& g) {
    return {to_fixed(parse_point(g.center, "--center")), to_fixed(parse_point(g.p, "--p")),
            to_fixed(parse_point(g.q, "--q"))};
}

// Chooses k for an ellipse and fills the curve metadata.
int choose_k(const ConjugateEllipse& e, const Settings& s, Curve& c) {
    const ConjugateEllipse rel = to_center_relative(e);
    if (s.k) {
        check_step_exponent(*s.k);
        c.k = *s.k;
        c.aux_radius = to_float(aux_radius(rel.p, rel.q));
        return c.k;
    }
    const FlatnessConfig cfg = FlatnessConfig::make(*s.flatness, s.kmax, s.strict);
    const AngularIncInfo info = angular_inc_info(rel.p, rel.q, cfg);
    c.k = info.k;
    c.aux_radius = info.radius;
    c.flatness = to_float(cfg.flatness);
    c.kmax = cfg.kmax;
    c.strict = cfg.strict;
    c.clamped = cfg.clamped;
    c.capped = info.capped;
    return c.k;
}

Document cmd_ellipse(const Geometry& g, const Settings& s) {
    const ConjugateEllipse e = ellipse_of(g);
    Curve c;
    c.kind = "ellipse";
    c.closed = true;
    c.points = plot_ellipse(e, choose_k(e, s, c)).points;
    return {"ellipse", {c}};
}

Curve elliptic_arc_curve(const ConjugateEllipse& e, double start, double sweep, const Settings& s) {
    if (sweep == 0.0)
        throw CliError("empty_arc", "arc sweep is 0: the arc would be a single point");
    Curve c;
    c.kind = "arc";
    c.start = start;
    c.sweep = sweep;
    c.points = plot_elliptic_arc(e, {start, sweep}, choose_k(e, s, c)).points;
    return c;
}

Document cmd_arc(const Geometry& g, double start, double sweep, const Settings& s) {
    return {"arc", {elliptic_arc_curve(ellipse_of(g), start, sweep, s)}};
}

Document cmd_hyperbola(const Geometry& g, double start, double sweep, const FlagValues& flags,
                       const Settings& s) {
    if (flags.flatness)
        throw CliError("invalid_argument", "hyperbolic arcs take an explicit --k; there is no flatness rule");
    if (!s.k)
        throw CliError("invalid_argument", "hyperbola requires --k");
    const ConjugateEllipse e = ellipse_of(g);
    Curve c;
    c.kind = "hyperbola";
    c.k = *s.k;
    c.start = start;
    c.sweep = sweep;
    c.points = plot_hyperbolic_arc({e.center, e.p, e.q}, start, sweep, *s.k).points;
    return {"hyperbola", {c}};
}

// Six affine placements of one pie chart, each drawn as two wedges that
// share the same start and sweep angles.
Document cmd_demo_pie(double start, double sweep, const Settings& s) {
    if (sweep == 0.0)
        throw CliError("empty_arc", "arc sweep is 0: the arc would be a single point");
    struct Placement {
        RealPoint p, q;
    };
    const Placement placements[] = {
        {{80, 0}, {0, 80}},   {{90, 0}, {0, 50}},   {{70, 40}, {-25, 45}},
        {{80, 0}, {40, 60}},  {{85, 10}, {-5, 35}}, {{75, 0}, {0, -60}},
    };
    Document d;
    d.shape = "demo-pie";
    d.extra["start"] = start;
    d.extra["sweep"] = sweep;
    for (int i = 0; i < 6; ++i) {
        const RealPoint c{120.0 + 220.0 * (i % 3), 120.0 + 220.0 * (i / 3)};
        const Placement& pl = placements[i];
        const ConjugateEllipse e{to_fixed(c), to_fixed({c.x + pl.p.x, c.y + pl.p.y}),
                                 to_fixed({c.x + pl.q.x, c.y + pl.q.y})};
        auto wedge = [&](double a0, double a1) {
            Curve w = elliptic_arc_curve(e, a0, a1, s);
            w.kind = "wedge";
            w.closed = true;
            w.points.insert(w.points.begin(), e.center);
            d.curves.push_back(std::move(w));
        };
        wedge(start, sweep);
        const double rest = sweep > 0 ? two_pi - sweep : -two_pi - sweep;
        if (rest != 0.0)
            wedge(start + sweep, rest);
    }
    return d;
}

// ---- convert --------------------------------------------------------------

json point_array(RealPoint p) { return json::array({p.x, p.y}); }

RealPoint json_point(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 || !j[key][0].is_number() ||
        !j[key][1].is_number())
        throw CliError("invalid_argument", "conjugate." + key + " must be [x, y]");
    return {j[key][0].get<double>(), j[key][1].get<double>()};
}

std::string cmd_convert(const std::string& text, bool strict) {
    const json in = parse_json(text, "convert input");
    json out;
    if (in.contains("implicit")) {
        const json& c = in["implicit"];
        ImplicitConic conic;
        double* fields[] = {&conic.a, &conic.b, &conic.c, &conic.d, &conic.e, &conic.f};
        const char* names[] = {"a", "b", "c", "d", "e", "f"};
        for (int i = 0; i < 6; ++i) {
            if (!c.contains(names[i]) || !c[names[i]].is_number())
                throw CliError("invalid_argument", std::string("implicit.") + names[i] + " must be a number");
            *fields[i] = c[names[i]].get<double>();
        }
        const CenteredEllipse e =
            ellipse_from_implicit(conic, strict ? CalibrationPolicy::strict : CalibrationPolicy::automatic);
        const double delta = calibration_number(translate_to_origin(conic).conic);
        out["conjugate"] = {{"center", point_array(e.center)},
                            {"p", point_array({e.center.x + e.p.x, e.center.y + e.p.y})},
                            {"q", point_array({e.center.x + e.q.x, e.center.y + e.q.y})}};
        out["calibration_number"] = delta;
        out["auto_calibrated"] = std::fabs(delta - 1.0) > calibration_tolerance;
    } else if (in.contains("conjugate")) {
        const json& c = in["conjugate"];
        const RealPoint center = json_point(c, "center");
        const RealPoint p = json_point(c, "p");
        const RealPoint q = json_point(c, "q");
        const ImplicitConic conic =
            implicit_from_ellipse({center, {p.x - center.x, p.y - center.y}, {q.x - center.x, q.y - center.y}});
        out["implicit"] = {{"a", conic.a}, {"b", conic.b}, {"c", conic.c},
                           {"d", conic.d}, {"e", conic.e}, {"f", conic.f}};
    } else {
        throw CliError("invalid_argument", "convert input needs an \"implicit\" or \"conjugate\" object");
    }
    return out.dump() + "\n";
}

// ---- verify ---------------------------------------------------------------

Result cmd_verify(const std::string& suite, const verify::Options& opts) {
    Result r;
    std::vector<std::string> names;
    if (suite == "all")
        names = verify::suite_names();
    else if (verify::has_suite(suite))
        names = {suite};
    else
        throw CliError("invalid_argument", "unknown suite '" + suite + "'");

    bool pass = true;
    json reports = json::array();
    for (const std::string& name : names) {
        const verify::Report rep = verify::run(name, opts);
        pass = pass && rep.pass;
        reports.push_back(verify::to_json(rep));
    }
    json out = names.size() == 1 ? reports.front() : json{{"pass", pass}, {"reports", reports}};
    r.out = out.dump(2) + "\n";
    r.exit_code = pass ? exit_ok : exit_verify_failed;
    return r;
}

// ---- command line ---------------------------------------------------------

void add_geometry(CLI::App* sub, Geometry& g) {
    sub->add_option("--center", g.center, "ellipse or hyperbola center X,Y (px)")->required();
    sub->add_option("--p", g.p, "conjugate diameter end point P as X,Y (px)")->required();
    sub->add_option("--q", g.q, "conjugate diameter end point Q as X,Y (px)")->required();
}

void add_settings(CLI::App* sub, FlagValues& f, bool spacing) {
    if (spacing) {
        auto* fl = sub->add_option("--flatness", f.flatness, "maximum chord-to-curve gap (px)");
        auto* k = sub->add_option("--k", f.k, "explicit angular increment exponent (eps = 2^-k)");
        fl->excludes(k);
        sub->add_option("--kmax", f.kmax, "upper bound for the chosen k");
        sub->add_flag("--strict-flatness", f.strict, "use the exact auxiliary radius and sagitta");
        sub->add_option("--config", f.config, "JSON file with defaults (flatness, kmax, strict_flatness, format)");
    }
    sub->add_option("--format", f.format, "svg, csv or json");
}

}  // namespace

Result run(const std::vector<std::string>& args, const std::string& stdin_text) {
    Result res;
    CLI::App app{"Fixed-point ellipse, elliptic-arc and hyperbolic-arc plotter", "conicfx"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "write the document to a file instead of stdout");

    Geometry geom;
    FlagValues flags;
    double start = 0.0;
    double sweep = 0.0;
    bool strict_calibration = false;
    std::string json_text, input_path;
    std::string suite;
    verify::Options vopts;

    auto* ellipse = app.add_subcommand("ellipse", "plot a full ellipse");
    add_geometry(ellipse, geom);
    add_settings(ellipse, flags, true);

    auto* arc = app.add_subcommand("arc", "plot an elliptic arc");
    add_geometry(arc, geom);
    add_settings(arc, flags, true);
    arc->add_option("--start", start, "start angle (rad)");
    arc->add_option("--sweep", sweep, "signed sweep angle (rad), |sweep| <= 2 pi")->required();

    auto* hyper = app.add_subcommand("hyperbola", "plot a hyperbolic arc");
    add_geometry(hyper, geom);
    add_settings(hyper, flags, false);
    hyper->add_option("--k", flags.k, "angular increment exponent (eps = 2^-k)");
    hyper->add_option("--flatness", flags.flatness, "not supported for hyperbolas");
    hyper->add_option("--start", start, "start hyperbolic angle");
    hyper->add_option("--sweep", sweep, "signed hyperbolic sweep, |sweep| <= 8")->required();

    auto* convert = app.add_subcommand("convert", "convert between implicit and conjugate-diameter forms");
    auto* j_opt = convert->add_option("--json", json_text, "input document as a string");
    auto* i_opt = convert->add_option("--input", input_path, "input document file");
    j_opt->excludes(i_opt);
    convert->add_flag("--strict-calibration", strict_calibration, "reject coefficients that are not calibrated");

    auto* verify_cmd = app.add_subcommand("verify", "run a measurement suite (or 'all')");
    verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--seed", vopts.seed, "random seed");
    verify_cmd->add_option("--cases", vopts.cases, "number of random cases (0 = suite default)");

    auto* pie = app.add_subcommand("demo-pie", "six pie charts sharing one start and sweep angle");
    add_settings(pie, flags, true);
    double pie_start = 0.5;
    double pie_sweep = 4.5;
    pie->add_option("--start", pie_start, "start angle (rad)");
    pie->add_option("--sweep", pie_sweep, "signed sweep angle (rad)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            const auto subs = app.get_subcommands();
            res.out = subs.empty() ? app.help() : subs.front()->help();
            return res;
        }
        res.err = error_line("usage", e.what());
        res.exit_code = exit_validation;
        return res;
    }

    try {
        std::string doc;
        if (*ellipse) {
            const Settings s = resolve(flags);
            doc = render(cmd_ellipse(geom, s), s.format);
        } else if (*arc) {
            const Settings s = resolve(flags);
            doc = render(cmd_arc(geom, start, sweep, s), s.format);
        } else if (*hyper) {
            const Settings s = resolve(flags);
            doc = render(cmd_hyperbola(geom, start, sweep, flags, s), s.format);
        } else if (*pie) {
            const Settings s = resolve(flags);
            doc = render(cmd_demo_pie(pie_start, pie_sweep, s), s.format);
        } else if (*convert) {
            const std::string text = !json_text.empty() ? json_text
                                     : !input_path.empty() ? read_file(input_path)
                                                           : stdin_text;
            doc = cmd_convert(text, strict_calibration);
        } else if (*verify_cmd) {
            Result v = cmd_verify(suite, vopts);
            doc = std::move(v.out);
            res.exit_code = v.exit_code;
        }
        if (output.empty()) {
            res.out = std::move(doc);
        } else {
            std::ofstream f(output, std::ios::binary);
            if (!f || !(f << doc))
                throw CliError("io_error", "cannot write " + output);
        }
    } catch (const Error& e) {
        res.err = error_line(to_string(e.code()), e.what());
        res.exit_code = exit_for(e.code());
    } catch (const CliError& e) {
        res.err = error_line(e.code, e.what());
        res.exit_code = e.exit_code;
    }
    return res;
}

}  // namespace conicfx::cli
