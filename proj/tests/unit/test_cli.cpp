#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using conicfx::cli::run;
using json = nlohmann::json;

namespace {

std::string error_code(const conicfx::cli::Result& r) { return json::parse(r.err)["error"]["code"]; }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

const std::vector<std::string> circle = {"ellipse", "--center", "200,200", "--p", "300,200", "--q", "200,300"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> more) {
    base.insert(base.end(), more);
    return base;
}

}  // namespace

TEST_CASE("circle of radius 100 at flatness 0.25 uses k = 3") {
    const auto r = run(with(circle, {"--flatness", "0.25", "--format", "json"}));
    REQUIRE(r.exit_code == 0);
    const json d = json::parse(r.out);
    CHECK(d["shape"] == "ellipse");
    CHECK(d["k"] == 3);
    CHECK(d["aux_radius"] == 106.25);
    CHECK(d["closed"] == true);
    CHECK(d["point_count"] == 51);
    CHECK(d["points"].size() == 51);
    CHECK(d["points"][0][0] == 300.0);
    CHECK(d["points"][0][1] == 200.0);
    CHECK(d["raw"][0][0] == 300 * 65536);
}

TEST_CASE("svg and csv output") {
    const auto svg = run(with(circle, {"--format", "svg"}));
    REQUIRE(svg.exit_code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out.find("data-k=\"3\"") != std::string::npos);
    CHECK(svg.out.find(" Z\"") != std::string::npos);

    const auto csv = run(with(circle, {"--format", "csv"}));
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("x,y\n300.0000,200.0000\n", 0) == 0);
}

TEST_CASE("explicit k and strict flatness") {
    const auto r = run(with(circle, {"--k", "5", "--format", "json"}));
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["k"] == 5);
    CHECK(json::parse(r.out)["point_count"] == (411775 >> 11) + 1);

    const auto s = run(with(circle, {"--flatness", "0.25", "--strict-flatness", "--format", "json"}));
    REQUIRE(s.exit_code == 0);
    CHECK(json::parse(s.out)["strict_flatness"] == true);
    CHECK(json::parse(s.out)["aux_radius"] == 100.0);

    CHECK(run(with(circle, {"--k", "5", "--flatness", "1"})).exit_code == 2);
    CHECK(run(with(circle, {"--k", "16"})).exit_code == 2);
}

TEST_CASE("arc output") {
    const auto r = run({"arc", "--center", "400,300", "--p", "600,300", "--q", "400,400", "--start", "0.5", "--sweep",
                        "-2", "--k", "4", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const json d = json::parse(r.out);
    CHECK(d["closed"] == false);
    CHECK(d["start"] == 0.5);
    CHECK(d["sweep"] == -2.0);
    CHECK(d["point_count"] == (131072 >> 12) + 2);
}

TEST_CASE("zero-sweep arcs are rejected") {
    const auto r = run({"arc", "--center", "1,1", "--p", "5,1", "--q", "1,5", "--sweep", "0"});
    CHECK(r.exit_code == 2);
    CHECK(error_code(r) == "empty_arc");
    CHECK(r.out.empty());
}

TEST_CASE("error exit codes") {
    const auto degenerate = run({"ellipse", "--center", "1,1", "--p", "5,1", "--q", "9,1"});
    CHECK(degenerate.exit_code == 3);
    CHECK(error_code(degenerate) == "degenerate");

    const auto range = run({"ellipse", "--center", "20000,1", "--p", "5,1", "--q", "1,5"});
    CHECK(range.exit_code == 2);
    CHECK(error_code(range) == "out_of_range");

    const auto sweep = run({"arc", "--center", "1,1", "--p", "5,1", "--q", "1,5", "--sweep", "7"});
    CHECK(sweep.exit_code == 2);
    CHECK(error_code(sweep) == "sweep_out_of_range");

    const auto usage = run({"ellipse", "--center", "1,1"});
    CHECK(usage.exit_code == 2);
    CHECK(error_code(usage) == "usage");

    const auto bad_point = run({"ellipse", "--center", "1;1", "--p", "5,1", "--q", "1,5"});
    CHECK(bad_point.exit_code == 2);

    CHECK(run({"ellipse", "--center", "1,1", "--p", "5,1", "--q", "1,5", "--format", "png"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("hyperbola command") {
    const std::vector<std::string> base = {"hyperbola", "--center", "300,300", "--p", "340,300", "--q", "300,330",
                                           "--sweep", "1"};
    const auto r = run(with(base, {"--k", "4", "--format", "json"}));
    REQUIRE(r.exit_code == 0);
    const json d = json::parse(r.out);
    CHECK(d["kind"] == "hyperbola");
    CHECK(d["points"][0][0] == 340.0);
    CHECK(d["point_count"] == (65536 >> 12) + 2);

    CHECK(run(base).exit_code == 2);
    CHECK(run(with(base, {"--k", "4", "--flatness", "0.25"})).exit_code == 2);
    const auto far = run({"hyperbola", "--center", "300,300", "--p", "340,300", "--q", "300,330", "--sweep", "9",
                          "--k", "4"});
    CHECK(error_code(far) == "sweep_out_of_range");
}

TEST_CASE("config file precedence") {
    const auto cfg = temp_file("conicfx_test_config.json", R"({"flatness": 0.0625, "kmax": 9, "format": "json"})");
    const auto from_config = run(with(circle, {"--config", cfg.string()}));
    REQUIRE(from_config.exit_code == 0);
    const json d = json::parse(from_config.out);
    CHECK(d["flatness"] == 0.0625);
    CHECK(d["kmax"] == 9);
    // 106.25 * (2^-8/8 + 2^-16/128) = 0.052 <= 1/16
    CHECK(d["k"] == 4);

    const auto flag_wins = run(with(circle, {"--config", cfg.string(), "--flatness", "1", "--format", "csv"}));
    REQUIRE(flag_wins.exit_code == 0);
    CHECK(flag_wins.out.rfind("x,y", 0) == 0);

    const auto bad = temp_file("conicfx_test_bad_config.json", R"({"flatnes": 1})");
    const auto r = run(with(circle, {"--config", bad.string()}));
    CHECK(r.exit_code == 2);
    CHECK(error_code(r) == "invalid_config");

    CHECK(error_code(run(with(circle, {"--config", "/nonexistent/conicfx.json"}))) == "io_error");
    std::filesystem::remove(cfg);
    std::filesystem::remove(bad);
}

TEST_CASE("convert between representations") {
    const auto r = run({"convert", "--json", R"({"implicit":{"a":4,"b":0,"c":9,"d":0,"e":0,"f":-36}})"});
    REQUIRE(r.exit_code == 0);
    const json d = json::parse(r.out);
    CHECK(d["conjugate"]["p"][0] == doctest::Approx(3.0));
    CHECK(d["conjugate"]["q"][1] == doctest::Approx(2.0));
    CHECK(d["calibration_number"] == doctest::Approx(1.0));
    CHECK(d["auto_calibrated"] == false);

    const auto back = run({"convert"}, json({{"conjugate", d["conjugate"]}}).dump());
    REQUIRE(back.exit_code == 0);
    const json i = json::parse(back.out)["implicit"];
    CHECK(i["a"] == doctest::Approx(4.0));
    CHECK(i["c"] == doctest::Approx(9.0));
    CHECK(i["f"] == doctest::Approx(-36.0));

    const auto scaled = R"({"implicit":{"a":16,"b":0,"c":36,"d":0,"e":0,"f":-144}})";
    const auto autocal = run({"convert", "--json", scaled});
    REQUIRE(autocal.exit_code == 0);
    CHECK(json::parse(autocal.out)["auto_calibrated"] == true);
    const auto strict = run({"convert", "--strict-calibration", "--json", scaled});
    CHECK(strict.exit_code == 2);
    CHECK(error_code(strict) == "not_calibrated");

    const auto hyper = run({"convert", "--json", R"({"implicit":{"a":1,"b":0,"c":-1,"d":0,"e":0,"f":-1}})"});
    CHECK(hyper.exit_code == 3);
    CHECK(error_code(hyper) == "not_ellipse");

    CHECK(run({"convert", "--json", "{"}).exit_code == 2);
    CHECK(run({"convert", "--json", R"({"other":{}})"}).exit_code == 2);
}

TEST_CASE("demo pie") {
    const auto r = run({"demo-pie", "--format", "json", "--start", "1", "--sweep", "2"});
    REQUIRE(r.exit_code == 0);
    const json d = json::parse(r.out);
    int matching = 0;
    for (const json& c : d["curves"]) {
        CHECK(c["closed"] == true);
        if (c["start"] == 1.0 && c["sweep"] == 2.0)
            ++matching;
    }
    CHECK(matching == 6);
    CHECK(d["curves"].size() == 12);
}

TEST_CASE("verify command") {
    const auto ok = run({"verify", "kmax"});
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["pass"] == true);
    const auto small = run({"verify", "reversibility", "--cases", "1000", "--seed", "7"});
    CHECK(small.exit_code == 0);
    CHECK(run({"verify", "nonsense"}).exit_code == 2);
}

TEST_CASE("output is deterministic and can go to a file") {
    const auto a = run(with(circle, {"--format", "svg"}));
    const auto b = run(with(circle, {"--format", "svg"}));
    CHECK(a.out == b.out);

    const auto path = std::filesystem::temp_directory_path() / "conicfx_test_out.svg";
    const auto w = run(with({"-o", path.string()}, {"ellipse", "--center", "200,200", "--p", "300,200", "--q",
                                                     "200,300", "--format", "svg"}));
    REQUIRE(w.exit_code == 0);
    CHECK(w.out.empty());
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("help goes to stdout") {
    const auto r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ellipse") != std::string::npos);
}
