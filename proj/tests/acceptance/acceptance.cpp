// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "verify.hpp"

#ifndef CONICFX_CLI_PATH
#error "CONICFX_CLI_PATH must name the conicfx executable"
#endif

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome suite(const char* name) {
    const conicfx::verify::Report r = conicfx::verify::run(name);
    std::string detail = r.stats.dump();
    if (std::string(name) == "reversibility")
        detail += " elapsed_s=" + std::to_string(r.elapsed_s);
    return {r.pass, detail};
}

bool capture(const std::string& cmd, std::string& out) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return false;
    char buf[4096];
    std::size_t n;
    out.clear();
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    return pclose(pipe) == 0;
}

Outcome determinism() {
    const std::string exe = CONICFX_CLI_PATH;
    const std::vector<std::string> commands = {
        "ellipse --center 200,200 --p 300,200 --q 200,300 --flatness 0.25 --format svg",
        "ellipse --center 512,384 --p 900,500 --q 400,600 --flatness 0.1 --strict-flatness --format json",
        "arc --center 400,300 --p 600,350 --q 380,420 --start 0.3 --sweep -2.5 --k 5 --format json",
        "hyperbola --center 300,300 --p 340,300 --q 300,330 --start -1 --sweep 2.5 --k 5 --format csv",
        "demo-pie --format svg",
        "convert --json '{\"implicit\":{\"a\":1,\"b\":0.5,\"c\":2,\"d\":-3,\"e\":4,\"f\":-20}}'",
    };
    std::size_t bytes = 0;
    for (const std::string& c : commands) {
        std::string first, second;
        if (!capture(exe + " " + c, first) || !capture(exe + " " + c, second))
            return {false, "command failed: " + c};
        if (first != second || first.empty())
            return {false, "output differs between runs: " + c};
        bytes += first.size();
    }
    return {true, "{\"commands\":" + std::to_string(commands.size()) + ",\"bytes\":" + std::to_string(bytes) + "}"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Outcome (*check)();
    };
    const Criterion criteria[] = {
        {1, "exact reversibility of the forward/reverse generators", [] { return suite("reversibility"); }},
        {2, "corrected generator vs closed form within n*2^-15 px", [] { return suite("drift"); }},
        {3, "circle r=1000 at flatness 0.25: radial error <= 0.1 px", [] { return suite("radial"); }},
        {4, "measured chord deviation within the flatness contract", [] { return suite("flatness"); }},
        {5, "VLen relative error band", [] { return suite("vlen-band"); }},
        {6, "AuxRadius relative error band", [] { return suite("auxradius-band"); }},
        {7, "kmax_for(5000, 0.25) = 6", [] { return suite("kmax"); }},
        {8, "conic round trips and calibration", [] { return suite("conic-roundtrip"); }},
        {9, "matrix-power recurrence vs naive multiplication", [] { return suite("matrix-power"); }},
        {10, "hyperbolic arcs vs cosh/sinh oracle", [] { return suite("hyperbola"); }},
        {11, "repeated CLI invocations are byte-identical", determinism},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " " << o.detail
                  << std::endl;
    }
    std::cout << (sizeof criteria / sizeof criteria[0]) - failed << "/" << sizeof criteria / sizeof criteria[0]
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
