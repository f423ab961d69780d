#include <cstdio>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    // Only `convert` without --json/--input reads standard input.
    std::string input;
    bool wants_stdin = !args.empty() && args[0] == "convert";
    for (const std::string& a : args)
        if (a.rfind("--json", 0) == 0 || a.rfind("--input", 0) == 0 || a == "-h" || a == "--help")
            wants_stdin = false;
    if (wants_stdin) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        input = ss.str();
    }

    const conicfx::cli::Result r = conicfx::cli::run(args, input);
    std::fwrite(r.out.data(), 1, r.out.size(), stdout);
    std::fwrite(r.err.data(), 1, r.err.size(), stderr);
    return r.exit_code;
}
