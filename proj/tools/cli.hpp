#pragma once

#include <string>
#include <vector>

namespace conicfx::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_validation = 2,
    exit_degenerate = 3,
};

struct Result {
    int exit_code = exit_ok;
    std::string out;  // document
    std::string err;  // one JSON object per diagnostic line
};

// Runs one command line (without the program name). `stdin_text` stands in
// for standard input where a command reads it.
Result run(const std::vector<std::string>& args, const std::string& stdin_text = {});

}  // namespace conicfx::cli
