#pragma once

// Measurement suites behind `conicfx verify` and the acceptance binary.
// Every suite is seeded and deterministic for a given seed and case count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace conicfx::verify {

struct Options {
    std::uint64_t seed = 0x5eed'c0de;
    long cases = 0;  // 0 selects the suite default
};

struct Report {
    std::string suite;
    bool pass = false;
    nlohmann::ordered_json stats;
    double elapsed_s = 0.0;  // wall clock; kept out of the JSON so reports stay reproducible
};

const std::vector<std::string>& suite_names();
bool has_suite(std::string_view name);

// Throws conicfx::Error(invalid_config) for an unknown suite name.
Report run(std::string_view name, const Options& opts = {});

nlohmann::ordered_json to_json(const Report& r);

}  // namespace conicfx::verify
