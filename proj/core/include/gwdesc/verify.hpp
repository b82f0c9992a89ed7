#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwdesc/fixtures.hpp"
#include "gwdesc/novikov.hpp"

namespace gwdesc {

struct VerifyOptions {
    TruncationPolicy policy{3, 4, 3};
    int nmax = 7;
    std::size_t samples = 200;
    std::uint64_t seed = 20240917;
};

struct SuiteResult {
    std::string suite;
    std::string model;
    bool applicable = true;
    std::size_t witnesses = 0;
    std::size_t nonzero = 0;
    std::size_t failures = 0;
    std::optional<std::string> counterexample;
    std::string note;

    bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();

// Throws ConfigError for an unknown suite.
SuiteResult run_suite(const std::string& suite, const FixtureModel& fixture, const VerifyOptions& options);

// One line per suite; no timings, so reruns are byte-identical.
std::string format_result(const SuiteResult& result);

} // namespace gwdesc
