#pragma once

#include <cstdint>
#include <string>

#include "ddimer/rational.hpp"

namespace ddimer {

struct SuiteResult {
    bool pass = true;
    std::string report;  // JSON, one entry per instance/case
};

// Suites: kuo | condense | tripartite | kasteleyn | signs.
// Identical (name, seed, count, cap) produce byte-identical reports.
SuiteResult run_suite(const std::string& name, uint64_t seed, int count, long long cap);

}  // namespace ddimer
