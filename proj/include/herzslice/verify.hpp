#pragma once

#include <string>
#include <vector>

#include "herzslice/common.hpp"

namespace herzslice {

struct CheckResult {
    std::string name;
    bool pass = true;
    double worst = 0.0;  // largest violation observed (0 = clean)
    std::string details;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// grid, lebesgue, slice, herz, blocks, maximal, duality, corpus.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace herzslice
