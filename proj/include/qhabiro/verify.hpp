#pragma once

#include <string>
#include <vector>

#include "qhabiro/knotdata.hpp"

namespace qh {

struct SuiteParams {
    long level = 25;
    std::vector<long> orders = {3, 5, 7, 9, 11};
    long range = 10;
    std::string knot = "4_1";
};

struct SuiteReport {
    std::string suite;
    bool passed = false;
    std::vector<std::string> lines;
};

std::vector<std::string> suite_names();

/// Suites: basis, integrality, recurrences, imk1, vanishing, tower.
/// Each emits one line per check with witnesses on failure.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

} // namespace qh
