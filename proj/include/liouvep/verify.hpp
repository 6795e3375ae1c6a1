#pragma once

#include <string>

#include "liouvep/jordan.hpp"

namespace liouvep {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Named invariant suites: kl-eigen, chains, freedom, trace, oracle, or all.
// Throws std::invalid_argument on unknown suite names.
std::vector<CheckResult> runSuite(const std::string& suite, int nMax);

bool allPassed(const std::vector<CheckResult>& results);

} // namespace liouvep
