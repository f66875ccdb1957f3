#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlemap {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full verification suite at its pinned tolerances, printing one
/// PASS/FAIL line per check on `log`. Deterministic: every randomized check
/// uses a fixed seed.
std::vector<CheckResult> run_verification(std::ostream& log);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace circlemap
