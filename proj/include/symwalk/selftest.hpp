#pragma once

#include <string>
#include <vector>

namespace symwalk {

struct SelfTestResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Example-vector suites per module, used by the CLI `--selftest` flags.
std::vector<SelfTestResult> selftest_diagrams();
std::vector<SelfTestResult> selftest_excited();
std::vector<SelfTestResult> selftest_characters();
std::vector<SelfTestResult> selftest_bounds();
std::vector<SelfTestResult> selftest_walks();

bool all_passed(const std::vector<SelfTestResult>& results);

}  // namespace symwalk
