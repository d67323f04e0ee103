#pragma once
// Named invariant suites shared by the CLI `check` command and the
// acceptance battery: each check re-measures a module-level identity or
// decay property and reports the measured value against its gate.

#include <string>
#include <vector>

namespace zml {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double gate = 0.0;  // pass iff measured <= gate
    bool pass = false;
};

// Suites: functional-equation, translation, tanh, selberg, runge, all.
// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> check_suite(const std::string& suite);
std::vector<std::string> check_suite_names();

}  // namespace zml
