#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cliffleg {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    double max_residual = 0;  // 0 for exact checks that hold
    std::string detail;
};

struct VerifyOptions {
    std::optional<int> m;      // restrict dimension grids to this m
    std::optional<double> tol;  // overrides floating-point tolerances
};

struct CheckInfo {
    std::string name;   // "<suite>.<check>"
    std::string suite;
    std::function<CheckResult(const VerifyOptions&)> run;
};

const std::vector<CheckInfo>& check_registry();

/// algebra, radial, recurrence, bonnet, jacobi, fourier, degeneracy
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);  // including "all"

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

} // namespace cliffleg
