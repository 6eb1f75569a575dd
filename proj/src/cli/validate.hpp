// validate.hpp: randomized oracle suites run by `tidisc validate`

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tidisc::cli {

struct SuiteResult {
    std::string name;
    int n = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct ValidateOptions {
    std::vector<std::string> suites; // empty: all
    int n = 0;                       // 0: per-suite default
    std::uint64_t seed = 20240611;
    bool inject_unrepaired_kappa = false;
};

/// discord, map, quadrature, factorization.
const std::vector<std::string>& suite_names();

/// Suites draw from one mt19937_64 stream per suite, seeded from `seed` and the suite position,
/// so a suite's draws do not depend on which other suites run.
std::vector<SuiteResult> run_validation(const ValidateOptions& options);

std::string format_suite_line(const SuiteResult& r);

} // namespace tidisc::cli
