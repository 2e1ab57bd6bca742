#pragma once

// Deterministic invariant suite across all modules, reported as a pass/fail
// table.

#include <functional>
#include <string>
#include <vector>

namespace abcone::verify {

struct CheckResult {
    std::string module;
    std::string name;
    bool passed;
    double metric;     // worst observed deviation
    double tolerance;
};

struct VerifyOptions {
    /// Gamma used by the reflection check; replaceable to show the check bites.
    std::function<double(double)> gamma;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string table() const;
};

VerifyReport run_verify(const VerifyOptions& options = {});

/// One point of the shell-versus-KS comparison at r0 = 1e-3.
struct ShellStudyRow {
    double abs_j;
    double ratio;  // |lambda| / |j|
    double lambda;
    double kappa_shell;
    double kappa_ks;
    double deviation;  // |kappa_shell - kappa_ks| / kappa_ks
    double z_ks;       // kappa_ks * r0
};

struct ShellStudy {
    std::vector<ShellStudyRow> rows;  // every grid point, filtered or not
    std::size_t in_window;            // rows with ratio >= 20 and z_ks <= 0.05
    double worst_deviation;           // over the window
    bool monotone;                    // deviation decreases with ratio at each |j|, in the window
    bool passed;
};

ShellStudy shell_ks_study();

/// Root of (1 - exp(-2z)) / (2z) = -1/lambda by plain bisection.
double half_integer_shell_root(double lambda);

}  // namespace abcone::verify
