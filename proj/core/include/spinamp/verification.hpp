#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spinamp {

/// Absolute tolerances used by the invariant suite.
struct Tolerances {
    double identity = 1e-12;   // algebraic identities
    double oracle = 1e-10;     // cross-route agreement and singlet physics
    double limit = 1e-15;      // standard-form regressions
    double spectrum = 1e-10;   // operator eigenvalues
    double imaginary = 1e-12;  // imaginary residue of matrix-path expectations
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    Tolerances tolerances;
    std::size_t kernel_samples = 1000;
    std::size_t state_samples = 100;
    std::size_t oracle_samples = 1000;
    std::size_t invariance_pairs = 100;
    std::size_t grid_size = 5;
    std::size_t sweep_points = 181;
    /// Subset of check names to run; empty runs all of them.
    std::vector<std::string> checks;
};

struct CheckResult {
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Set when the check aborted on an exception.
    std::string error;
};

struct VerificationSummary {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const noexcept;
};

/// Names of all checks in execution order.
[[nodiscard]] const std::vector<std::string_view>& verification_check_names();

/// Runs the selected checks. Each check draws from its own generator derived
/// from (seed, check name), so a check reports the same residual whether it
/// runs alone or with the others. Throws PreconditionError on an unknown name.
[[nodiscard]] VerificationSummary run_verification(const VerifyOptions& options);

}  // namespace spinamp
