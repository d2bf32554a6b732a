#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "config.hpp"

namespace spinamp::cli {

/// Process exit statuses.
enum ExitStatus : int {
    kSuccess = 0,
    kUsageError = 1,
    kVerificationFailure = 2,
    kConsistencyError = 3,
};

[[nodiscard]] std::string tool_version();

/// Executes one command, writing records in the configured format to `out`
/// and diagnostics to `err`. Returns an ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// JSON payload builders shared by run() and tests.
[[nodiscard]] nlohmann::json to_json(const Complex& z);
[[nodiscard]] nlohmann::json to_json(const Direction& d);
[[nodiscard]] nlohmann::json to_json(const TwoVector& v);
[[nodiscard]] nlohmann::json to_json(const TwoByTwo& m);
[[nodiscard]] nlohmann::json to_json(const StateAssembly& state);
[[nodiscard]] nlohmann::json to_json(const ExpectationReport& report);
[[nodiscard]] nlohmann::json to_json(const VerificationSummary& summary);

}  // namespace spinamp::cli
