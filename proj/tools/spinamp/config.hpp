#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinamp/expectation.hpp"
#include "spinamp/verification.hpp"

namespace spinamp::cli {

enum class Command { state, operators, probabilities, expect, verify, scan };
enum class OutputFormat { json, csv };

[[nodiscard]] std::string_view to_string(Command c) noexcept;

/// Bad command line or config file. The message names the offending field.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// `--help` was requested; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

struct Sweep {
    std::string parameter;  // e.g. "c2.theta", "r1.plus"
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 2;

    [[nodiscard]] double point(std::size_t k) const noexcept;
};

struct RunConfig {
    Command command = Command::verify;
    std::optional<CompoundLabel> label;
    std::optional<MeasurementSpec> spec;
    std::optional<IntermediatePair> intermediates;
    std::optional<Sweep> sweep;
    OutputFormat format = OutputFormat::json;
    std::optional<std::uint64_t> seed;
    std::map<std::string, double> tolerance_overrides;
    std::vector<std::string> checks;

    /// Defaults with overrides applied.
    [[nodiscard]] Tolerances tolerances() const;
    /// (d, f), defaulting to (z, z).
    [[nodiscard]] IntermediatePair intermediates_or_default() const;
};

/// Angle in radians; a "deg" suffix selects degrees, "rad" is accepted.
[[nodiscard]] double parse_angle(std::string_view text, std::string_view field);

/// Parses command-line arguments (without the program name). `--config FILE`
/// loads a JSON object with the same keys as the flags; flags override it.
[[nodiscard]] RunConfig parse_config(const std::vector<std::string>& args);

/// Same as parse_config with the config-file text supplied directly.
[[nodiscard]] RunConfig parse_config(const std::vector<std::string>& args, std::string_view config_text);

/// Sweepable parameter names.
[[nodiscard]] const std::vector<std::string>& sweep_parameters();

/// Copies of the label/spec/intermediates with the sweep parameter set to `value`.
struct SweepPoint {
    CompoundLabel label;
    MeasurementSpec spec;
    IntermediatePair intermediates;
};
[[nodiscard]] SweepPoint apply_sweep(const RunConfig& config, double value);

}  // namespace spinamp::cli
