#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinamp/errors.hpp"

namespace spinamp::cli {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kCommandNames{"state", "operator", "probabilities", "expect", "verify", "scan"};

const std::vector<std::string> kScalarKeys{"s", "M", "a", "d", "f", "c1", "c2", "r1", "r2",
                                           "format", "seed", "param", "start", "stop", "steps"};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

double parse_number(std::string_view text, std::string_view field) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw UsageError("field '" + std::string(field) + "': malformed number '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string> split_pair(std::string_view text, std::string_view field) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw UsageError("field '" + std::string(field) + "': expected two comma-separated values, got '" +
                         std::string(text) + "'");
    }
    return {std::string(text.substr(0, comma)), std::string(text.substr(comma + 1))};
}

double number_value(const json& v, std::string_view field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_number(v.get<std::string>(), field);
    throw UsageError("field '" + std::string(field) + "': expected a number");
}

double angle_value(const json& v, std::string_view field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_angle(v.get<std::string>(), field);
    throw UsageError("field '" + std::string(field) + "': expected an angle");
}

long long integer_value(const json& v, std::string_view field) {
    const double x = number_value(v, field);
    if (x != std::floor(x) || std::abs(x) > 9.0e15) {
        throw UsageError("field '" + std::string(field) + "': expected an integer");
    }
    return static_cast<long long>(x);
}

std::pair<json, json> pair_value(const json& v, std::string_view field, std::string_view k1, std::string_view k2) {
    if (v.is_string()) {
        const auto parts = split_pair(v.get<std::string>(), field);
        return {json(parts[0]), json(parts[1])};
    }
    if (v.is_array() && v.size() == 2) return {v[0], v[1]};
    if (v.is_object()) {
        for (const auto& [key, _] : v.items()) {
            if (key != k1 && key != k2) {
                throw UsageError("field '" + std::string(field) + "': unknown key '" + key + "'");
            }
        }
        if (!v.contains(k1) || !v.contains(k2)) {
            throw UsageError("field '" + std::string(field) + "': needs both '" + std::string(k1) + "' and '" +
                             std::string(k2) + "'");
        }
        return {v.at(std::string(k1)), v.at(std::string(k2))};
    }
    throw UsageError("field '" + std::string(field) + "': expected \"x,y\", [x, y] or an object");
}

Direction direction_value(const json& v, std::string_view field) {
    const auto [t, p] = pair_value(v, field, "theta", "phi");
    const std::string f(field);
    return {angle_value(t, f + ".theta"), angle_value(p, f + ".phi")};
}

OutcomeValues outcome_value(const json& v, std::string_view field) {
    const auto [plus, minus] = pair_value(v, field, "plus", "minus");
    const std::string f(field);
    return {number_value(plus, f + ".plus"), number_value(minus, f + ".minus")};
}

bool is_angle_parameter(std::string_view p) { return ends_with(p, ".theta") || ends_with(p, ".phi"); }

Command command_from(std::string_view name) {
    for (std::size_t i = 0; i < kCommandNames.size(); ++i) {
        if (kCommandNames[i] == name) return static_cast<Command>(i);
    }
    throw UsageError("unknown command '" + std::string(name) + "'");
}

void require(const json& raw, std::string_view key, Command c) {
    if (!raw.contains(std::string(key))) {
        throw UsageError("missing required field '" + std::string(key) + "' for command '" +
                         std::string(to_string(c)) + "'");
    }
}

RunConfig interpret(const json& raw, std::optional<std::string> command_name) {
    for (const auto& [key, _] : raw.items()) {
        if (key != "command" && key != "tol" && key != "check" &&
            std::find(kScalarKeys.begin(), kScalarKeys.end(), key) == kScalarKeys.end()) {
            throw UsageError("unknown field '" + key + "'");
        }
    }
    if (!command_name && raw.contains("command")) {
        if (!raw["command"].is_string()) throw UsageError("field 'command': expected a string");
        command_name = raw["command"].get<std::string>();
    }
    if (!command_name) throw UsageError("missing command (one of state, operator, probabilities, expect, verify, scan)");

    RunConfig cfg;
    cfg.command = command_from(*command_name);
    const Command c = cfg.command;

    const bool needs_label = c == Command::state || c == Command::probabilities || c == Command::expect ||
                             c == Command::scan;
    const bool needs_spec = c == Command::operators || c == Command::probabilities || c == Command::expect ||
                            c == Command::scan;

    if (needs_label || raw.contains("s") || raw.contains("M")) {
        require(raw, "s", c);
        require(raw, "M", c);
        const auto s = integer_value(raw["s"], "s");
        const auto M = integer_value(raw["M"], "M");
        const Direction axis = raw.contains("a") ? direction_value(raw["a"], "a") : Direction::z();
        try {
            cfg.label = CompoundLabel(static_cast<int>(s), static_cast<int>(M), axis);
        } catch (const DomainError& e) {
            throw UsageError(std::string("field 's'/'M': ") + e.what());
        }
    }

    if (needs_spec || raw.contains("c1") || raw.contains("c2")) {
        require(raw, "c1", c);
        require(raw, "c2", c);
        MeasurementSpec spec;
        spec.c1 = direction_value(raw["c1"], "c1");
        spec.c2 = direction_value(raw["c2"], "c2");
        spec.values1 = raw.contains("r1") ? outcome_value(raw["r1"], "r1") : OutcomeValues::spin_projection();
        spec.values2 = raw.contains("r2") ? outcome_value(raw["r2"], "r2") : OutcomeValues::spin_projection();
        cfg.spec = spec;
    }

    if (raw.contains("d") || raw.contains("f")) {
        cfg.intermediates = IntermediatePair{raw.contains("d") ? direction_value(raw["d"], "d") : Direction::z(),
                                             raw.contains("f") ? direction_value(raw["f"], "f") : Direction::z()};
    }

    if (c == Command::scan) {
        for (const char* key : {"param", "start", "stop", "steps"}) require(raw, key, c);
        Sweep sweep;
        if (!raw["param"].is_string()) throw UsageError("field 'param': expected a parameter name");
        sweep.parameter = raw["param"].get<std::string>();
        const auto& known = sweep_parameters();
        if (std::find(known.begin(), known.end(), sweep.parameter) == known.end()) {
            throw UsageError("field 'param': unknown sweep parameter '" + sweep.parameter + "'");
        }
        const bool angle = is_angle_parameter(sweep.parameter);
        sweep.start = angle ? angle_value(raw["start"], "start") : number_value(raw["start"], "start");
        sweep.stop = angle ? angle_value(raw["stop"], "stop") : number_value(raw["stop"], "stop");
        const auto steps = integer_value(raw["steps"], "steps");
        if (steps < 2) throw UsageError("field 'steps': must be at least 2");
        sweep.steps = static_cast<std::size_t>(steps);
        cfg.sweep = sweep;
    }

    if (raw.contains("format")) {
        const json& f = raw["format"];
        const std::string name = f.is_string() ? f.get<std::string>() : std::string();
        if (name == "json") {
            cfg.format = OutputFormat::json;
        } else if (name == "csv") {
            cfg.format = OutputFormat::csv;
        } else {
            throw UsageError("field 'format': expected 'json' or 'csv'");
        }
    }

    if (raw.contains("seed")) {
        const auto seed = integer_value(raw["seed"], "seed");
        if (seed < 0) throw UsageError("field 'seed': must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(seed);
    }

    if (raw.contains("tol")) {
        if (!raw["tol"].is_object()) throw UsageError("field 'tol': expected key=value overrides");
        for (const auto& [key, value] : raw["tol"].items()) {
            const std::string field = "tol." + key;
            if (key != "identity" && key != "oracle" && key != "limit" && key != "spectrum" && key != "imaginary") {
                throw UsageError("field '" + field + "': unknown tolerance");
            }
            const double tol = number_value(value, field);
            if (!(tol > 0.0)) throw UsageError("field '" + field + "': must be positive");
            cfg.tolerance_overrides[key] = tol;
        }
    }

    if (raw.contains("check")) {
        const json& checks = raw["check"];
        const auto& names = verification_check_names();
        auto add = [&](const json& v) {
            if (!v.is_string()) throw UsageError("field 'check': expected check names");
            const std::string name = v.get<std::string>();
            if (std::find(names.begin(), names.end(), name) == names.end()) {
                throw UsageError("field 'check': unknown check '" + name + "'");
            }
            cfg.checks.push_back(name);
        };
        if (checks.is_array()) {
            for (const json& v : checks) add(v);
        } else {
            add(checks);
        }
    }
    return cfg;
}

json parse_config_text(std::string_view text) {
    json raw;
    try {
        raw = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!raw.is_object()) throw UsageError("config: expected a JSON object");
    return raw;
}

struct Flags {
    std::optional<std::string> command;
    std::optional<std::string> config_path;
    json values = json::object();
};

Flags parse_flags(const std::vector<std::string>& args) {
    CLI::App app{"Probability-amplitude states, operators and expectations for two coupled spin-1/2 systems",
                 "spinamp"};
    app.require_subcommand(0, 1);

    std::map<std::string, std::string> scalars;
    std::map<std::string, CLI::Option*> options;
    const std::map<std::string, std::string> help{
        {"s", "total spin, 0 or 1"},
        {"M", "magnetic quantum number along the label axis"},
        {"a", "label axis THETA,PHI (radians, or with a deg suffix)"},
        {"d", "subsystem-1 intermediate direction THETA,PHI"},
        {"f", "subsystem-2 intermediate direction THETA,PHI"},
        {"c1", "subsystem-1 measurement direction THETA,PHI"},
        {"c2", "subsystem-2 measurement direction THETA,PHI"},
        {"r1", "subsystem-1 outcome values PLUS,MINUS (default 1,-1)"},
        {"r2", "subsystem-2 outcome values PLUS,MINUS (default 1,-1)"},
        {"format", "json (default) or csv"},
        {"seed", "random seed for verify (default 42)"},
        {"param", "scan parameter, e.g. c2.theta or r1.plus"},
        {"start", "scan start value"},
        {"stop", "scan stop value"},
        {"steps", "number of scan points, at least 2"},
    };
    for (const std::string& key : kScalarKeys) {
        options[key] = app.add_option("--" + key, scalars[key], help.at(key));
    }
    std::string config_path;
    CLI::Option* config_opt = app.add_option("--config", config_path, "JSON file with the same keys; flags override it");
    std::vector<std::string> tols;
    std::vector<std::string> checks;
    app.add_option("--tol", tols, "tolerance override NAME=VALUE (identity, oracle, limit, spectrum, imaginary)");
    app.add_option("--check", checks, "verify only the named check (repeatable)");
    const std::array<std::string_view, 6> descriptions{
        "assemble the generalized compound state",
        "build the operator pair in the intermediate bases",
        "joint outcome probabilities",
        "expectation value by the matrix and probability routes",
        "run the invariant suite; exit 2 on any violation",
        "sweep one parameter and emit one record per point",
    };
    for (std::size_t i = 0; i < kCommandNames.size(); ++i) {
        app.add_subcommand(std::string(kCommandNames[i]), std::string(descriptions[i]))->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Flags flags;
    for (const CLI::App* sub : app.get_subcommands()) flags.command = sub->get_name();
    if (config_opt->count() > 0) flags.config_path = config_path;
    for (const auto& [key, opt] : options) {
        if (opt->count() > 0) flags.values[key] = scalars[key];
    }
    if (!tols.empty()) {
        json t = json::object();
        for (const std::string& kv : tols) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("field 'tol': expected NAME=VALUE, got '" + kv + "'");
            t[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        flags.values["tol"] = t;
    }
    if (!checks.empty()) flags.values["check"] = checks;
    return flags;
}

RunConfig merge_and_interpret(const Flags& flags, std::optional<std::string_view> config_text) {
    json raw = config_text ? parse_config_text(*config_text) : json::object();
    for (const auto& [key, value] : flags.values.items()) {
        if (key == "tol" && raw.contains("tol") && raw["tol"].is_object()) {
            for (const auto& [k, v] : value.items()) raw["tol"][k] = v;
        } else {
            raw[key] = value;
        }
    }
    return interpret(raw, flags.command);
}

}  // namespace

std::string_view to_string(Command c) noexcept { return kCommandNames[static_cast<std::size_t>(c)]; }

double Sweep::point(std::size_t k) const noexcept {
    return start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

Tolerances RunConfig::tolerances() const {
    Tolerances t;
    for (const auto& [key, value] : tolerance_overrides) {
        if (key == "identity") t.identity = value;
        if (key == "oracle") t.oracle = value;
        if (key == "limit") t.limit = value;
        if (key == "spectrum") t.spectrum = value;
        if (key == "imaginary") t.imaginary = value;
    }
    return t;
}

IntermediatePair RunConfig::intermediates_or_default() const {
    return intermediates.value_or(IntermediatePair{Direction::z(), Direction::z()});
}

double parse_angle(std::string_view text, std::string_view field) {
    const std::string t = trim(text);
    if (ends_with(t, "deg")) return parse_number(std::string_view(t).substr(0, t.size() - 3), field) * kPi / 180.0;
    if (ends_with(t, "rad")) return parse_number(std::string_view(t).substr(0, t.size() - 3), field);
    return parse_number(t, field);
}

RunConfig parse_config(const std::vector<std::string>& args) {
    const Flags flags = parse_flags(args);
    if (!flags.config_path) return merge_and_interpret(flags, std::nullopt);

    std::ifstream in(*flags.config_path);
    if (!in) throw UsageError("field 'config': cannot read '" + *flags.config_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return merge_and_interpret(flags, text.str());
}

RunConfig parse_config(const std::vector<std::string>& args, std::string_view config_text) {
    return merge_and_interpret(parse_flags(args), config_text);
}

const std::vector<std::string>& sweep_parameters() {
    static const std::vector<std::string> names{
        "a.theta",  "a.phi",   "d.theta",  "d.phi",    "f.theta",  "f.phi",   "c1.theta",
        "c1.phi",   "c2.theta", "c2.phi",  "r1.plus",  "r1.minus", "r2.plus", "r2.minus",
    };
    return names;
}

SweepPoint apply_sweep(const RunConfig& config, double value) {
    if (!config.label || !config.spec || !config.sweep) {
        throw PreconditionError("apply_sweep: label, spec and sweep are required");
    }
    const std::string& p = config.sweep->parameter;
    Direction axis = config.label->axis();
    MeasurementSpec spec = *config.spec;
    auto [d, f] = config.intermediates_or_default();

    auto set_angle = [&](Direction& dir, std::string_view prefix) {
        if (p == std::string(prefix) + ".theta") dir = Direction(value, dir.phi());
        if (p == std::string(prefix) + ".phi") dir = Direction(dir.theta(), value);
    };
    set_angle(axis, "a");
    set_angle(d, "d");
    set_angle(f, "f");
    set_angle(spec.c1, "c1");
    set_angle(spec.c2, "c2");
    if (p == "r1.plus") spec.values1.plus = value;
    if (p == "r1.minus") spec.values1.minus = value;
    if (p == "r2.plus") spec.values2.plus = value;
    if (p == "r2.minus") spec.values2.minus = value;

    return {CompoundLabel(config.label->s(), config.label->M(), axis), spec, {d, f}};
}

}  // namespace spinamp::cli
