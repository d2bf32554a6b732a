#include "runner.hpp"

#include <chrono>
#include <ctime>
#include <ostream>

#include <fmt/format.h>

#include "spinamp/errors.hpp"
#include "spinamp/sampling.hpp"

#ifndef SPINAMP_VERSION
#define SPINAMP_VERSION "0.0.0"
#endif

namespace spinamp::cli {
namespace {

using nlohmann::json;

constexpr std::array<const char*, 4> kPairNames{"++", "+-", "-+", "--"};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string num(double x) { return fmt::format("{:.17g}", x); }

json tolerances_json(const Tolerances& t) {
    return {{"identity", t.identity},
            {"oracle", t.oracle},
            {"limit", t.limit},
            {"spectrum", t.spectrum},
            {"imaginary", t.imaginary}};
}

json metadata(const RunConfig& cfg, std::optional<std::uint64_t> seed) {
    return {{"tool", "spinamp"},
            {"version", tool_version()},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"tolerances", tolerances_json(cfg.tolerances())},
            {"timestamp", utc_timestamp()}};
}

json inputs_json(const std::optional<CompoundLabel>& label, const std::optional<MeasurementSpec>& spec,
                 const IntermediatePair& inter) {
    json in = json::object();
    if (label) in["label"] = {{"s", label->s()}, {"M", label->M()}, {"axis", to_json(label->axis())}};
    if (spec) {
        in["spec"] = {{"c1", to_json(spec->c1)},
                      {"c2", to_json(spec->c2)},
                      {"r1", {spec->values1.plus, spec->values1.minus}},
                      {"r2", {spec->values2.plus, spec->values2.minus}}};
    }
    in["intermediates"] = {{"d", to_json(inter.first)}, {"f", to_json(inter.second)}};
    return in;
}

json record(const RunConfig& cfg, json inputs, json payload, std::optional<std::uint64_t> seed) {
    return {{"command", std::string(to_string(cfg.command))},
            {"inputs", std::move(inputs)},
            {"payload", std::move(payload)},
            {"metadata", metadata(cfg, seed)}};
}

void write_csv_metadata(std::ostream& out, const RunConfig& cfg, std::optional<std::uint64_t> seed) {
    const Tolerances t = cfg.tolerances();
    out << "# tool=spinamp version=" << tool_version() << " command=" << to_string(cfg.command)
        << " seed=" << (seed ? std::to_string(*seed) : std::string("none")) << '\n';
    out << "# tolerances identity=" << num(t.identity) << " oracle=" << num(t.oracle) << " limit=" << num(t.limit)
        << " spectrum=" << num(t.spectrum) << " imaginary=" << num(t.imaginary) << '\n';
    out << "# timestamp=" << utc_timestamp() << '\n';
}

void csv_complex(std::ostream& out, const std::string& name, const Complex& z) {
    out << name << ',' << num(z.real()) << ',' << num(z.imag()) << '\n';
}

void csv_real(std::ostream& out, const std::string& name, double x) { out << name << ',' << num(x) << '\n'; }

ExpectationReport expectation_report(const CompoundLabel& label, const MeasurementSpec& spec,
                                     const IntermediatePair& inter, const Tolerances& tol) {
    // The requested (d, f) first, then a fixed 5 x 5 spread.
    const auto spread = direction_grid(5);
    std::vector<IntermediatePair> grid{inter};
    const auto rest = intermediate_grid(spread, spread);
    grid.insert(grid.end(), rest.begin(), rest.end());
    return verify_basis_invariance(label, spec, grid, tol.imaginary);
}

int run_state(const RunConfig& cfg, std::ostream& out) {
    const IntermediatePair inter = cfg.intermediates_or_default();
    const StateAssembly st = assemble_state(*cfg.label, inter.first, inter.second);
    if (cfg.format == OutputFormat::json) {
        out << record(cfg, inputs_json(cfg.label, std::nullopt, inter), to_json(st), cfg.seed).dump() << '\n';
        return kSuccess;
    }
    write_csv_metadata(out, cfg, cfg.seed);
    out << "quantity,re,im\n";
    for (std::size_t k = 0; k < st.terms.size(); ++k) {
        csv_complex(out, fmt::format("coefficient[{}]", kPairNames[k]), st.terms[k].coefficient);
        for (int i = 0; i < 2; ++i) csv_complex(out, fmt::format("eta1[{}][{}]", kPairNames[k], i), st.terms[k].eta1(i));
        for (int i = 0; i < 2; ++i) csv_complex(out, fmt::format("eta2[{}][{}]", kPairNames[k], i), st.terms[k].eta2(i));
    }
    for (int i = 0; i < 4; ++i) csv_complex(out, fmt::format("tensor[{}]", i), st.tensor(i));
    csv_complex(out, "norm_squared", st.tensor.squaredNorm());
    return kSuccess;
}

int run_operator(const RunConfig& cfg, std::ostream& out) {
    const IntermediatePair inter = cfg.intermediates_or_default();
    const OperatorPair ops = operator_pair(*cfg.spec, inter.first, inter.second);
    if (cfg.format == OutputFormat::json) {
        json payload{{"r1", to_json(ops.first)}, {"r2", to_json(ops.second)}};
        json kron = json::array();
        const Eigen::Matrix4cd k = ops.kronecker();
        for (int i = 0; i < 4; ++i) {
            json row = json::array();
            for (int j = 0; j < 4; ++j) row.push_back(to_json(k(i, j)));
            kron.push_back(row);
        }
        payload["kronecker"] = kron;
        out << record(cfg, inputs_json(std::nullopt, cfg.spec, inter), payload, cfg.seed).dump() << '\n';
        return kSuccess;
    }
    write_csv_metadata(out, cfg, cfg.seed);
    out << "quantity,re,im\n";
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) csv_complex(out, fmt::format("r1[{}][{}]", i, j), ops.first(i, j));
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) csv_complex(out, fmt::format("r2[{}][{}]", i, j), ops.second(i, j));
    }
    return kSuccess;
}

int run_probabilities(const RunConfig& cfg, std::ostream& out) {
    const OutcomeProbabilities p = outcome_probabilities(*cfg.label, cfg.spec->c1, cfg.spec->c2);
    double sum = 0.0;
    for (double q : p) sum += q;
    if (cfg.format == OutputFormat::json) {
        json payload{{"order", kPairNames}, {"probabilities", p}, {"sum", sum}};
        out << record(cfg, inputs_json(cfg.label, cfg.spec, cfg.intermediates_or_default()), payload, cfg.seed).dump()
            << '\n';
        return kSuccess;
    }
    write_csv_metadata(out, cfg, cfg.seed);
    out << "quantity,value\n";
    for (std::size_t k = 0; k < p.size(); ++k) csv_real(out, fmt::format("p[{}]", kPairNames[k]), p[k]);
    csv_real(out, "sum", sum);
    return kSuccess;
}

int run_expect(const RunConfig& cfg, std::ostream& out) {
    const IntermediatePair inter = cfg.intermediates_or_default();
    const ExpectationReport rep = expectation_report(*cfg.label, *cfg.spec, inter, cfg.tolerances());
    if (cfg.format == OutputFormat::json) {
        out << record(cfg, inputs_json(cfg.label, cfg.spec, inter), to_json(rep), cfg.seed).dump() << '\n';
        return kSuccess;
    }
    write_csv_metadata(out, cfg, cfg.seed);
    out << "quantity,value\n";
    csv_real(out, "value_matrix_path", rep.value_matrix_path);
    csv_real(out, "value_oracle_path", rep.value_oracle_path);
    for (std::size_t k = 0; k < rep.probabilities.size(); ++k) {
        csv_real(out, fmt::format("p[{}]", kPairNames[k]), rep.probabilities[k]);
    }
    csv_real(out, "residual", rep.residual);
    csv_real(out, "basis_invariance_residual", rep.basis_invariance_residual);
    csv_real(out, "grid_points", static_cast<double>(rep.grid_points));
    return kSuccess;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions options;
    options.seed = cfg.seed.value_or(42);
    options.tolerances = cfg.tolerances();
    options.checks = cfg.checks;
    const VerificationSummary summary = run_verification(options);
    if (cfg.format == OutputFormat::json) {
        out << record(cfg, json::object(), to_json(summary), options.seed).dump() << '\n';
    } else {
        write_csv_metadata(out, cfg, options.seed);
        out << "check,samples,max_residual,tolerance,passed\n";
        for (const CheckResult& c : summary.checks) {
            out << c.name << ',' << c.samples << ',' << num(c.max_residual) << ',' << num(c.tolerance) << ','
                << (c.passed ? "true" : "false") << '\n';
        }
    }
    return summary.passed() ? kSuccess : kVerificationFailure;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
    const Sweep& sweep = *cfg.sweep;
    const Tolerances tol = cfg.tolerances();
    if (cfg.format == OutputFormat::csv) {
        write_csv_metadata(out, cfg, cfg.seed);
        out << sweep.parameter << ",value_matrix_path,value_oracle_path,residual,p_pp,p_pm,p_mp,p_mm\n";
    }
    for (std::size_t k = 0; k < sweep.steps; ++k) {
        const double x = sweep.point(k);
        const SweepPoint pt = apply_sweep(cfg, x);
        const ExpectationReport rep =
            evaluate_expectation(pt.label, pt.spec, pt.intermediates.first, pt.intermediates.second, tol.imaginary);
        if (cfg.format == OutputFormat::json) {
            json payload = to_json(rep);
            payload["parameter"] = sweep.parameter;
            payload["value"] = x;
            payload["index"] = k;
            out << record(cfg, inputs_json(pt.label, pt.spec, pt.intermediates), payload, cfg.seed).dump() << '\n';
        } else {
            out << num(x) << ',' << num(rep.value_matrix_path) << ',' << num(rep.value_oracle_path) << ','
                << num(rep.residual);
            for (double p : rep.probabilities) out << ',' << num(p);
            out << '\n';
        }
    }
    return kSuccess;
}

}  // namespace

std::string tool_version() { return SPINAMP_VERSION; }

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Direction& d) { return json::array({d.theta(), d.phi()}); }

json to_json(const TwoVector& v) { return json::array({to_json(v(0)), to_json(v(1))}); }

json to_json(const TwoByTwo& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

json to_json(const StateAssembly& state) {
    json terms = json::array();
    for (std::size_t k = 0; k < state.terms.size(); ++k) {
        const StateTerm& t = state.terms[k];
        terms.push_back({{"pair", kPairNames[k]},
                         {"coefficient", to_json(t.coefficient)},
                         {"eta1", to_json(t.eta1)},
                         {"eta2", to_json(t.eta2)}});
    }
    json tensor = json::array();
    for (int i = 0; i < 4; ++i) tensor.push_back(to_json(state.tensor(i)));
    return {{"terms", terms}, {"tensor", tensor}, {"norm_squared", state.tensor.squaredNorm()}};
}

json to_json(const ExpectationReport& report) {
    return {{"value_matrix_path", report.value_matrix_path},
            {"value_oracle_path", report.value_oracle_path},
            {"probabilities", report.probabilities},
            {"probability_order", kPairNames},
            {"residual", report.residual},
            {"basis_invariance_residual", report.basis_invariance_residual},
            {"grid_points", report.grid_points}};
}

json to_json(const VerificationSummary& summary) {
    json checks = json::array();
    for (const CheckResult& c : summary.checks) {
        json entry{{"name", c.name},
                   {"samples", c.samples},
                   {"max_residual", c.max_residual},
                   {"tolerance", c.tolerance},
                   {"passed", c.passed}};
        if (!c.error.empty()) entry["error"] = c.error;
        checks.push_back(entry);
    }
    return {{"passed", summary.passed()}, {"seed", summary.seed}, {"checks", checks}};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::state:
                return run_state(cfg, out);
            case Command::operators:
                return run_operator(cfg, out);
            case Command::probabilities:
                return run_probabilities(cfg, out);
            case Command::expect:
                return run_expect(cfg, out);
            case Command::verify:
                return run_verify(cfg, out);
            case Command::scan:
                return run_scan(cfg, out);
        }
    } catch (const ConsistencyError& e) {
        err << "spinamp: internal-consistency error: " << e.what() << '\n';
        const json diag{{"command", std::string(to_string(cfg.command))},
                        {"error", {{"kind", "internal_consistency"}, {"message", e.what()}}},
                        {"metadata", metadata(cfg, cfg.seed)}};
        out << diag.dump() << '\n';
        return kConsistencyError;
    } catch (const PreconditionError& e) {
        err << "spinamp: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "spinamp: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace spinamp::cli
