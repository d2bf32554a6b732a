#include "spinamp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "spinamp/errors.hpp"
#include "spinamp/sampling.hpp"

namespace spinamp {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;  // exact halving, correctly rounded

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Running maximum of residuals for one check.
struct Tally {
    std::size_t samples = 0;
    double worst = 0.0;

    void add(double residual) {
        ++samples;
        // NaN must fail the check.
        if (!(residual <= worst)) worst = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
    }
};

struct Context {
    const VerifyOptions& options;
    AngleSampler& rng;
};


// Closed-form intermediate spinors for a z-quantized pair.
TwoVector up_along(const Direction& n) {
    return {Complex(std::cos(n.theta() / 2.0)), Complex(-std::sin(n.theta() / 2.0))};
}

TwoVector down_along(const Direction& n) {
    const Complex phase = std::polar(1.0, -n.phi());
    return {std::sin(n.theta() / 2.0) * phase, std::cos(n.theta() / 2.0) * phase};
}

// Expected B-index coefficients of the four z-quantized states, order (1,+1), (1,0), (1,-1), (0,0).
const std::array<std::array<double, 4>, 4> kAxisAlignedCoefficients{{
    {1.0, 0.0, 0.0, 0.0},
    {0.0, kInvSqrt2, kInvSqrt2, 0.0},
    {0.0, 0.0, 0.0, -1.0},
    {0.0, kInvSqrt2, -kInvSqrt2, 0.0},
}};

Tally kernel_unitarity(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction a = ctx.rng.direction();
        const Direction b = ctx.rng.direction();
        const TwoByTwo x = xi_half(a, b);
        t.add(max_abs_diff(x * x.adjoint(), TwoByTwo::Identity()));
    }
    return t;
}

Tally kernel_hermiticity(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction a = ctx.rng.direction();
        const Direction b = ctx.rng.direction();
        const TwoByTwo forward = xi_half(a, b);
        t.add(max_abs_diff(xi_half(b, a), TwoByTwo(forward.adjoint())));
    }
    return t;
}

Tally kernel_composition(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction a = ctx.rng.direction();
        const Direction b = ctx.rng.direction();
        const Direction c = ctx.rng.direction();
        t.add(max_abs_diff(xi_half(a, c), TwoByTwo(xi_half(a, b) * xi_half(b, c))));
    }
    return t;
}

Tally kernel_zeta_norm(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction a = ctx.rng.direction();
        for (int M : {1, 0, -1}) {
            const SpinOneTriple z = zeta_spin1(M, a);
            t.add(std::abs(std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]) - 1.0));
        }
    }
    return t;
}

Tally kernel_clebsch_gordan(Context&) {
    using enum SpinHalf;
    struct Entry {
        int s, M;
        SpinHalf m1, m2;
        double value;
    };
    // The printed table: triplet M = +1 and M = 0/-1 projections, then the singlet.
    const std::array<Entry, 12> table{{
        {1, 1, plus, plus, 1.0},
        {1, 0, plus, plus, 0.0},
        {1, -1, plus, plus, 0.0},
        {1, 1, plus, minus, 0.0},
        {1, -1, plus, minus, 0.0},
        {1, 0, plus, minus, kInvSqrt2},
        {1, 1, minus, plus, 0.0},
        {1, -1, minus, plus, 0.0},
        {1, 0, minus, plus, kInvSqrt2},
        {1, 1, minus, minus, 0.0},
        {1, -1, minus, minus, 1.0},
        {1, 0, minus, minus, 0.0},
    }};
    const std::array<Entry, 4> singlet{{
        {0, 0, plus, plus, 0.0},
        {0, 0, plus, minus, kInvSqrt2},
        {0, 0, minus, plus, -kInvSqrt2},
        {0, 0, minus, minus, 0.0},
    }};

    Tally t;
    for (const Entry& e : table) t.add(std::abs(clebsch_gordan_half_half(e.s, e.M, e.m1, e.m2) - e.value));
    for (const Entry& e : singlet) t.add(std::abs(clebsch_gordan_half_half(e.s, e.M, e.m1, e.m2) - e.value));

    // Orthonormality of the four coupled columns over the (m1, m2) pairs.
    const std::array<std::pair<int, int>, 4> sm{{{1, 1}, {1, 0}, {1, -1}, {0, 0}}};
    for (const auto& [s1, M1] : sm) {
        for (const auto& [s2, M2] : sm) {
            double dot = 0.0;
            for (const auto& [m1, m2] : kBIndexOrder) {
                dot += clebsch_gordan_half_half(s1, M1, m1, m2) * clebsch_gordan_half_half(s2, M2, m1, m2);
            }
            t.add(std::abs(dot - (s1 == s2 && M1 == M2 ? 1.0 : 0.0)));
        }
    }
    return t;
}

Tally kernel_chi_completeness(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const CompoundLabel label = ctx.rng.label();
        double total = 0.0;
        for (const auto& [m1, m2] : kBIndexOrder) total += std::norm(chi(label, m1, m2));
        t.add(std::abs(total - 1.0));
    }
    return t;
}

Tally states_standard_limit(Context&) {
    const Direction z = Direction::z();
    const std::array<FourVector, 4> expected{
        FourVector(1.0, 0.0, 0.0, 0.0),
        FourVector(0.0, kInvSqrt2, kInvSqrt2, 0.0),
        FourVector(0.0, 0.0, 0.0, -1.0),
        FourVector(0.0, kInvSqrt2, -kInvSqrt2, 0.0),
    };
    const auto labels = all_compound_labels(z);
    Tally t;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        t.add(max_abs_diff(assemble_state(labels[k], z, z).tensor, expected[k]));
    }
    return t;
}

Tally states_axis_aligned(Context& ctx) {
    Tally t;
    const auto labels = all_compound_labels(Direction::z());
    for (std::size_t i = 0; i < ctx.options.state_samples; ++i) {
        const Direction d = ctx.rng.direction();
        const Direction f = ctx.rng.direction();
        const std::array<TwoVector, 2> e1{up_along(d), down_along(d)};
        const std::array<TwoVector, 2> e2{up_along(f), down_along(f)};
        for (std::size_t k = 0; k < labels.size(); ++k) {
            const StateAssembly st = reduce_axis_aligned(labels[k], d, f);
            FourVector expected = FourVector::Zero();
            for (std::size_t b = 0; b < kBIndexOrder.size(); ++b) {
                const auto [m1, m2] = kBIndexOrder[b];
                const StateTerm& term = st.terms[b];
                const double coeff = kAxisAlignedCoefficients[k][b];
                t.add(std::abs(term.coefficient - coeff));
                t.add(max_abs_diff(term.eta1, e1[index_of(m1)]));
                t.add(max_abs_diff(term.eta2, e2[index_of(m2)]));
                expected += coeff * kron(e1[index_of(m1)], e2[index_of(m2)]);
            }
            t.add(max_abs_diff(st.tensor, expected));
        }
    }
    return t;
}

Tally states_gram(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.state_samples; ++i) {
        const Direction a = ctx.rng.direction();
        const Direction d = ctx.rng.direction();
        const Direction f = ctx.rng.direction();
        std::vector<StateAssembly> states;
        for (const CompoundLabel& label : all_compound_labels(a)) states.push_back(assemble_state(label, d, f));
        t.add(max_abs_diff(gram_matrix(states), Eigen::MatrixXcd::Identity(4, 4)));
    }
    return t;
}

TwoByTwo standard_form(const Direction& c) {
    TwoByTwo r;
    r << std::cos(c.theta()), std::sin(c.theta()) * std::polar(1.0, -c.phi()),
        std::sin(c.theta()) * std::polar(1.0, c.phi()), -std::cos(c.theta());
    return r;
}

Tally operators_standard_limit(Context& ctx) {
    Tally t;
    const Direction z = Direction::z();
    const OutcomeValues pm = OutcomeValues::spin_projection();
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        MeasurementSpec spec{ctx.rng.direction(), ctx.rng.direction(), pm, pm};
        const OperatorPair ops = operator_pair(spec, z, z);
        t.add(max_abs_diff(ops.first, standard_form(spec.c1)));
        t.add(max_abs_diff(ops.second, standard_form(spec.c2)));
    }
    return t;
}

// Spin-projection operator elements written out for general intermediate d.
Tally operators_closed_form(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction d = ctx.rng.direction();
        const Direction c = ctx.rng.direction();
        const double dphi = d.phi() - c.phi();
        const double r11 = std::cos(d.theta() - c.theta()) -
                           2.0 * std::sin(d.theta()) * std::sin(c.theta()) * std::pow(std::sin(dphi / 2.0), 2);
        const Complex r12(-std::sin(d.theta()) * std::cos(c.theta()) +
                              std::sin(c.theta()) * std::cos(d.theta()) * std::cos(dphi),
                          std::sin(c.theta()) * std::sin(dphi));
        TwoByTwo expected;
        expected << r11, r12, std::conj(r12), -r11;
        t.add(max_abs_diff(spin_projection_operator(d, c), expected));
    }
    return t;
}

Tally operators_hermiticity(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction d = ctx.rng.direction();
        const Direction c = ctx.rng.direction();
        const TwoByTwo r = r_matrix(d, c, ctx.rng.outcome_values());
        t.add(max_abs_diff(r, TwoByTwo(r.adjoint())));
    }
    return t;
}

Tally operators_spectrum(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction d = ctx.rng.direction();
        const Direction c = ctx.rng.direction();
        const OutcomeValues v = ctx.rng.outcome_values();
        const Eigen::SelfAdjointEigenSolver<TwoByTwo> solver(r_matrix(d, c, v), Eigen::EigenvaluesOnly);
        const Eigen::Vector2d got = solver.eigenvalues();  // ascending
        t.add(std::max(std::abs(got(0) - std::min(v.plus, v.minus)), std::abs(got(1) - std::max(v.plus, v.minus))));
    }
    return t;
}

Tally operators_covariance(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.kernel_samples; ++i) {
        const Direction d = ctx.rng.direction();
        const Direction d2 = ctx.rng.direction();
        const Direction c = ctx.rng.direction();
        const OutcomeValues v = ctx.rng.outcome_values();
        const TwoByTwo u = xi_half(d2, d);
        const TwoByTwo moved = u.conjugate() * r_matrix(d, c, v) * u.transpose();
        t.add(max_abs_diff(r_matrix(d2, c, v), moved));
    }
    return t;
}

Tally expectation_oracle_equivalence(Context& ctx) {
    Tally t;
    const double imag_tol = ctx.options.tolerances.imaginary;
    for (std::size_t i = 0; i < ctx.options.oracle_samples; ++i) {
        const CompoundLabel label = ctx.rng.label();
        const MeasurementSpec spec = ctx.rng.measurement_spec();
        const Direction d = ctx.rng.direction();
        const Direction f = ctx.rng.direction();
        t.add(std::abs(expectation_matrix(label, spec, d, f, imag_tol) - expectation_oracle(label, spec)));
    }
    return t;
}

Tally expectation_basis_invariance(Context& ctx) {
    Tally t;
    const std::size_t n = ctx.options.grid_size;
    for (std::size_t i = 0; i < ctx.options.invariance_pairs; ++i) {
        const CompoundLabel label = ctx.rng.label();
        const MeasurementSpec spec = ctx.rng.measurement_spec();
        std::vector<Direction> ds, fs;
        for (std::size_t k = 0; k < n; ++k) ds.push_back(ctx.rng.direction());
        for (std::size_t k = 0; k < n; ++k) fs.push_back(ctx.rng.direction());
        const auto grid = intermediate_grid(ds, fs);
        t.add(verify_basis_invariance(label, spec, grid, ctx.options.tolerances.imaginary).basis_invariance_residual);
    }
    return t;
}

Tally expectation_probability_completeness(Context& ctx) {
    Tally t;
    for (std::size_t i = 0; i < ctx.options.oracle_samples; ++i) {
        const CompoundLabel label = ctx.rng.label();
        const Direction c1 = ctx.rng.direction();
        const Direction c2 = ctx.rng.direction();
        const OutcomeProbabilities p = outcome_probabilities(label, c1, c2);
        double total = 0.0;
        double outside = 0.0;
        for (double q : p) {
            total += q;
            outside = std::max({outside, -q, q - 1.0});
        }
        t.add(std::max(std::abs(total - 1.0), outside));
    }
    return t;
}

Tally expectation_boundedness(Context& ctx) {
    Tally t;
    const OutcomeValues pm = OutcomeValues::spin_projection();
    for (std::size_t i = 0; i < ctx.options.oracle_samples; ++i) {
        const CompoundLabel label = ctx.rng.label();
        const MeasurementSpec spec{ctx.rng.direction(), ctx.rng.direction(), pm, pm};
        const Direction d = ctx.rng.direction();
        const Direction f = ctx.rng.direction();
        const double e = expectation_matrix(label, spec, d, f, ctx.options.tolerances.imaginary);
        t.add(std::max(0.0, std::abs(e) - 1.0));
    }
    return t;
}

Tally expectation_singlet_correlation(Context& ctx) {
    Tally t;
    const std::size_t n = ctx.options.sweep_points;
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = n > 1 ? kPi * static_cast<double>(k) / static_cast<double>(n - 1) : 0.0;
        t.add(std::abs(singlet_correlation(Direction::z(), Direction(theta, 0.0)) + std::cos(theta)));
    }
    for (std::size_t i = 0; i < ctx.options.oracle_samples; ++i) {
        const Direction c1 = ctx.rng.direction();
        const Direction c2 = ctx.rng.direction();
        const double e = singlet_correlation(c1, c2);
        t.add(std::abs(e + std::cos(angle_between(c1, c2))));
        // Rigid rotation of both directions about z.
        const double delta = ctx.rng.uniform(0.0, kTwoPi);
        const double rotated = singlet_correlation(Direction(c1.theta(), c1.phi() + delta),
                                                   Direction(c2.theta(), c2.phi() + delta));
        t.add(std::abs(rotated - e));
    }
    return t;
}

Tally expectation_chsh(Context&) {
    Tally t;
    const double s = chsh_value(Direction(0.0, 0.0), Direction(kPi / 2.0, 0.0), Direction(kPi / 4.0, 0.0),
                                Direction(3.0 * kPi / 4.0, 0.0));
    t.add(std::abs(std::abs(s) - 2.0 * std::numbers::sqrt2));
    return t;
}

struct CheckEntry {
    std::string_view name;
    double Tolerances::*tolerance;
    Tally (*run)(Context&);
};

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries{
        {"kernel.unitarity", &Tolerances::identity, kernel_unitarity},
        {"kernel.hermiticity", &Tolerances::identity, kernel_hermiticity},
        {"kernel.composition", &Tolerances::identity, kernel_composition},
        {"kernel.zeta_norm", &Tolerances::identity, kernel_zeta_norm},
        {"kernel.clebsch_gordan", &Tolerances::limit, kernel_clebsch_gordan},
        {"kernel.chi_completeness", &Tolerances::identity, kernel_chi_completeness},
        {"states.standard_limit", &Tolerances::limit, states_standard_limit},
        {"states.axis_aligned", &Tolerances::identity, states_axis_aligned},
        {"states.gram", &Tolerances::identity, states_gram},
        {"operators.standard_limit", &Tolerances::limit, operators_standard_limit},
        {"operators.closed_form", &Tolerances::identity, operators_closed_form},
        {"operators.hermiticity", &Tolerances::identity, operators_hermiticity},
        {"operators.spectrum", &Tolerances::spectrum, operators_spectrum},
        {"operators.covariance", &Tolerances::identity, operators_covariance},
        {"expectation.oracle_equivalence", &Tolerances::oracle, expectation_oracle_equivalence},
        {"expectation.basis_invariance", &Tolerances::oracle, expectation_basis_invariance},
        {"expectation.probability_completeness", &Tolerances::identity, expectation_probability_completeness},
        {"expectation.boundedness", &Tolerances::oracle, expectation_boundedness},
        {"expectation.singlet_correlation", &Tolerances::oracle, expectation_singlet_correlation},
        {"expectation.chsh", &Tolerances::oracle, expectation_chsh},
    };
    return entries;
}

}  // namespace

bool VerificationSummary::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string_view>& verification_check_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const CheckEntry& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

VerificationSummary run_verification(const VerifyOptions& options) {
    for (const std::string& wanted : options.checks) {
        const auto& names = verification_check_names();
        if (std::find(names.begin(), names.end(), wanted) == names.end()) {
            throw PreconditionError("run_verification: unknown check '" + wanted + "'");
        }
    }

    VerificationSummary summary;
    summary.seed = options.seed;
    for (const CheckEntry& entry : registry()) {
        if (!options.checks.empty() &&
            std::find(options.checks.begin(), options.checks.end(), entry.name) == options.checks.end()) {
            continue;
        }
        CheckResult result;
        result.name = std::string(entry.name);
        result.tolerance = options.tolerances.*entry.tolerance;
        AngleSampler rng(splitmix64(options.seed ^ fnv1a(entry.name)));
        Context ctx{options, rng};
        try {
            const Tally tally = entry.run(ctx);
            result.samples = tally.samples;
            result.max_residual = tally.worst;
            result.passed = tally.worst <= result.tolerance;
        } catch (const std::exception& e) {
            result.max_residual = std::numeric_limits<double>::infinity();
            result.passed = false;
            result.error = e.what();
        }
        summary.checks.push_back(std::move(result));
    }
    return summary;
}

}  // namespace spinamp
