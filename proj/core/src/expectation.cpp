#include "spinamp/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spinamp/errors.hpp"

namespace spinamp {

Complex amplitude_psi(const CompoundLabel& label, const Direction& c1, const Direction& c2, SpinHalf u,
                      SpinHalf v) {
    const TwoByTwo xi1 = xi_half(Direction::z(), c1);
    const TwoByTwo xi2 = xi_half(Direction::z(), c2);
    Complex psi{0.0, 0.0};
    for (const auto& [m1, m2] : kBIndexOrder) {
        psi += chi(label, m1, m2) * xi1(index_of(m1), index_of(u)) * xi2(index_of(m2), index_of(v));
    }
    return psi;
}

OutcomeProbabilities outcome_probabilities(const CompoundLabel& label, const Direction& c1, const Direction& c2) {
    OutcomeProbabilities p{};
    for (std::size_t k = 0; k < kBIndexOrder.size(); ++k) {
        p[k] = std::norm(amplitude_psi(label, c1, c2, kBIndexOrder[k].first, kBIndexOrder[k].second));
    }
    return p;
}

double expectation_oracle(const CompoundLabel& label, const MeasurementSpec& spec) {
    const OutcomeProbabilities p = outcome_probabilities(label, spec.c1, spec.c2);
    double value = 0.0;
    for (std::size_t k = 0; k < kBIndexOrder.size(); ++k) {
        const auto [u, v] = kBIndexOrder[k];
        value += p[k] * spec.values1[u] * spec.values2[v];
    }
    return value;
}

double expectation_matrix(const CompoundLabel& label, const MeasurementSpec& spec, const Direction& d,
                          const Direction& f, double imaginary_tolerance) {
    const FourVector psi = assemble_state(label, d, f).tensor;
    const Eigen::Matrix4cd r = operator_pair(spec, d, f).kronecker();
    const Complex value = psi.dot(r * psi);
    if (!(std::abs(value.imag()) <= imaginary_tolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "expectation_matrix: imaginary residue " << value.imag() << " exceeds " << imaginary_tolerance
           << " at d = " << d.to_string() << ", f = " << f.to_string();
        throw ConsistencyError(os.str());
    }
    return value.real();
}

ExpectationReport evaluate_expectation(const CompoundLabel& label, const MeasurementSpec& spec, const Direction& d,
                                       const Direction& f, double imaginary_tolerance) {
    const IntermediatePair point{d, f};
    return verify_basis_invariance(label, spec, std::span(&point, 1), imaginary_tolerance);
}

ExpectationReport verify_basis_invariance(const CompoundLabel& label, const MeasurementSpec& spec,
                                          std::span<const IntermediatePair> grid, double imaginary_tolerance) {
    if (grid.empty()) throw PreconditionError("verify_basis_invariance: grid is empty");

    ExpectationReport report;
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double value = expectation_matrix(label, spec, grid[i].first, grid[i].second, imaginary_tolerance);
        if (i == 0) {
            report.value_matrix_path = value;
            lo = hi = value;
        } else {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }
    report.value_oracle_path = expectation_oracle(label, spec);
    report.probabilities = outcome_probabilities(label, spec.c1, spec.c2);
    report.residual = std::abs(report.value_matrix_path - report.value_oracle_path);
    report.basis_invariance_residual = hi - lo;
    report.grid_points = grid.size();
    return report;
}

double singlet_correlation(const Direction& c1, const Direction& c2) {
    const MeasurementSpec spec{c1, c2, OutcomeValues::spin_projection(), OutcomeValues::spin_projection()};
    return expectation_matrix(CompoundLabel::singlet(), spec);
}

double chsh_value(const Direction& a, const Direction& a_prime, const Direction& b, const Direction& b_prime) {
    return singlet_correlation(a, b) - singlet_correlation(a, b_prime) + singlet_correlation(a_prime, b) +
           singlet_correlation(a_prime, b_prime);
}

}  // namespace spinamp
