#include "spinamp/observables.hpp"

#include <cmath>

#include "spinamp/errors.hpp"

namespace spinamp {

TwoByTwo r_matrix(const Direction& intermediate, const Direction& measured, const OutcomeValues& values) {
    if (!std::isfinite(values.plus) || !std::isfinite(values.minus)) {
        throw DomainError("r_matrix: outcome values must be finite");
    }
    const TwoByTwo xi = xi_half(intermediate, measured);
    TwoByTwo r = TwoByTwo::Zero();
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            for (SpinHalf u : kSpinHalfLabels) {
                const int k = index_of(u);
                r(p, q) += std::conj(xi(p, k)) * values[u] * xi(q, k);
            }
        }
    }
    return r;
}

TwoByTwo spin_projection_operator(const Direction& intermediate, const Direction& measured) {
    return r_matrix(intermediate, measured, OutcomeValues::spin_projection());
}

Eigen::Matrix4cd OperatorPair::kronecker() const {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = first(i, j) * second;
        }
    }
    return out;
}

OperatorPair operator_pair(const MeasurementSpec& spec, const Direction& d, const Direction& f) {
    return {r_matrix(d, spec.c1, spec.values1), r_matrix(f, spec.c2, spec.values2)};
}

}  // namespace spinamp
