#pragma once

#include <Eigen/Core>

#include "spinamp/amplitude_kernel.hpp"

namespace spinamp {

/// Real values assigned to the outcomes +1/2 and -1/2 along a measurement direction.
struct OutcomeValues {
    double plus = 1.0;
    double minus = -1.0;

    /// Spin projection assignment (+1, -1).
    static constexpr OutcomeValues spin_projection() { return {1.0, -1.0}; }

    [[nodiscard]] constexpr double operator[](SpinHalf m) const noexcept { return m == SpinHalf::plus ? plus : minus; }

    friend constexpr bool operator==(const OutcomeValues&, const OutcomeValues&) = default;
};

/// Measurement directions and outcome values of a factorizable observable
/// R = r1 * r2.
struct MeasurementSpec {
    Direction c1;
    Direction c2;
    OutcomeValues values1;
    OutcomeValues values2;

    friend bool operator==(const MeasurementSpec&, const MeasurementSpec&) = default;
};

/// Operator block [r] expressed in the basis of an intermediate direction:
///
///   r(p, p') = sum_u conj(xi(p; u)) r(u) xi(p'; u),   xi = xi_half(intermediate, measured)
///
/// Hermitian with eigenvalues {values.plus, values.minus}. Throws DomainError
/// on non-finite outcome values.
[[nodiscard]] TwoByTwo r_matrix(const Direction& intermediate, const Direction& measured, const OutcomeValues& values);

/// r_matrix with outcome values (+1, -1): traceless, determinant -1.
[[nodiscard]] TwoByTwo spin_projection_operator(const Direction& intermediate, const Direction& measured);

struct OperatorPair {
    TwoByTwo first;   // [r1] in the d basis
    TwoByTwo second;  // [r2] in the f basis

    /// Full operator on the four-dimensional space, subsystem-1 index major.
    [[nodiscard]] Eigen::Matrix4cd kronecker() const;
};

[[nodiscard]] OperatorPair operator_pair(const MeasurementSpec& spec, const Direction& d, const Direction& f);

}  // namespace spinamp
