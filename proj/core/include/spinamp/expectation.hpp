#pragma once

#include <array>
#include <span>
#include <utility>

#include "spinamp/compound_states.hpp"
#include "spinamp/observables.hpp"

namespace spinamp {

/// Joint outcome probabilities p(u, v) in B-index order (++, +-, -+, --).
using OutcomeProbabilities = std::array<double, 4>;

inline constexpr double kDefaultImaginaryTolerance = 1e-12;

struct ExpectationReport {
    double value_matrix_path = 0.0;
    double value_oracle_path = 0.0;
    OutcomeProbabilities probabilities{};
    double residual = 0.0;                   // |matrix - oracle|
    double basis_invariance_residual = 0.0;  // max - min of the matrix path over the grid
    std::size_t grid_points = 1;
};

/// Joint amplitude Psi(label; u^(c1), v^(c2)) expanded over the B-index pairs
/// with the spin-1/2 kernels from z to c1 and c2.
[[nodiscard]] Complex amplitude_psi(const CompoundLabel& label, const Direction& c1, const Direction& c2, SpinHalf u,
                                    SpinHalf v);

[[nodiscard]] OutcomeProbabilities outcome_probabilities(const CompoundLabel& label, const Direction& c1,
                                                         const Direction& c2);

/// <R> = sum over (u, v) of p(u, v) r1(u) r2(v).
[[nodiscard]] double expectation_oracle(const CompoundLabel& label, const MeasurementSpec& spec);

/// <R> = Psi^dagger (r1 x r2) Psi with the state and operators expressed in
/// the intermediate bases (d, f). Throws ConsistencyError when the imaginary
/// part exceeds `imaginary_tolerance`.
[[nodiscard]] double expectation_matrix(const CompoundLabel& label, const MeasurementSpec& spec,
                                        const Direction& d = Direction::z(), const Direction& f = Direction::z(),
                                        double imaginary_tolerance = kDefaultImaginaryTolerance);

/// Both routes plus probabilities at one (d, f).
[[nodiscard]] ExpectationReport evaluate_expectation(const CompoundLabel& label, const MeasurementSpec& spec,
                                                     const Direction& d = Direction::z(),
                                                     const Direction& f = Direction::z(),
                                                     double imaginary_tolerance = kDefaultImaginaryTolerance);

using IntermediatePair = std::pair<Direction, Direction>;

/// Evaluates the matrix path over every (d, f) in `grid`. Value fields come
/// from the first grid point and the oracle. Throws PreconditionError on an
/// empty grid.
[[nodiscard]] ExpectationReport verify_basis_invariance(const CompoundLabel& label, const MeasurementSpec& spec,
                                                        std::span<const IntermediatePair> grid,
                                                        double imaginary_tolerance = kDefaultImaginaryTolerance);

/// Singlet spin-projection correlation E(c1, c2).
[[nodiscard]] double singlet_correlation(const Direction& c1, const Direction& c2);

/// CHSH combination E(a,b) - E(a,b') + E(a',b) + E(a',b') of singlet
/// correlations. Reaches -2 sqrt(2) at coplanar angles (0, pi/2, pi/4, 3 pi/4).
[[nodiscard]] double chsh_value(const Direction& a, const Direction& a_prime, const Direction& b,
                                const Direction& b_prime);

}  // namespace spinamp
