#pragma once

#include <array>
#include <span>

#include <Eigen/Core>

#include "spinamp/amplitude_kernel.hpp"

namespace spinamp {

/// Flattened tensor state, component order (1x1, 1x2, 2x1, 2x2) over
/// (subsystem-1 row, subsystem-2 row).
using FourVector = Eigen::Vector4cd;

/// One chi-weighted product term of a compound state.
struct StateTerm {
    Complex coefficient;
    TwoVector eta1;
    TwoVector eta2;
};

/// Generalized matrix state for one compound label.
///
/// The term list (in B-index order B11, B12, B21, B22) is the source of truth;
/// `tensor` is derived from it as sum coefficient * kron(eta1, eta2).
struct StateAssembly {
    CompoundLabel label;
    Direction intermediate1;  // d
    Direction intermediate2;  // f
    std::array<StateTerm, 4> terms;
    FourVector tensor;
};

/// Kronecker product with subsystem-1 index major.
[[nodiscard]] FourVector kron(const TwoVector& first, const TwoVector& second);

/// Assembles the generalized state for `label` with subsystem intermediate
/// directions d (system 1) and f (system 2).
[[nodiscard]] StateAssembly assemble_state(const CompoundLabel& label, const Direction& d, const Direction& f);

/// Named limit for a label quantized along z. Throws PreconditionError when
/// label.axis() is not exactly (0, 0).
[[nodiscard]] StateAssembly reduce_axis_aligned(const CompoundLabel& label, const Direction& d, const Direction& f);

/// Gram matrix G(i, j) = <tensor_i, tensor_j>, conjugate-linear in the first
/// slot. All states must share one axis and one (d, f) pair, else PreconditionError.
[[nodiscard]] Eigen::MatrixXcd gram_matrix(std::span<const StateAssembly> states);

}  // namespace spinamp
