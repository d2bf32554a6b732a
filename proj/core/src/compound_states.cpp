#include "spinamp/compound_states.hpp"

#include "spinamp/errors.hpp"

namespace spinamp {

FourVector kron(const TwoVector& first, const TwoVector& second) {
    FourVector out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out(2 * i + j) = first(i) * second(j);
    }
    return out;
}

StateAssembly assemble_state(const CompoundLabel& label, const Direction& d, const Direction& f) {
    const std::array<TwoVector, 2> eta1{eta_from_z(SpinHalf::plus, d), eta_from_z(SpinHalf::minus, d)};
    const std::array<TwoVector, 2> eta2{eta_from_z(SpinHalf::plus, f), eta_from_z(SpinHalf::minus, f)};

    StateAssembly out{label, d, f, {}, FourVector::Zero()};
    for (std::size_t k = 0; k < kBIndexOrder.size(); ++k) {
        const auto [m1, m2] = kBIndexOrder[k];
        StateTerm& term = out.terms[k];
        term.coefficient = chi(label, m1, m2);
        term.eta1 = eta1[index_of(m1)];
        term.eta2 = eta2[index_of(m2)];
        out.tensor += term.coefficient * kron(term.eta1, term.eta2);
    }
    return out;
}

StateAssembly reduce_axis_aligned(const CompoundLabel& label, const Direction& d, const Direction& f) {
    if (label.axis() != Direction::z()) {
        throw PreconditionError("reduce_axis_aligned: label axis " + label.axis().to_string() + " is not the z axis");
    }
    return assemble_state(label, d, f);
}

Eigen::MatrixXcd gram_matrix(std::span<const StateAssembly> states) {
    const auto n = static_cast<Eigen::Index>(states.size());
    if (n > 1) {
        const StateAssembly& ref = states.front();
        for (const StateAssembly& st : states.subspan(1)) {
            if (st.label.axis() != ref.label.axis() || st.intermediate1 != ref.intermediate1 ||
                st.intermediate2 != ref.intermediate2) {
                throw PreconditionError("gram_matrix: states do not share (a, d, f)");
            }
        }
    }
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = states[static_cast<std::size_t>(i)].tensor.dot(states[static_cast<std::size_t>(j)].tensor);
        }
    }
    return g;
}

}  // namespace spinamp
