#include "spinamp/compound_states.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "../oracles/oracles.hpp"
#include "spinamp/errors.hpp"
#include "test_support.hpp"

namespace spinamp {
namespace {

using testing::complex_near;
using testing::kIdentityTol;
using testing::kInvSqrt2;
using testing::max_abs_diff;

TEST(AssembleState, TripletPlusOneStandardLimit) {
    const StateAssembly st = assemble_state(CompoundLabel(1, 1), Direction::z(), Direction::z());
    EXPECT_EQ(max_abs_diff(st.tensor, FourVector(1.0, 0.0, 0.0, 0.0)), 0.0);
}

TEST(AssembleState, SingletStandardLimit) {
    const StateAssembly st = assemble_state(CompoundLabel::singlet(), Direction::z(), Direction::z());
    EXPECT_LE(max_abs_diff(st.tensor, FourVector(0.0, kInvSqrt2, -kInvSqrt2, 0.0)), 1e-15);
}

TEST(AssembleState, CoefficientsAreChiInBIndexOrder) {
    AngleSampler rng(21);
    for (int i = 0; i < 50; ++i) {
        const CompoundLabel label = rng.label();
        const Direction d = rng.direction();
        const Direction f = rng.direction();
        const StateAssembly st = assemble_state(label, d, f);
        for (std::size_t b = 0; b < 4; ++b) {
            const auto [m1, m2] = kBIndexOrder[b];
            EXPECT_EQ(st.terms[b].coefficient, chi(label, m1, m2));
            EXPECT_EQ(st.terms[b].eta1, eta_from_z(m1, d));
            EXPECT_EQ(st.terms[b].eta2, eta_from_z(m2, f));
        }
    }
}

TEST(AssembleState, TensorIsChiVectorRotatedIntoIntermediateBases) {
    // tensor_{pq} = sum_{m1 m2} chi(m1, m2) X_zd(m1, p) X_zf(m2, q), using the overlap oracle for X.
    AngleSampler rng(22);
    for (int i = 0; i < 200; ++i) {
        const CompoundLabel label = rng.label();
        const Direction d = rng.direction();
        const Direction f = rng.direction();
        const Eigen::Matrix2cd xd = oracle::kernel_by_overlap(0.0, 0.0, d.theta(), d.phi());
        const Eigen::Matrix2cd xf = oracle::kernel_by_overlap(0.0, 0.0, f.theta(), f.phi());
        FourVector want = FourVector::Zero();
        for (const auto& [m1, m2] : kBIndexOrder) {
            const Complex c = chi(label, m1, m2);
            for (int p = 0; p < 2; ++p) {
                for (int q = 0; q < 2; ++q) want(2 * p + q) += c * xd(index_of(m1), p) * xf(index_of(m2), q);
            }
        }
        EXPECT_LE(max_abs_diff(assemble_state(label, d, f).tensor, want), kIdentityTol);
    }
}

TEST(AssembleState, UnitNorm) {
    AngleSampler rng(23);
    for (int i = 0; i < 500; ++i) {
        const StateAssembly st = assemble_state(rng.label(), rng.direction(), rng.direction());
        EXPECT_NEAR(st.tensor.squaredNorm(), 1.0, kIdentityTol);
    }
}

TEST(AssembleState, StandardLimitsForAllFour) {
    const Direction z = Direction::z();
    const std::array<FourVector, 4> want{
        FourVector(1.0, 0.0, 0.0, 0.0),
        FourVector(0.0, kInvSqrt2, kInvSqrt2, 0.0),
        FourVector(0.0, 0.0, 0.0, -1.0),
        FourVector(0.0, kInvSqrt2, -kInvSqrt2, 0.0),
    };
    const auto labels = all_compound_labels(z);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_LE(max_abs_diff(assemble_state(labels[k], z, z).tensor, want[k]), 1e-15) << "label " << k;
    }
}

TEST(ReduceAxisAligned, SingleTermTriplets) {
    const Direction d(0.6, 1.2), f(2.0, 4.0);
    const StateAssembly up = reduce_axis_aligned(CompoundLabel(1, 1), d, f);
    EXPECT_TRUE(complex_near(up.terms[0].coefficient, 1.0, 0.0));
    for (std::size_t b = 1; b < 4; ++b) EXPECT_TRUE(complex_near(up.terms[b].coefficient, 0.0, 0.0));
    EXPECT_LE(max_abs_diff(up.tensor, kron(eta_from_z(SpinHalf::plus, d), eta_from_z(SpinHalf::plus, f))),
              kIdentityTol);

    const StateAssembly down = reduce_axis_aligned(CompoundLabel(1, -1), d, f);
    EXPECT_TRUE(complex_near(down.terms[3].coefficient, -1.0, 0.0));
    EXPECT_LE(max_abs_diff(down.tensor, FourVector(-kron(eta_from_z(SpinHalf::minus, d), eta_from_z(SpinHalf::minus, f)))),
              kIdentityTol);
}

TEST(ReduceAxisAligned, SingletUnchanged) {
    const Direction d(0.6, 1.2), f(2.0, 4.0);
    const StateAssembly a = reduce_axis_aligned(CompoundLabel::singlet(), d, f);
    const StateAssembly b = assemble_state(CompoundLabel::singlet(Direction(1.0, 1.0)), d, f);
    EXPECT_EQ(a.tensor, b.tensor);
}

TEST(ReduceAxisAligned, RejectsTiltedAxis) {
    EXPECT_THROW((void)reduce_axis_aligned(CompoundLabel(1, 0, Direction(0.1, 0.0)), Direction::z(), Direction::z()),
                 PreconditionError);
}

TEST(GramMatrix, FourStatesAreOrthonormal) {
    AngleSampler rng(24);
    for (int i = 0; i < 100; ++i) {
        const Direction a = rng.direction(), d = rng.direction(), f = rng.direction();
        std::vector<StateAssembly> states;
        for (const CompoundLabel& label : all_compound_labels(a)) states.push_back(assemble_state(label, d, f));
        EXPECT_LE(max_abs_diff(gram_matrix(states), Eigen::MatrixXcd::Identity(4, 4)), kIdentityTol);
    }
}

TEST(GramMatrix, SingleStateAndPair) {
    const Direction a(0.4, 0.2), d(1.0, 2.0), f(3.0, 0.5);
    const std::vector<StateAssembly> one{assemble_state(CompoundLabel(1, 0, a), d, f)};
    const Eigen::MatrixXcd g1 = gram_matrix(one);
    ASSERT_EQ(g1.rows(), 1);
    EXPECT_TRUE(complex_near(g1(0, 0), 1.0, kIdentityTol));

    const std::vector<StateAssembly> two{assemble_state(CompoundLabel(1, 1, a), d, f),
                                         assemble_state(CompoundLabel::singlet(a), d, f)};
    const Eigen::MatrixXcd g2 = gram_matrix(two);
    EXPECT_TRUE(complex_near(g2(0, 1), 0.0, kIdentityTol));
    EXPECT_TRUE(complex_near(g2(1, 0), 0.0, kIdentityTol));
}

TEST(GramMatrix, ConjugateLinearInFirstSlot) {
    const Direction a(0.4, 0.2), d(1.0, 2.0), f(3.0, 0.5);
    std::vector<StateAssembly> states{assemble_state(CompoundLabel(1, 1, a), d, f),
                                      assemble_state(CompoundLabel(1, 1, a), d, f)};
    states[1].tensor *= Complex(0.0, 1.0);
    const Eigen::MatrixXcd g = gram_matrix(states);
    EXPECT_TRUE(complex_near(g(0, 1), Complex(0.0, 1.0), kIdentityTol));
    EXPECT_TRUE(complex_near(g(1, 0), Complex(0.0, -1.0), kIdentityTol));
}

TEST(GramMatrix, RejectsMismatchedDirections) {
    const std::vector<StateAssembly> states{assemble_state(CompoundLabel(1, 1), Direction(1.0, 0.0), Direction::z()),
                                            assemble_state(CompoundLabel(1, 0), Direction(1.1, 0.0), Direction::z())};
    EXPECT_THROW((void)gram_matrix(states), PreconditionError);
    const std::vector<StateAssembly> axes{assemble_state(CompoundLabel(1, 1), Direction::z(), Direction::z()),
                                          assemble_state(CompoundLabel(1, 0, Direction(0.5, 0.0)), Direction::z(),
                                                         Direction::z())};
    EXPECT_THROW((void)gram_matrix(axes), PreconditionError);
}

}  // namespace
}  // namespace spinamp
