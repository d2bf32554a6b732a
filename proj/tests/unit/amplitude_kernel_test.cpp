#include "spinamp/amplitude_kernel.hpp"

#include <cmath>

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
using enum SpinHalf;

// ---- xi_half ---------------------------------------------------------------

TEST(XiHalf, SameDirectionIsIdentity) {
    AngleSampler rng(1);
    for (int i = 0; i < 100; ++i) {
        const Direction n = rng.direction();
        EXPECT_LE(max_abs_diff(xi_half(n, n), TwoByTwo::Identity()), kIdentityTol);
    }
}

TEST(XiHalf, FromZFirstRow) {
    const Direction d(1.1, 0.4);
    const TwoByTwo x = xi_half(Direction::z(), d);
    EXPECT_TRUE(complex_near(x(0, 0), std::cos(1.1 / 2), 1e-15));
    EXPECT_TRUE(complex_near(x(0, 1), -std::sin(1.1 / 2), 1e-15));
}

TEST(XiHalf, EquatorToZ) {
    const TwoByTwo x = xi_half(Direction(kPi / 2, 0.0), Direction::z());
    EXPECT_TRUE(complex_near(x(0, 0), kInvSqrt2, 1e-15));
}

TEST(XiHalf, MatchesSpinorOverlapOracle) {
    AngleSampler rng(2);
    for (int i = 0; i < 500; ++i) {
        const Direction a = rng.direction();
        const Direction b = rng.direction();
        const Eigen::Matrix2cd want = oracle::kernel_by_overlap(a.theta(), a.phi(), b.theta(), b.phi());
        EXPECT_LE(max_abs_diff(xi_half(a, b), want), kIdentityTol);
    }
}

TEST(XiHalf, UnitaryHermitianSymmetricAndComposable) {
    AngleSampler rng(3);
    for (int i = 0; i < 1000; ++i) {
        const Direction a = rng.direction();
        const Direction b = rng.direction();
        const Direction c = rng.direction();
        const TwoByTwo ab = xi_half(a, b);
        EXPECT_LE(max_abs_diff(ab * ab.adjoint(), TwoByTwo::Identity()), kIdentityTol);
        EXPECT_LE(max_abs_diff(xi_half(b, a), TwoByTwo(ab.adjoint())), kIdentityTol);
        EXPECT_LE(max_abs_diff(xi_half(a, c), TwoByTwo(ab * xi_half(b, c))), kIdentityTol);
    }
}

// ---- eta_from_z ------------------------------------------------------------

TEST(EtaFromZ, ZeroAngle) {
    const TwoVector e = eta_from_z(plus, Direction::z());
    EXPECT_TRUE(complex_near(e(0), 1.0, 0.0));
    EXPECT_TRUE(complex_near(e(1), 0.0, 0.0));
}

TEST(EtaFromZ, MinusColumnCarriesAzimuthPhase) {
    const double tf = 2.2, pf = 5.1;
    const TwoVector e = eta_from_z(minus, Direction(tf, pf));
    const Complex phase = std::polar(1.0, -pf);
    EXPECT_TRUE(complex_near(e(0), std::sin(tf / 2) * phase, 1e-15));
    EXPECT_TRUE(complex_near(e(1), std::cos(tf / 2) * phase, 1e-15));
}

TEST(EtaFromZ, PlusAtEquator) {
    const TwoVector e = eta_from_z(plus, Direction(kPi / 2, 0.0));
    EXPECT_TRUE(complex_near(e(0), kInvSqrt2, 1e-15));
    EXPECT_TRUE(complex_near(e(1), -kInvSqrt2, 1e-15));
}

TEST(EtaFromZ, UnitNorm) {
    AngleSampler rng(4);
    for (int i = 0; i < 200; ++i) {
        const Direction d = rng.direction();
        for (SpinHalf m : kSpinHalfLabels) EXPECT_NEAR(eta_from_z(m, d).squaredNorm(), 1.0, kIdentityTol);
    }
}

// ---- zeta_spin1 ------------------------------------------------------------

TEST(ZetaSpin1, PlusOneClosedForm) {
    const double t = 0.9, p = 2.3;
    const SpinOneTriple z = zeta_spin1(1, Direction(t, p));
    EXPECT_TRUE(complex_near(z[0], std::pow(std::cos(t / 2), 2) * std::polar(1.0, -p), 1e-15));
    EXPECT_TRUE(complex_near(z[1], std::sin(t) / std::sqrt(2.0), 1e-15));
    EXPECT_TRUE(complex_near(z[2], std::pow(std::sin(t / 2), 2) * std::polar(1.0, p), 1e-15));
}

TEST(ZetaSpin1, ZeroAngle) {
    const SpinOneTriple z = zeta_spin1(1, Direction::z());
    EXPECT_TRUE(complex_near(z[0], 1.0, 0.0));
    EXPECT_TRUE(complex_near(z[1], 0.0, 0.0));
    EXPECT_TRUE(complex_near(z[2], 0.0, 0.0));
}

TEST(ZetaSpin1, MZeroAtSixtyDegrees) {
    // (-sqrt3/(2 sqrt2))^2 + (1/2)^2 + (sqrt3/(2 sqrt2))^2 = 3/8 + 1/4 + 3/8
    const SpinOneTriple z = zeta_spin1(0, Direction(kPi / 3, 0.0));
    const double r = std::sqrt(3.0) / (2.0 * std::sqrt(2.0));
    EXPECT_TRUE(complex_near(z[0], -r, 1e-15));
    EXPECT_TRUE(complex_near(z[1], 0.5, 1e-15));
    EXPECT_TRUE(complex_near(z[2], r, 1e-15));
    EXPECT_NEAR(std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]), 1.0, 1e-15);
}

TEST(ZetaSpin1, RowsAreOrthonormal) {
    AngleSampler rng(5);
    for (int i = 0; i < 500; ++i) {
        const Direction a = rng.direction();
        const std::array<SpinOneTriple, 3> rows{zeta_spin1(1, a), zeta_spin1(0, a), zeta_spin1(-1, a)};
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t q = 0; q < 3; ++q) {
                Complex dot = 0.0;
                for (std::size_t l = 0; l < 3; ++l) dot += std::conj(rows[r][l]) * rows[q][l];
                EXPECT_TRUE(complex_near(dot, r == q ? 1.0 : 0.0, kIdentityTol));
            }
        }
    }
}

TEST(ZetaSpin1, RejectsInvalidM) {
    EXPECT_THROW((void)zeta_spin1(2, Direction::z()), DomainError);
    EXPECT_THROW((void)zeta_spin1(-2, Direction::z()), DomainError);
}

// ---- clebsch_gordan_half_half ----------------------------------------------

TEST(ClebschGordan, PrintedValues) {
    EXPECT_EQ(clebsch_gordan_half_half(1, 1, plus, plus), 1.0);
    EXPECT_EQ(clebsch_gordan_half_half(1, 0, plus, minus), kInvSqrt2);
    EXPECT_EQ(clebsch_gordan_half_half(0, 0, minus, plus), -kInvSqrt2);
    EXPECT_EQ(clebsch_gordan_half_half(1, 1, plus, minus), 0.0);
}

TEST(ClebschGordan, MatchesRacahFormulaOnEveryEntry) {
    for (const auto& [s, M] : {std::pair{1, 1}, std::pair{1, 0}, std::pair{1, -1}, std::pair{0, 0}}) {
        for (const auto& [m1, m2] : kBIndexOrder) {
            const double want =
                oracle::racah_clebsch_gordan(1, twice_projection(m1), 1, twice_projection(m2), 2 * s, 2 * M);
            EXPECT_NEAR(clebsch_gordan_half_half(s, M, m1, m2), want, 1e-15)
                << "s=" << s << " M=" << M << " m1=" << to_string(m1) << " m2=" << to_string(m2);
        }
    }
}

TEST(ClebschGordan, SelectionRuleIsExactZero) {
    for (const auto& [s, M] : {std::pair{1, 1}, std::pair{1, 0}, std::pair{1, -1}, std::pair{0, 0}}) {
        for (const auto& [m1, m2] : kBIndexOrder) {
            if (twice_projection(m1) + twice_projection(m2) != 2 * M) {
                EXPECT_EQ(clebsch_gordan_half_half(s, M, m1, m2), 0.0);
            }
        }
    }
}

TEST(ClebschGordan, RejectsOutOfRange) {
    EXPECT_THROW((void)clebsch_gordan_half_half(0, 1, plus, plus), DomainError);
    EXPECT_THROW((void)clebsch_gordan_half_half(2, 0, plus, minus), DomainError);
    EXPECT_THROW((void)clebsch_gordan_half_half(1, 2, plus, plus), DomainError);
    EXPECT_THROW((void)clebsch_gordan_half_half(-1, 0, plus, minus), DomainError);
}

// ---- CompoundLabel / chi ---------------------------------------------------

TEST(CompoundLabel, ValidatesCouplingRange) {
    EXPECT_NO_THROW(CompoundLabel(1, -1));
    EXPECT_NO_THROW(CompoundLabel(0, 0));
    EXPECT_THROW(CompoundLabel(0, 1), DomainError);
    EXPECT_THROW(CompoundLabel(1, 2), DomainError);
    EXPECT_THROW(CompoundLabel(2, 0), DomainError);
}

TEST(Chi, PrintedExamples) {
    const double t = 1.3, p = 0.7;
    const Direction a(t, p);
    EXPECT_TRUE(complex_near(chi(CompoundLabel(1, 1, a), plus, minus), 0.5 * std::sin(t), 1e-15));
    EXPECT_TRUE(complex_near(chi(CompoundLabel(1, 0, a), plus, plus), -kInvSqrt2 * std::sin(t) * std::polar(1.0, -p),
                             1e-15));
    EXPECT_TRUE(complex_near(chi(CompoundLabel::singlet(a), plus, minus), kInvSqrt2, 0.0));
    EXPECT_TRUE(complex_near(chi(CompoundLabel(1, 1), plus, plus), 1.0, 0.0));
}

TEST(Chi, TripletPlusOneFollowsCompositionNotTheMisprint) {
    // chi(1,1; +,+) is cos^2(t/2) e^{-i p}; the value (1/2) sin t belongs to the mixed pairs.
    const double t = 0.8, p = 1.9;
    const Complex got = chi(CompoundLabel(1, 1, Direction(t, p)), plus, plus);
    EXPECT_TRUE(complex_near(got, std::pow(std::cos(t / 2), 2) * std::polar(1.0, -p), 1e-15));
    EXPECT_GT(std::abs(got - 0.5 * std::sin(t)), 0.1);
}

TEST(Chi, FullTablesForAllLabels) {
    const double t = 2.4, p = 3.6;
    const Direction a(t, p);
    const double c2 = std::pow(std::cos(t / 2), 2), s2 = std::pow(std::sin(t / 2), 2), st = std::sin(t);
    const Complex em = std::polar(1.0, -p), ep = std::polar(1.0, p);
    const std::array<std::array<Complex, 4>, 4> want{{
        {c2 * em, 0.5 * st, 0.5 * st, s2 * ep},
        {-kInvSqrt2 * st * em, kInvSqrt2 * std::cos(t), kInvSqrt2 * std::cos(t), kInvSqrt2 * st * ep},
        {-s2 * em, 0.5 * st, 0.5 * st, -c2 * ep},
        {0.0, kInvSqrt2, -kInvSqrt2, 0.0},
    }};
    const auto labels = all_compound_labels(a);
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t b = 0; b < 4; ++b) {
            EXPECT_TRUE(complex_near(chi(labels[k], kBIndexOrder[b].first, kBIndexOrder[b].second), want[k][b], 1e-15))
                << "label " << k << " pair " << b;
        }
    }
}

TEST(Chi, TripletMatchesRotatedSpinorProducts) {
    AngleSampler rng(6);
    for (int i = 0; i < 300; ++i) {
        const Direction a = rng.direction();
        for (int M : {1, 0, -1}) {
            const auto want = oracle::triplet_coefficients(M, a.theta(), a.phi());
            for (std::size_t b = 0; b < 4; ++b) {
                EXPECT_TRUE(complex_near(chi(CompoundLabel(1, M, a), kBIndexOrder[b].first, kBIndexOrder[b].second),
                                         want[b], kIdentityTol));
            }
        }
    }
}

TEST(Chi, CompletenessOverPairs) {
    AngleSampler rng(8);
    for (int i = 0; i < 1000; ++i) {
        const CompoundLabel label = rng.label();
        double total = 0.0;
        for (const auto& [m1, m2] : kBIndexOrder) total += std::norm(chi(label, m1, m2));
        EXPECT_NEAR(total, 1.0, kIdentityTol);
    }
}

}  // namespace
}  // namespace spinamp
