#include "spinamp/amplitude_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinamp/errors.hpp"

namespace spinamp {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;  // exact halving, correctly rounded

void require_coupling_range(int s, int M, const char* where) {
    const bool ok = (s == 1 && M >= -1 && M <= 1) || (s == 0 && M == 0);
    if (!ok) {
        throw DomainError(std::string(where) + ": (s, M) = (" + std::to_string(s) + ", " + std::to_string(M) +
                          ") outside the 1/2 x 1/2 coupling range");
    }
}

}  // namespace

CompoundLabel::CompoundLabel(int s, int M, Direction axis) : s_(s), M_(M), axis_(axis) {
    require_coupling_range(s, M, "CompoundLabel");
}

std::array<CompoundLabel, 4> all_compound_labels(const Direction& axis) {
    return {CompoundLabel{1, 1, axis}, CompoundLabel{1, 0, axis}, CompoundLabel{1, -1, axis},
            CompoundLabel{0, 0, axis}};
}

TwoByTwo xi_half(const Direction& initial, const Direction& final) {
    const double ci = std::cos(initial.theta() / 2.0);
    const double si = std::sin(initial.theta() / 2.0);
    const double cf = std::cos(final.theta() / 2.0);
    const double sf = std::sin(final.theta() / 2.0);
    const Complex e = std::polar(1.0, initial.phi() - final.phi());

#ifdef SPINAMP_TEST_CORRUPT_KERNEL
    constexpr double kPlusMinusSign = 1.0;
#else
    constexpr double kPlusMinusSign = -1.0;
#endif

    TwoByTwo x;
    x(0, 0) = ci * cf + e * (si * sf);
    x(0, 1) = kPlusMinusSign * ci * sf + e * (si * cf);
    x(1, 0) = -si * cf + e * (ci * sf);
    x(1, 1) = si * sf + e * (ci * cf);
    return x;
}

TwoVector eta_from_z(SpinHalf m, const Direction& final) {
    return xi_half(Direction::z(), final).row(index_of(m)).transpose();
}

SpinOneTriple zeta_spin1(int M, const Direction& a) {
    const double t = a.theta();
    const double c2 = std::pow(std::cos(t / 2.0), 2);
    const double s2 = std::pow(std::sin(t / 2.0), 2);
    const double sin_t = std::sin(t);
    const Complex em = std::polar(1.0, -a.phi());
    const Complex ep = std::polar(1.0, a.phi());

    switch (M) {
        case 1:
            return {c2 * em, Complex(kInvSqrt2 * sin_t), s2 * ep};
        case 0:
            return {-kInvSqrt2 * sin_t * em, Complex(std::cos(t)), kInvSqrt2 * sin_t * ep};
        case -1:
            return {-s2 * em, Complex(kInvSqrt2 * sin_t), -c2 * ep};
        default:
            throw DomainError("zeta_spin1: M = " + std::to_string(M) + " is not a spin-1 projection");
    }
}

double clebsch_gordan_half_half(int s, int M, SpinHalf m1, SpinHalf m2) {
    require_coupling_range(s, M, "clebsch_gordan_half_half");
    const int twice_sum = twice_projection(m1) + twice_projection(m2);
    if (twice_sum != 2 * M) return 0.0;
    if (M != 0) return 1.0;
    // M = 0: the (+,-) and (-,+) pairs.
    if (s == 1) return kInvSqrt2;
    return m1 == SpinHalf::plus ? kInvSqrt2 : -kInvSqrt2;
}

Complex chi(const CompoundLabel& label, SpinHalf m1, SpinHalf m2) {
    if (label.s() == 0) return {clebsch_gordan_half_half(0, 0, m1, m2), 0.0};

    const SpinOneTriple zeta = zeta_spin1(label.M(), label.axis());
    constexpr std::array<int, 3> kProjections{1, 0, -1};
    Complex sum{0.0, 0.0};
    for (std::size_t l = 0; l < kProjections.size(); ++l) {
        sum += zeta[l] * clebsch_gordan_half_half(1, kProjections[l], m1, m2);
    }
    return sum;
}

}  // namespace spinamp
