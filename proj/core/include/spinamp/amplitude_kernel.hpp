#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "spinamp/direction.hpp"

namespace spinamp {

using Complex = std::complex<double>;

/// Complex 2-vector over a spin-1/2 outcome basis, indexed by index_of(SpinHalf).
using TwoVector = Eigen::Vector2cd;

/// 2x2 complex matrix; row = initial label, column = final label.
using TwoByTwo = Eigen::Matrix2cd;

/// Amplitudes for the three spin-1 projections M_l = +1, 0, -1 (in that order).
using SpinOneTriple = std::array<Complex, 3>;

/// Total-spin label (s, M) of the coupled pair, quantized along `axis`.
///
/// Only s = 0 (M = 0) and s = 1 (M in {-1, 0, +1}) are admissible for two
/// spin-1/2 subsystems. The axis is carried for the singlet as well, although
/// the singlet coefficients do not depend on it.
class CompoundLabel {
public:
    /// Throws DomainError for (s, M) outside the coupling range.
    CompoundLabel(int s, int M, Direction axis = Direction::z());

    [[nodiscard]] int s() const noexcept { return s_; }
    [[nodiscard]] int M() const noexcept { return M_; }
    [[nodiscard]] const Direction& axis() const noexcept { return axis_; }

    [[nodiscard]] static CompoundLabel singlet(Direction axis = Direction::z()) { return {0, 0, axis}; }
    [[nodiscard]] static CompoundLabel triplet(int M, Direction axis = Direction::z()) { return {1, M, axis}; }

    friend bool operator==(const CompoundLabel&, const CompoundLabel&) = default;

private:
    int s_;
    int M_;
    Direction axis_;
};

/// The four compound labels (1,+1), (1,0), (1,-1), (0,0) sharing one axis.
[[nodiscard]] std::array<CompoundLabel, 4> all_compound_labels(const Direction& axis);

/// Spin-1/2 direction-change amplitudes xi(p^(initial); u^(final)).
///
/// With initial = (td, pd) and final = (t1, p1), c = cos(t/2), s = sin(t/2) and
/// e = exp(i (pd - p1)):
///
///   xi(+;+) =  cd c1 + e sd s1      xi(+;-) = -cd s1 + e sd c1
///   xi(-;+) = -sd c1 + e cd s1      xi(-;-) =  sd s1 + e cd c1
///
/// The result is unitary, satisfies xi(f, i) = xi(i, f)^dagger and composes
/// as xi(a, c) = xi(a, b) xi(b, c).
[[nodiscard]] TwoByTwo xi_half(const Direction& initial, const Direction& final);

/// Column vector [eta(m^(z))]: the row of xi_half(z, final) selected by m.
/// plus -> (cos t/2, -sin t/2); minus -> (sin t/2, cos t/2) exp(-i phi).
[[nodiscard]] TwoVector eta_from_z(SpinHalf m, const Direction& final);

/// Spin-1 direction-change amplitudes zeta(1, M^(a); 1, M_l^(z)) for
/// M_l = +1, 0, -1. Throws DomainError unless M is -1, 0 or +1.
[[nodiscard]] SpinOneTriple zeta_spin1(int M, const Direction& a);

/// Clebsch-Gordan coefficient C(1/2 1/2 s; m1 m2 M). Zero whenever
/// m1 + m2 != M. Throws DomainError for (s, M) outside the coupling range.
[[nodiscard]] double clebsch_gordan_half_half(int s, int M, SpinHalf m1, SpinHalf m2);

/// Direction-generalized coupling coefficient chi(label; m1, m2).
///
/// Triplet: sum over M_l of zeta(1, M^(a); 1, M_l) * C(1/2 1/2 1; m1 m2 M_l).
/// Singlet: the bare Clebsch-Gordan coefficient.
[[nodiscard]] Complex chi(const CompoundLabel& label, SpinHalf m1, SpinHalf m2);

}  // namespace spinamp
