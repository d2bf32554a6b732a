#pragma once

#include <array>
#include <numbers>
#include <string>

namespace spinamp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Measurement or quantization axis given by polar angles.
///
/// Angles are canonicalized on construction to theta in [0, pi] and
/// phi in [0, 2 pi). A polar angle beyond pi is reflected (theta -> 2 pi - theta)
/// with the azimuth shifted by pi, which is the standard identification of
/// points on the sphere. Canonicalization is idempotent. At the poles the
/// azimuth is kept as given: it enters the kernels as a phase.
class Direction {
public:
    /// The z axis, (0, 0).
    constexpr Direction() = default;

    /// Throws DomainError on non-finite input.
    Direction(double theta, double phi);

    static constexpr Direction z() { return Direction{}; }

    [[nodiscard]] constexpr double theta() const noexcept { return theta_; }
    [[nodiscard]] constexpr double phi() const noexcept { return phi_; }

    /// Cartesian unit vector (sin t cos p, sin t sin p, cos t).
    [[nodiscard]] std::array<double, 3> unit_vector() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(const Direction&, const Direction&) = default;

private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Angle between two directions, in [0, pi].
[[nodiscard]] double angle_between(const Direction& a, const Direction& b) noexcept;

/// Projection +1/2 or -1/2 of a spin-1/2 subsystem along a stated direction.
enum class SpinHalf { plus, minus };

inline constexpr std::array<SpinHalf, 2> kSpinHalfLabels{SpinHalf::plus, SpinHalf::minus};

/// Row/column index of a label: plus -> 0, minus -> 1.
[[nodiscard]] constexpr int index_of(SpinHalf m) noexcept { return m == SpinHalf::plus ? 0 : 1; }

/// Twice the projection quantum number: plus -> +1, minus -> -1.
[[nodiscard]] constexpr int twice_projection(SpinHalf m) noexcept { return m == SpinHalf::plus ? 1 : -1; }

[[nodiscard]] constexpr const char* to_string(SpinHalf m) noexcept { return m == SpinHalf::plus ? "plus" : "minus"; }

/// The (m1, m2) pairs in the fixed order B11, B12, B21, B22.
struct LabelPair {
    SpinHalf first;
    SpinHalf second;
};

inline constexpr std::array<LabelPair, 4> kBIndexOrder{{
    {SpinHalf::plus, SpinHalf::plus},
    {SpinHalf::plus, SpinHalf::minus},
    {SpinHalf::minus, SpinHalf::plus},
    {SpinHalf::minus, SpinHalf::minus},
}};

}  // namespace spinamp
