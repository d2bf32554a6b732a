#include "spinamp/direction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spinamp/errors.hpp"

namespace spinamp {
namespace {

double wrap_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2 pi.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

}  // namespace

Direction::Direction(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw DomainError("Direction: angles must be finite");
    }
    theta = wrap_two_pi(theta);
    if (theta > kPi) {
        theta = kTwoPi - theta;
        phi += kPi;
    }
    theta_ = theta;
    phi_ = wrap_two_pi(phi);
}

std::array<double, 3> Direction::unit_vector() const noexcept {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

std::string Direction::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "(" << theta_ << ", " << phi_ << ")";
    return os.str();
}

double angle_between(const Direction& a, const Direction& b) noexcept {
    const auto u = a.unit_vector();
    const auto v = b.unit_vector();
    const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

}  // namespace spinamp
