#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spinamp/expectation.hpp"

namespace spinamp {

/// Seeded generator for random inputs to the invariant checks.
///
/// Doubles are formed from the top 53 bits of mt19937_64 output, so a seed
/// produces the same sequence with every standard library.
class AngleSampler {
public:
    explicit AngleSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// theta uniform in [0, pi], phi uniform in [0, 2 pi).
    Direction direction();

    /// One of the four compound labels with a random axis.
    CompoundLabel label();

    /// Outcome values uniform in [-2, 2).
    OutcomeValues outcome_values();

    MeasurementSpec measurement_spec();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Deterministic spread of n directions from the z axis to the south pole
/// with distinct azimuths; the first entry is z.
[[nodiscard]] std::vector<Direction> direction_grid(std::size_t n);

/// Cartesian product ds x fs in row-major order (d outer).
[[nodiscard]] std::vector<IntermediatePair> intermediate_grid(std::span<const Direction> ds,
                                                              std::span<const Direction> fs);

}  // namespace spinamp
