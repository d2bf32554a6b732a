#include "spinamp/sampling.hpp"

namespace spinamp {

double AngleSampler::uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

Direction AngleSampler::direction() {
    const double theta = uniform(0.0, kPi);
    const double phi = uniform(0.0, kTwoPi);
    return {theta, phi};
}

CompoundLabel AngleSampler::label() {
    const auto pick = static_cast<int>(engine_() % 4);
    const Direction axis = direction();
    return all_compound_labels(axis)[static_cast<std::size_t>(pick)];
}

OutcomeValues AngleSampler::outcome_values() {
    const double plus = uniform(-2.0, 2.0);
    const double minus = uniform(-2.0, 2.0);
    return {plus, minus};
}

MeasurementSpec AngleSampler::measurement_spec() {
    MeasurementSpec spec;
    spec.c1 = direction();
    spec.c2 = direction();
    spec.values1 = outcome_values();
    spec.values2 = outcome_values();
    return spec;
}

std::vector<Direction> direction_grid(std::size_t n) {
    std::vector<Direction> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0;
        out.emplace_back(kPi * t, kTwoPi * static_cast<double>(k) / static_cast<double>(n + 1));
    }
    return out;
}

std::vector<IntermediatePair> intermediate_grid(std::span<const Direction> ds, std::span<const Direction> fs) {
    std::vector<IntermediatePair> out;
    out.reserve(ds.size() * fs.size());
    for (const Direction& d : ds) {
        for (const Direction& f : fs) out.emplace_back(d, f);
    }
    return out;
}

}  // namespace spinamp
