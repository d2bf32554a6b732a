#include <benchmark/benchmark.h>

#include "spinamp/compound_states.hpp"
#include "spinamp/expectation.hpp"
#include "spinamp/sampling.hpp"
#include "spinamp/verification.hpp"

namespace {

using namespace spinamp;

void BM_XiHalf(benchmark::State& state) {
    const Direction a(0.7, 1.1), b(2.3, 4.0);
    for (auto _ : state) benchmark::DoNotOptimize(xi_half(a, b));
}
BENCHMARK(BM_XiHalf);

void BM_AssembleState(benchmark::State& state) {
    const CompoundLabel label = CompoundLabel::triplet(0, Direction(0.4, 0.9));
    const Direction d(1.2, 0.3), f(2.0, 5.0);
    for (auto _ : state) benchmark::DoNotOptimize(assemble_state(label, d, f));
}
BENCHMARK(BM_AssembleState);

MeasurementSpec bench_spec() { return {Direction(0.3, 0.2), Direction(1.9, 2.7), {1.5, -0.5}, {1.0, -1.0}}; }

void BM_ExpectationMatrix(benchmark::State& state) {
    const CompoundLabel label = CompoundLabel::triplet(1, Direction(0.4, 0.9));
    const MeasurementSpec spec = bench_spec();
    const Direction d(1.2, 0.3), f(2.0, 5.0);
    for (auto _ : state) benchmark::DoNotOptimize(expectation_matrix(label, spec, d, f));
}
BENCHMARK(BM_ExpectationMatrix);

void BM_ExpectationOracle(benchmark::State& state) {
    const CompoundLabel label = CompoundLabel::triplet(1, Direction(0.4, 0.9));
    const MeasurementSpec spec = bench_spec();
    for (auto _ : state) benchmark::DoNotOptimize(expectation_oracle(label, spec));
}
BENCHMARK(BM_ExpectationOracle);

void BM_BasisInvarianceGrid(benchmark::State& state) {
    const auto dirs = direction_grid(5);
    const auto grid = intermediate_grid(dirs, dirs);
    const MeasurementSpec spec = bench_spec();
    for (auto _ : state) benchmark::DoNotOptimize(verify_basis_invariance(CompoundLabel::singlet(), spec, grid));
}
BENCHMARK(BM_BasisInvarianceGrid);

void BM_Verify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_verification(VerifyOptions{}));
}
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
