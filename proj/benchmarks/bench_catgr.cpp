#include "catgr/groth.hpp"
#include "catgr/rep.hpp"

#include <benchmark/benchmark.h>

using namespace catgr;

namespace {

RepresentationPtr constant_an(std::size_t n) {
    return std::make_shared<const Representation>(
        constant_representation(path_category(linear_quiver(n)), GroundRing::rationals()));
}

// Constant representation on A_n whose fiber is the linearized A_m.
RepresentationPtr fibered_an(std::size_t n, std::size_t m) {
    const auto c = path_category(linear_quiver(n));
    const auto fiber = linearize(path_category(linear_quiver(m)), GroundRing::rationals());
    std::vector<Scalar> lambda(c.morphism_count(), Scalar(2));
    return std::make_shared<const Representation>(
        twisted_constant_representation(c, fiber, coboundary(c, GroundRing::rationals(), lambda)));
}

void BM_Validate(benchmark::State& state) {
    const auto r = fibered_an(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(validate_representation(*r));
}
BENCHMARK(BM_Validate)->DenseRange(2, 5);

void BM_Grothendieck(benchmark::State& state) {
    const auto r = fibered_an(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(grothendieck_construction(r, false));
}
BENCHMARK(BM_Grothendieck)->DenseRange(2, 6);

void BM_Pseudoskew(benchmark::State& state) {
    const auto gr = grothendieck_construction(constant_an(static_cast<std::size_t>(state.range(0))), false);
    for (auto _ : state) benchmark::DoNotOptimize(pseudoskew_algebra(gr));
}
BENCHMARK(BM_Pseudoskew)->DenseRange(2, 6);

void BM_AssociativitySweep(benchmark::State& state) {
    const auto alg = pseudoskew_algebra(grothendieck_construction(constant_an(static_cast<std::size_t>(state.range(0))))).algebra;
    for (auto _ : state) benchmark::DoNotOptimize(check_algebra_laws(alg));
    state.counters["dim"] = static_cast<double>(alg.dimension());
}
BENCHMARK(BM_AssociativitySweep)->DenseRange(2, 6);

}  // namespace

BENCHMARK_MAIN();
