#include <benchmark/benchmark.h>

#include "flipbraid/braid.hpp"
#include "flipbraid/delaunay.hpp"
#include "flipbraid/flip_algebra.hpp"
#include "flipbraid/geometry.hpp"
#include "flipbraid/matrix.hpp"

using namespace flipbraid;

namespace {

void BM_Incircle(benchmark::State& state) {
    const Point2 a{Rational(-3, 7), Rational(1, 9)};
    const Point2 b{Rational(5, 3), Rational(-2, 11)};
    const Point2 c{Rational(1, 5), Rational(13, 4)};
    const Point2 d{Rational(2, 3), Rational(4, 3)};
    for (auto _ : state) benchmark::DoNotOptimize(incircle(a, b, c, d));
}
BENCHMARK(BM_Incircle);

void BM_BuildDelaunay(benchmark::State& state) {
    const Configuration c = canonical_setup(static_cast<int>(state.range(0))).configuration;
    for (auto _ : state) benchmark::DoNotOptimize(build_delaunay(c));
}
BENCHMARK(BM_BuildDelaunay)->DenseRange(2, 8, 3);

void BM_FlipMatrix(benchmark::State& state) {
    const auto setup = canonical_setup(5);
    const Triangulation t0 = build_delaunay(setup.configuration);
    const auto seq = extract_flip_sequence(generator_trajectories(setup, Letter{1, 5, 1}));
    const FlipEvent& e = seq.events.front();
    const Triangulation t1 = apply_flip(t0, e);
    const OrderedBasis from = ordered_basis(t0);
    const OrderedBasis to = ordered_basis(t1);
    const LabelMap labels(setup.configuration);
    for (auto _ : state) benchmark::DoNotOptimize(build_flip_matrix(canonical_roles(e), from, to, labels));
}
BENCHMARK(BM_FlipMatrix);

void BM_GeneratorInvariant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BraidWord w{n, {Letter{1, n, 1}}};
    for (auto _ : state) benchmark::DoNotOptimize(invariant(w));
}
BENCHMARK(BM_GeneratorInvariant)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CharPoly(benchmark::State& state) {
    const RationalMatrix m = invariant(BraidWord{5, {Letter{1, 5, 1}, Letter{2, 4, -1}}}).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
