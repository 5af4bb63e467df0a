// Serial reference enumeration vs the OpenMP kernel, and the Gross-point
// search at one and all threads.

#include "cmlab/embeddings.hpp"
#include "cmlab/shortvec.hpp"

#include <benchmark/benchmark.h>

using namespace cmlab;

namespace {

// Norm form of a level-3 Eichler order in the algebra ramified at 11.
shortvec::Gram sample_gram() {
    auto e = lattices::eichler_order(lattices::maximal_order(11), 3);
    return shortvec::lll_reduce(lattices::unit_ideal(e).gram()).gram;
}

void BM_reference(benchmark::State& s) {
    const auto g = sample_gram();
    for (auto _ : s) benchmark::DoNotOptimize(shortvec::vectors_of_norm_reference(g, s.range(0)));
}

void BM_kernel(benchmark::State& s) {
    const auto g = sample_gram();
    const int jobs = static_cast<int>(s.range(1));
    for (auto _ : s) benchmark::DoNotOptimize(shortvec::vectors_of_norm(g, s.range(0), jobs));
}

void BM_gross_points(benchmark::State& s) {
    auto cs = lattices::right_ideal_classes(lattices::eichler_order(lattices::maximal_order(5), 3));
    auto cm = cmfields::make_order(-3, 27);
    const int jobs = static_cast<int>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(embeddings::gross_points(cs, cm, jobs));
}

}  // namespace

BENCHMARK(BM_reference)->Arg(200)->Arg(800);
BENCHMARK(BM_kernel)->Args({200, 1})->Args({200, 0})->Args({800, 1})->Args({800, 0});
BENCHMARK(BM_gross_points)->Arg(1)->Arg(0);

BENCHMARK_MAIN();
