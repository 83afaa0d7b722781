#include <benchmark/benchmark.h>

#include "tutte/invariants.hpp"
#include "tutte/schreier.hpp"
#include "tutte/tutte.hpp"

using namespace tutte;

namespace {

void BM_SchreierGeneration(benchmark::State& state) {
    const Group g = state.range(0) == 0 ? Group::Grigorchuk : Group::Basilica;
    const unsigned level = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(schreier_graph(g, level));
    }
}
BENCHMARK(BM_SchreierGeneration)
    ->Args({0, 6})->Args({0, 10})->Args({0, 14})
    ->Args({1, 6})->Args({1, 10})->Args({1, 14});

void BM_CactusEngine(benchmark::State& state) {
    const Group g = state.range(0) == 0 ? Group::Grigorchuk : Group::Basilica;
    const unsigned level = static_cast<unsigned>(state.range(1));
    const MultiGraph graph = schreier_graph(g, level);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tutte_cactus(graph));
    }
    state.SetComplexityN(static_cast<long>(graph.edge_count()));
}
BENCHMARK(BM_CactusEngine)
    ->Args({0, 8})->Args({0, 12})
    ->Args({1, 5})->Args({1, 7})->Args({1, 8});

void BM_ClosedFormExpansion(benchmark::State& state) {
    const Group g = state.range(0) == 0 ? Group::Grigorchuk : Group::Basilica;
    const unsigned level = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form_tutte(g, level, true).expand());
    }
}
BENCHMARK(BM_ClosedFormExpansion)
    ->Args({0, 10})
    ->Args({1, 6})->Args({1, 7})->Args({1, 8});

void BM_SpanningSum(benchmark::State& state) {
    const MultiGraph graph = schreier_graph(Group::Grigorchuk, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tutte_spanning_sum(graph));
    }
}
BENCHMARK(BM_SpanningSum);

void BM_DeletionContraction(benchmark::State& state) {
    const MultiGraph graph = schreier_graph(Group::Basilica, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tutte_deletion_contraction(graph));
    }
}
BENCHMARK(BM_DeletionContraction);

void BM_PolynomialMultiply(benchmark::State& state) {
    const unsigned level = static_cast<unsigned>(state.range(0));
    const BiPoly t = tutte_cactus(schreier_graph(Group::Basilica, level));
    for (auto _ : state) {
        benchmark::DoNotOptimize(t * t);
    }
    state.SetComplexityN(static_cast<long>(t.term_count()));
}
BENCHMARK(BM_PolynomialMultiply)->Arg(4)->Arg(6)->Arg(7);

void BM_IsingSubstitution(benchmark::State& state) {
    const unsigned level = static_cast<unsigned>(state.range(0));
    const MultiGraph graph = schreier_graph(Group::Basilica, level).strip_loops();
    const GraphStats stats = graph.stats();
    const BiPoly t = tutte_cactus(graph);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ising_from_tutte(t, stats));
    }
}
BENCHMARK(BM_IsingSubstitution)->Arg(4)->Arg(6);

void BM_EvaluationReport(benchmark::State& state) {
    const unsigned level = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluation_report(Group::Basilica, level));
    }
}
BENCHMARK(BM_EvaluationReport)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
