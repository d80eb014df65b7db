#include <benchmark/benchmark.h>

#include "k3fib/catalog.hpp"
#include "k3fib/classifier.hpp"
#include "k3fib/constructions.hpp"
#include "k3fib/recognize.hpp"

using namespace k3fib;

static void BM_CatalogLines(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(build_catalog(false));
}
BENCHMARK(BM_CatalogLines);

static void BM_CatalogWithConics(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(build_catalog(true));
}
BENCHMARK(BM_CatalogWithConics)->Unit(benchmark::kMillisecond);

// all pairings among the 603 curves
static void BM_PairingAll(benchmark::State& state)
{
    const auto curves = catalog_with_conics().curves();
    for (auto _ : state) {
        Rational sum = 0;
        for (const auto& a : curves)
            for (const auto& b : curves) sum += pairing(a.cls, b.cls);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_PairingAll)->Unit(benchmark::kMillisecond);

static void BM_RecognizeDiagram(benchmark::State& state)
{
    const auto d = affine_diagram(KodairaType::IIStar());
    const auto g = DualGraph::from_gram(d.gram);
    for (auto _ : state) benchmark::DoNotOptimize(recognize(g));
}
BENCHMARK(BM_RecognizeDiagram);

static void BM_VerifyAllCases(benchmark::State& state)
{
    catalog_with_conics();
    for (auto _ : state)
        for (const auto& c : constructions()) benchmark::DoNotOptimize(verify_construction(c.id));
}
BENCHMARK(BM_VerifyAllCases)->Unit(benchmark::kMillisecond);

static void BM_EnumerateFinite(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_finite());
}
BENCHMARK(BM_EnumerateFinite)->Unit(benchmark::kMillisecond);

static void BM_EnumerateInfinite(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_infinite());
}
BENCHMARK(BM_EnumerateInfinite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
