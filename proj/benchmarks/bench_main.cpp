#include "fzeta/groupzeta.hpp"
#include "fzeta/purezeta.hpp"
#include "fzeta/residues.hpp"
#include "fzeta/roots.hpp"

#include <benchmark/benchmark.h>

using namespace fzeta;

namespace {

void BM_PolyGcd(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Poly common = Poly::from_ints({1, -3, 2});
    Poly a = Poly::from_ints({1, 1}), b = Poly::from_ints({2, 0, -1});
    for (int i = 0; i < n; ++i) {
        a *= Poly::from_ints({i + 1, -1, 1});
        b *= Poly::from_ints({1, i + 2});
    }
    a *= common;
    b *= common;
    for (auto _ : state)
        benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(4)->Arg(8)->Arg(16);

void BM_PolyRoots(benchmark::State& state)
{
    const Poly p = pow(Poly::from_ints({1, -3, 9}), 2) * Poly::from_ints({1, 1, 4, 6, 16}) * Poly::from_ints({7, 0, 0, 0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_complex_roots(p));
}
BENCHMARK(BM_PolyRoots);

void BM_MassRank3(benchmark::State& state)
{
    const CurveData c = CurveData::elliptic(Integer(5), Integer(7));
    for (auto _ : state)
        benchmark::DoNotOptimize(mass_reformulated(c, 3));
}
BENCHMARK(BM_MassRank3);

void BM_GroupZeta(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const CurveData c = CurveData::elliptic(Integer(3), Integer(5));
    const GroupData g = make_group_data('A', n, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(group_zeta(c, g));
}
BENCHMARK(BM_GroupZeta)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ResidueRoute(benchmark::State& state)
{
    const CurveData c = CurveData::elliptic(Integer(2), Integer(3));
    const GroupData g = make_group_data('A', 2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(residue_route_equivalence(c, g));
}
BENCHMARK(BM_ResidueRoute)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
