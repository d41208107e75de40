#include <benchmark/benchmark.h>

#include "hrns/search.hpp"

namespace {

using namespace hrns;

ExponentVector fibonacci_vector(long long n) {
    return detail::h_exponent_vector(3, n, 2);
}

void BM_Resultant(benchmark::State& state) {
    const ExponentVector v = fibonacci_vector(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(circulant_det_abs(v));
}
BENCHMARK(BM_Resultant)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_PolyGcd(benchmark::State& state) {
    const long long n = state.range(0);
    const IntPolynomial f = representer_polynomial(fibonacci_vector(n));
    const IntPolynomial g = IntPolynomial::power_minus_one(static_cast<std::size_t>(n));
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(f, g));
}
BENCHMARK(BM_PolyGcd)->Arg(16)->Arg(64)->Arg(256);

void BM_SmithNormalForm(benchmark::State& state) {
    const ExponentVector v = fibonacci_vector(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(v));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_MatrixRank(benchmark::State& state) {
    const IntMatrix m = circulant_matrix(fibonacci_vector(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_MatrixRank)->Arg(16)->Arg(32)->Arg(64);

void BM_Cyclotomic(benchmark::State& state) {
    const unsigned long m = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(m));
}
BENCHMARK(BM_Cyclotomic)->Arg(12)->Arg(105)->Arg(2310);

void BM_CyclotomicFactorScan(benchmark::State& state) {
    // worst-case scan: no factor exists, the phi-filtered range is exhausted
    const PrecheckResult warm = cremona_precheck(state.range(0), state.range(0) + 1);
    benchmark::DoNotOptimize(warm);
    for (auto _ : state)
        benchmark::DoNotOptimize(cremona_precheck(state.range(0), state.range(0) + 1));
}
BENCHMARK(BM_CyclotomicFactorScan)->Arg(4)->Arg(8)->Arg(16);

void BM_Classify(benchmark::State& state) {
    const HParams p{6, state.range(0), 4};
    for (auto _ : state) benchmark::DoNotOptimize(h_classify(p));
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(64)->Arg(512);

void BM_SearchBox(benchmark::State& state) {
    const SearchRanges ranges{state.range(0), 2 * state.range(0), state.range(0)};
    for (auto _ : state) benchmark::DoNotOptimize(search_perfect(ranges, 1));
}
BENCHMARK(BM_SearchBox)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
