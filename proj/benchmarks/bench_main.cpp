#include <benchmark/benchmark.h>

#include "burgess/admissibility.hpp"
#include "burgess/charsums.hpp"
#include "burgess/vinogradov.hpp"

using namespace burgess;

namespace {

void BM_JrMitm(benchmark::State& state) {
    const auto sys = standard_system(2, 2);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jr_mitm(sys, 2, x).j);
}
BENCHMARK(BM_JrMitm)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_JrMitmThreads(benchmark::State& state) {
    const auto sys = standard_system(2, 1);
    const ExecPolicy policy{static_cast<unsigned>(state.range(0)), 8};
    for (auto _ : state) benchmark::DoNotOptimize(jr_mitm(sys, 2, 40, {}, policy).j);
}
BENCHMARK(BM_JrMitmThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_JrBruteforce(benchmark::State& state) {
    const auto sys = standard_system(2, 1);
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jr_bruteforce(sys, 2, x).j);
}
BENCHMARK(BM_JrBruteforce)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CompleteMultSum(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const auto chi = build_character(q, 2);
    const FormTable table(parse_int_poly("x1*x2 + x1^2", 2), chi);
    const Collection c{{{1, 2}, {3, 1}, {2, 2}, {1, 1}}};
    for (auto _ : state) benchmark::DoNotOptimize(complete_mult_sum(table, c).value);
}
BENCHMARK(BM_CompleteMultSum)->Arg(101)->Arg(1009);

void BM_CompleteMultSumProduct(benchmark::State& state) {
    const auto chi = build_character(101, 2);
    const IntPoly f = parse_int_poly("x1*x2 + x1^2", 2);
    const Collection c{{{1, 2}, {3, 1}, {2, 2}, {1, 1}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(complete_mult_sum(f, c, chi, MultSumMethod::product_polynomial).value);
}
BENCHMARK(BM_CompleteMultSumProduct);

void BM_MixedSum(benchmark::State& state) {
    const auto chi = build_character(10007, 2);
    const IntPoly f = parse_int_poly("x1*x2 + x2^2", 2);
    const RealPoly g = parse_real_poly("0.31*x1 + 0.017*x1*x2", 2);
    const BoxRegion box{{0, 0}, {200, 200}};
    for (auto _ : state) benchmark::DoNotOptimize(mixed_sum(f, g, chi, box).value);
}
BENCHMARK(BM_MixedSum)->Unit(benchmark::kMillisecond);

void BM_AdditiveBoxSum(benchmark::State& state) {
    const auto sys = standard_system(2, 2);
    const Collection c{{{1, 2}, {2, 1}, {2, 2}, {1, 2}}};
    const auto method = state.range(0) ? AddSumMethod::vertices : AddSumMethod::factorized;
    for (auto _ : state) benchmark::DoNotOptimize(additive_box_sum(sys, 4, c, method).value);
}
BENCHMARK(BM_AdditiveBoxSum)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Admissibility(benchmark::State& state) {
    const IntPoly f = parse_int_poly("x1^3*x2 + 2*x1*x2^3 + x2^4 + x1^2", 2);
    const auto q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_admissible(f, q, 2).verdict);
}
BENCHMARK(BM_Admissibility)->Arg(7)->Arg(101)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
