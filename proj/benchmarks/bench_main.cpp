#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "bhc/bh_verifier.hpp"
#include "bhc/classical_constants.hpp"
#include "bhc/khinchin.hpp"
#include "bhc/special_functions.hpp"
#include "bhc/subexp_constants.hpp"

namespace {

// argument is 100x so the window cases 1.50 and 1.99 stay exact
void BM_log_gamma(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(bhc::log_gamma(x));
}
BENCHMARK(BM_log_gamma)->Arg(150)->Arg(199)->Arg(5000);

void BM_r_n(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(bhc::r_n(n));
}
BENCHMARK(BM_r_n)->Arg(30)->Arg(1000)->Arg(100000);

void BM_c_real_recursive(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(bhc::c_real_recursive(n).ln);
}
BENCHMARK(BM_c_real_recursive)->Arg(16)->Arg(256)->Arg(4096);

void BM_c_subexp_recursive(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    auto params = bhc::SubexpParams::real();
    for (auto _ : state)
        benchmark::DoNotOptimize(bhc::c_subexp_recursive(n, params).ln);
}
BENCHMARK(BM_c_subexp_recursive)->Arg(64)->Arg(65536)->Arg(std::int64_t{1} << 24);

void BM_verify_equivalence(benchmark::State& state) {
    const std::int64_t n_max = state.range(0);
    auto params = bhc::SubexpParams::real();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            bhc::verify_equivalence(n_max, params, 1e-9).max_abs_delta_ln);
}
BENCHMARK(BM_verify_equivalence)->Arg(4096)->Arg(65536);

void BM_rademacher_p_mean(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(99);
    std::vector<double> v(n);
    for (double& x : v) x = 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(bhc::rademacher_p_mean(v, 4.0 / 3.0));
}
BENCHMARK(BM_rademacher_p_mean)->Arg(8)->Arg(12)->Arg(16);

void BM_sup_norm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    auto form =
        bhc::random_form(m, n, 42, bhc::CoeffDistribution::UniformInterval);
    for (auto _ : state) benchmark::DoNotOptimize(bhc::sup_norm_real_exact(form));
}
BENCHMARK(BM_sup_norm)->Args({2, 8})->Args({2, 16})->Args({3, 4})->Args({4, 3});

void BM_lhs_mixed_norm(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    auto form =
        bhc::random_form(m, n, 42, bhc::CoeffDistribution::UniformInterval);
    for (auto _ : state) benchmark::DoNotOptimize(bhc::lhs_mixed_norm(form));
}
BENCHMARK(BM_lhs_mixed_norm)->Args({2, 8})->Args({3, 4});

} // namespace

BENCHMARK_MAIN();
