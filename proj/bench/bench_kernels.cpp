#include <benchmark/benchmark.h>

#include <vector>

#include "pcakit/kernels.hpp"
#include "pcakit/rng.hpp"

using namespace pcakit;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = 2.0 * rng.next_unit() - 1.0;
    return v;
}

const kern::Table* table_for(const std::string& name) {
    if (name == "scalar") return &kern::scalar_table();
    if (name == "avx2") return kern::avx2_table();
    if (name == "neon") return kern::neon_table();
    return nullptr;
}

void bench_dot(benchmark::State& state, const std::string& variant) {
    const kern::Table* t = table_for(variant);
    if (!t) {
        state.SkipWithError("variant unavailable");
        return;
    }
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto x = random_vec(n, 1);
    const auto y = random_vec(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t->dot(x.data(), y.data(), n));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}

void bench_axpy(benchmark::State& state, const std::string& variant) {
    const kern::Table* t = table_for(variant);
    if (!t) {
        state.SkipWithError("variant unavailable");
        return;
    }
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto x = random_vec(n, 3);
    auto y = random_vec(n, 4);
    for (auto _ : state) {
        t->axpy(1.0009765625, x.data(), y.data(), n);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}

void bench_rotate(benchmark::State& state, const std::string& variant) {
    const kern::Table* t = table_for(variant);
    if (!t) {
        state.SkipWithError("variant unavailable");
        return;
    }
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto x = random_vec(n, 5);
    auto y = random_vec(n, 6);
    const double c = 0.9689124217106447;  // cos(0.25)
    const double s = 0.24740395925452294;
    for (auto _ : state) {
        t->rotate_pair(x.data(), y.data(), c, s, n);
        benchmark::DoNotOptimize(x.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * n);
}

}  // namespace

BENCHMARK_CAPTURE(bench_dot, scalar, "scalar")->Arg(64)->Arg(648)->Arg(4096);
BENCHMARK_CAPTURE(bench_dot, avx2, "avx2")->Arg(64)->Arg(648)->Arg(4096);
BENCHMARK_CAPTURE(bench_axpy, scalar, "scalar")->Arg(64)->Arg(648)->Arg(4096);
BENCHMARK_CAPTURE(bench_axpy, avx2, "avx2")->Arg(64)->Arg(648)->Arg(4096);
BENCHMARK_CAPTURE(bench_rotate, scalar, "scalar")->Arg(64)->Arg(648)->Arg(4096);
BENCHMARK_CAPTURE(bench_rotate, avx2, "avx2")->Arg(64)->Arg(648)->Arg(4096);

BENCHMARK_MAIN();
