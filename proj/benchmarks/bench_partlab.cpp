#include <benchmark/benchmark.h>

#include <optional>

#include <partlab/bivariate.hpp>
#include <partlab/concave.hpp>
#include <partlab/enumerate.hpp>
#include <partlab/identities.hpp>
#include <partlab/series.hpp>
#include <partlab/stats.hpp>

namespace {

void BM_series_multiply(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    auto a = partlab::pochhammer(1, 1, 1, std::nullopt, order).invert();
    auto b = partlab::pochhammer(-1, 1, 1, std::nullopt, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_multiply)->Arg(100)->Arg(300);

void BM_pochhammer_infinite(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            partlab::pochhammer(1, 1, 1, std::nullopt, order));
}
BENCHMARK(BM_pochhammer_infinite)->Arg(100)->Arg(300);

void BM_series_invert(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    auto euler = partlab::pochhammer(1, 1, 1, std::nullopt, order);
    for (auto _ : state) benchmark::DoNotOptimize(euler.invert());
}
BENCHMARK(BM_series_invert)->Arg(100)->Arg(300);

void BM_enumerate_partitions(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        long long count = 0;
        partlab::for_each_partition(n, partlab::Constraints{},
                                    [&](const std::vector<int>&) {
                                        ++count;
                                        return true;
                                    });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_partitions)->Arg(30)->Arg(40);

void BM_flushed_filter(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        long long count = 0;
        partlab::for_each_partition(n, partlab::Constraints{},
                                    [&](const std::vector<int>& parts) {
                                        if (partlab::is_flushed(
                                                partlab::Partition(parts)))
                                            ++count;
                                        return true;
                                    });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_flushed_filter)->Arg(25)->Arg(30);

void BM_verify_identity(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(partlab::verify_identity("thm2.1", 60));
}
BENCHMARK(BM_verify_identity);

void BM_phi_roundtrip(benchmark::State& state) {
    auto comps = partlab::concave_even_compositions(20);
    for (auto _ : state) {
        for (const auto& c : comps) {
            auto p = partlab::phi(c);
            benchmark::DoNotOptimize(partlab::phi_inverse(p));
        }
    }
}
BENCHMARK(BM_phi_roundtrip);

void BM_bivariate_multiply(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    auto a = partlab::pochhammer_z(-1, 1, 1, 1, std::nullopt, order);
    auto b = a.invert();
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_bivariate_multiply)->Arg(30)->Arg(60);

} // namespace

BENCHMARK_MAIN();
