#include <benchmark/benchmark.h>

#include <random>

#include "spfc/bv_duality.hpp"
#include "spfc/squareclass.hpp"
#include "spfc/symplectic.hpp"
#include "spfc/vanishing.hpp"

namespace {

std::vector<spfc::Partition> partitions_of(int total) { return spfc::enumerate_partitions(total); }

void BM_CollapseAllPartitions(benchmark::State& state) {
    const auto all = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& p : all) benchmark::DoNotOptimize(spfc::sp_collapse(p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_CollapseAllPartitions)->Arg(10)->Arg(20)->Arg(30);

void BM_ExpandAllSymplectic(benchmark::State& state) {
    const auto all = spfc::enumerate_symplectic(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& p : all) benchmark::DoNotOptimize(spfc::sp_expand(p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_ExpandAllSymplectic)->Arg(10)->Arg(20)->Arg(30);

void BM_CollapseOracle(benchmark::State& state) {
    const auto all = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& p : all) benchmark::DoNotOptimize(spfc::sp_collapse_oracle(p));
    }
}
BENCHMARK(BM_CollapseOracle)->Arg(12)->Arg(16);

void BM_BvDual(benchmark::State& state) {
    std::vector<spfc::OddOrthogonalPartition> odd_total;
    for (const auto& p : partitions_of(2 * static_cast<int>(state.range(0)) + 1)) {
        if (spfc::OddOrthogonalPartition::is_valid(p)) odd_total.emplace_back(p);
    }
    for (auto _ : state) {
        for (const auto& p : odd_total) benchmark::DoNotOptimize(spfc::bv_dual(p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(odd_total.size()));
}
BENCHMARK(BM_BvDual)->Arg(5)->Arg(10);

void BM_IdentityCampaign(benchmark::State& state) {
    for (auto _ : state) {
        auto report = spfc::run_identity_campaign(static_cast<int>(state.range(0)), 200, 7, 30);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_IdentityCampaign)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_QrPrimes(benchmark::State& state) {
    const std::vector<spfc::SquareClass> classes{spfc::SquareClass(2), spfc::SquareClass(3), spfc::SquareClass(5)};
    for (auto _ : state) benchmark::DoNotOptimize(spfc::qr_primes(classes, static_cast<int>(state.range(0)), 100000));
}
BENCHMARK(BM_QrPrimes)->Arg(5)->Arg(100);

}  // namespace
BENCHMARK_MAIN();
