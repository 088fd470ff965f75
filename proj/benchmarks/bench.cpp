#include <benchmark/benchmark.h>

#include "planedual/dual.hpp"
#include "planedual/generator.hpp"
#include "planedual/pmap_io.hpp"
#include "planedual/solver.hpp"

using namespace planedual;

namespace {

PlaneMultigraph instance(std::int32_t steps) {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.steps = steps;
    return generate(cfg);
}

void BM_Validate(benchmark::State& state) {
    PlaneMultigraph g = instance(static_cast<std::int32_t>(state.range(0)));
    RotationSystem rs = g.rotation();
    for (auto _ : state) {
        auto validated = validate(rs);
        benchmark::DoNotOptimize(validated);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Validate)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_Dual(benchmark::State& state) {
    PlaneMultigraph g = instance(static_cast<std::int32_t>(state.range(0)));
    for (auto _ : state) {
        DualPair pair = dual(g);
        benchmark::DoNotOptimize(pair);
    }
}
BENCHMARK(BM_Dual)->Arg(64)->Arg(256)->Arg(1024);

void BM_SerializeParse(benchmark::State& state) {
    PlaneMultigraph g = instance(static_cast<std::int32_t>(state.range(0)));
    for (auto _ : state) {
        RotationSystem rs = parse_rotation_system(serialize(g.rotation()));
        benchmark::DoNotOptimize(rs);
    }
}
BENCHMARK(BM_SerializeParse)->Arg(64)->Arg(1024);

void BM_Generate(benchmark::State& state) {
    GenConfig cfg;
    cfg.seed = 7;
    cfg.steps = static_cast<std::int32_t>(state.range(0));
    for (auto _ : state) {
        PlaneMultigraph g = generate(cfg);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_Generate)->Arg(64)->Arg(256);

void BM_FindTreePartition(benchmark::State& state) {
    PlaneMultigraph g = instance(static_cast<std::int32_t>(state.range(0)));
    for (auto _ : state) {
        SearchOutcome outcome = find_tree_partition(g);
        benchmark::DoNotOptimize(outcome);
    }
}
BENCHMARK(BM_FindTreePartition)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_EnumerateTreePartitions(benchmark::State& state) {
    PlaneMultigraph g = instance(static_cast<std::int32_t>(state.range(0)));
    for (auto _ : state) {
        PartitionEnumeration result = enumerate_tree_partitions(g);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_EnumerateTreePartitions)->Arg(8)->Arg(10)->Arg(12);

void BM_EnumerateDualHamiltonCycles(benchmark::State& state) {
    PlaneMultigraph g = instance(static_cast<std::int32_t>(state.range(0)));
    for (auto _ : state) {
        auto cycles = enumerate_dual_hamilton_cycles(g);
        benchmark::DoNotOptimize(cycles);
    }
}
BENCHMARK(BM_EnumerateDualHamiltonCycles)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
