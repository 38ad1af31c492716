// Serial reference vs OpenMP batch runner on the same seeded trials.

#include "feasikit/experiment/batch.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace feasikit;

namespace {

BatchConfig config(const char* problem, std::size_t trials) {
    static const PrecisionContext ctx(120);
    BatchConfig cfg{problem, {Method::dr, Method::lt, Method::plt}, trials, 7, StopRule::defaults(ctx), 3};
    cfg.stop.max_iter = 100;
    return cfg;
}

void BM_BatchSerial(benchmark::State& state, const char* problem) {
    const PrecisionContext ctx(120);
    const BatchConfig cfg = config(problem, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_batch_serial(cfg, ctx));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_BatchParallel(benchmark::State& state, const char* problem) {
    const PrecisionContext ctx(120);
    const BatchConfig cfg = config(problem, static_cast<std::size_t>(state.range(0)));
    const int jobs = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(run_batch_parallel(cfg, ctx, jobs));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
    state.counters["threads"] = jobs;
}

}  // namespace

BENCHMARK_CAPTURE(BM_BatchSerial, circle_line, "circle-line")->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BatchParallel, circle_line, "circle-line")->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BatchSerial, psdb_s1, "psdb-s1")->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BatchParallel, psdb_s1, "psdb-s1")->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
