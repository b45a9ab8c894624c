// Serial reference vs OpenMP kernel, side by side. Thread counts are the
// benchmark argument; the serial variants ignore it.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "rainbow/catalog.hpp"
#include "rainbow/copy_detect.hpp"
#include "rainbow/embedding.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/shadow_partition.hpp"

using namespace rainbow;

namespace {

SearchConfig config(int n, Poset p, CopyMode mode, int threads) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.posets = {std::move(p)};
  cfg.mode = mode;
  cfg.threads = threads;
  return cfg;
}

void ThreadArgs(benchmark::internal::Benchmark* b) {
  for (int t : {1, 2, 4, 8}) b->Arg(t);
  b->UseRealTime();
}

// ---------------------------------------------------------------- partition

void BM_PartitionSerial(benchmark::State& state) {
  const SetFamily f = middle_layers(14, 3);
  for (auto _ : state) benchmark::DoNotOptimize(partition_f123_serial(f, 0.5, 3));
}
BENCHMARK(BM_PartitionSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PartitionParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const SetFamily f = middle_layers(14, 3);
  for (auto _ : state) benchmark::DoNotOptimize(partition_f123(f, 0.5, 3));
}
BENCHMARK(BM_PartitionParallel)->Apply(ThreadArgs)->Unit(benchmark::kMillisecond);

// ---------------------------------------------------------------- copy search

// Two adjacent middle layers hold no butterfly, so the whole tree is walked.
struct CopyFixture {
  SetFamily family = middle_layers(10, 2);
  Poset poset = catalog("butterfly");
  CopyQuery query() const {
    CopyQuery q;
    q.poset = &poset;
    q.candidates = family.members();
    q.ground_size = family.ground_size();
    q.mode = CopyMode::kStrong;
    return q;
  }
};

void BM_CopySerial(benchmark::State& state) {
  const CopyFixture fx;
  for (auto _ : state) benchmark::DoNotOptimize(search_copy(fx.query()));
}
BENCHMARK(BM_CopySerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_CopyParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const CopyFixture fx;
  for (auto _ : state) benchmark::DoNotOptimize(search_copy_parallel(fx.query()));
}
BENCHMARK(BM_CopyParallel)->Apply(ThreadArgs)->Unit(benchmark::kMillisecond);

// ---------------------------------------------------------------- La

void BM_LaExactSerial(benchmark::State& state) {
  const SearchConfig cfg = config(4, catalog("butterfly"), CopyMode::kStrong, 1);
  for (auto _ : state) benchmark::DoNotOptimize(la_exact_serial(cfg));
}
BENCHMARK(BM_LaExactSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_LaExactParallel(benchmark::State& state) {
  const SearchConfig cfg = config(4, catalog("butterfly"), CopyMode::kStrong, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(la_exact(cfg));
}
BENCHMARK(BM_LaExactParallel)->Apply(ThreadArgs)->Unit(benchmark::kMillisecond);

void BM_LaExhaustiveSerial(benchmark::State& state) {
  const SearchConfig cfg = config(4, catalog("diamond"), CopyMode::kStrong, 1);
  for (auto _ : state) benchmark::DoNotOptimize(la_exhaustive_serial(cfg));
}
BENCHMARK(BM_LaExhaustiveSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_LaExhaustiveParallel(benchmark::State& state) {
  const SearchConfig cfg = config(4, catalog("diamond"), CopyMode::kStrong, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(la_exhaustive(cfg));
}
BENCHMARK(BM_LaExhaustiveParallel)->Apply(ThreadArgs)->Unit(benchmark::kMillisecond);

// ---------------------------------------------------------------- ar

void BM_ArSerial(benchmark::State& state) {
  const SearchConfig cfg = config(4, catalog("diamond"), CopyMode::kStrong, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ar_exact_serial(cfg));
}
BENCHMARK(BM_ArSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ArParallel(benchmark::State& state) {
  const SearchConfig cfg = config(4, catalog("diamond"), CopyMode::kStrong, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ar_exact(cfg));
}
BENCHMARK(BM_ArParallel)->Apply(ThreadArgs)->Unit(benchmark::kMillisecond);

// ---------------------------------------------------------------- path completion

struct PathFixture {
  SetFamily family = middle_layers(12, 2);
  SpiderEmbedding spider;
  PathFixture() {
    const InclusionBigraph g = build_bigraph(family, layer(12, 7), 1);
    spider = greedy_spider(g, 6, 1, Discipline::kDisjoint).spider;
  }
};

void BM_PathSerial(benchmark::State& state) {
  const PathFixture fx;
  for (auto _ : state) benchmark::DoNotOptimize(complete_p2km1_serial(fx.spider, fx.family, 3));
}
BENCHMARK(BM_PathSerial)->UseRealTime()->Unit(benchmark::kMicrosecond);

void BM_PathParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const PathFixture fx;
  for (auto _ : state) benchmark::DoNotOptimize(complete_p2km1(fx.spider, fx.family, 3));
}
BENCHMARK(BM_PathParallel)->Apply(ThreadArgs)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
