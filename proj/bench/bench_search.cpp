// Serial reference search against the subtree-parallel driver, and the
// per-loop corpus fan-out at 1 and N threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "bolforge/corpus.hpp"
#include "bolforge/search.hpp"

using namespace bolforge;

namespace {

SearchSpec spec(std::size_t order, ClassConstraint c, int workers = 1) {
  SearchSpec s;
  s.order = order;
  s.constraint = c;
  s.workers = workers;
  return s;
}

void BM_EnumerateSerialReference(benchmark::State& state) {
  const auto s = spec(static_cast<std::size_t>(state.range(0)), ClassConstraint::LeftBol);
  for (auto _ : state) benchmark::DoNotOptimize(run_search_serial(s));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto s = spec(static_cast<std::size_t>(state.range(0)), ClassConstraint::LeftBol,
                      static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(s));
}

void BM_EnumerateUnconstrained(benchmark::State& state) {
  const auto s = spec(7, ClassConstraint::None, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(s));
}

void BM_Corpus(benchmark::State& state) {
  std::vector<std::pair<std::string, LoopTable>> loops;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto reps = enumerate(spec(n, ClassConstraint::None)).representatives;
    for (std::size_t i = 0; i < reps.size(); ++i)
      loops.emplace_back(std::to_string(n) + "_" + std::to_string(i), reps[i]);
  }
  CorpusOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(loops, opt));
  state.counters["loops"] = static_cast<double>(loops.size());
}

const int kThreads = omp_get_max_threads();

}  // namespace

BENCHMARK(BM_EnumerateSerialReference)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)
    ->Args({8, 1})
    ->Args({8, kThreads})
    ->Args({9, 1})
    ->Args({9, kThreads})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateUnconstrained)->Arg(1)->Arg(kThreads)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Corpus)->Arg(1)->Arg(kThreads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
