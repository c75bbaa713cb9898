// Zero-count enumeration: full-product reference vs Gray-code incremental vs
// OpenMP chunks. Arguments are (q, d) for plane curves.

#include <benchmark/benchmark.h>

#include "prm/codes.hpp"
#include "prm/kernel.hpp"

namespace {

prm::Code plane_code(const benchmark::State& state) {
  return prm::build_code(prm::CodeKind::PRM, prm::make_field_of_order(static_cast<std::uint32_t>(state.range(0))),
                         static_cast<int>(state.range(1)), 2, true);
}

void report(benchmark::State& state, const prm::Code& code) {
  const auto forms = prm::kernel::canonical_count(code.field->q(), code.k);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * forms));
  state.counters["forms"] = static_cast<double>(forms);
}

void BM_Reference(benchmark::State& state) {
  const auto code = plane_code(state);
  for (auto _ : state) benchmark::DoNotOptimize(prm::kernel::tally_reference(code.view()));
  report(state, code);
}

void BM_Incremental(benchmark::State& state) {
  const auto code = plane_code(state);
  for (auto _ : state) benchmark::DoNotOptimize(prm::kernel::tally_incremental(code.view()));
  report(state, code);
}

void BM_Parallel(benchmark::State& state) {
  const auto code = plane_code(state);
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(prm::kernel::tally_parallel(code.view(), {}, workers));
  report(state, code);
}

}  // namespace

BENCHMARK(BM_Reference)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Incremental)->Args({3, 3})->Args({4, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)
    ->Args({3, 3, 1})
    ->Args({4, 3, 1})
    ->Args({5, 3, 1})
    ->Args({5, 3, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
