#include <benchmark/benchmark.h>

#include "heunforms/identities.hpp"

namespace {

void BM_IdentitySweep(benchmark::State& state) {
  const long max_n = state.range(0);
  for (auto _ : state) {
    const auto report = heunforms::sweep_identity("5.2", {max_n, 1});
    benchmark::DoNotOptimize(report.case_count());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(heunforms::admissible_tuples("5.2", max_n).size()));
}
BENCHMARK(BM_IdentitySweep)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_VerifySingleCase(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(heunforms::verify_identity("2.4", {30, 10, 5}));
  }
}
BENCHMARK(BM_VerifySingleCase);

}  // namespace
