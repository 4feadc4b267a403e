#include <benchmark/benchmark.h>

#include "heunforms/catalog.hpp"
#include "heunforms/heun_ode.hpp"

namespace {

void BM_HeunSeries(benchmark::State& state) {
  const auto form = heunforms::hl_closed_form(heunforms::HlFamilyId::F2_2, 8);
  const long order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(heunforms::heun_series(form.params, order));
  }
}
BENCHMARK(BM_HeunSeries)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_ClosedFormExpansion(benchmark::State& state) {
  const auto form = heunforms::hl_closed_form(heunforms::HlFamilyId::F2_T4, 10, 5);
  const long order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(form.primary.expand_series(order));
  }
}
BENCHMARK(BM_ClosedFormExpansion)->Arg(16)->Arg(32)->Arg(64);

}  // namespace
