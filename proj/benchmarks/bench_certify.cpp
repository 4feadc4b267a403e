#include <benchmark/benchmark.h>

#include "heunforms/catalog.hpp"
#include "heunforms/heun_ode.hpp"

namespace {

void BM_ResidualCertify(benchmark::State& state) {
  const long n = state.range(0);
  const auto form = heunforms::hl_closed_form(heunforms::HlFamilyId::F2_T4, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        heunforms::ode_residual_general(form.primary, form.params).is_zero());
  }
}
BENCHMARK(BM_ResidualCertify)->Arg(5)->Arg(10)->Arg(15);

void BM_FamilySweep(benchmark::State& state) {
  heunforms::CertifyOptions options;
  options.max_n = state.range(0);
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        heunforms::certify_family(heunforms::HlFamilyId::F2_12, options).all_pass());
  }
}
BENCHMARK(BM_FamilySweep)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace
