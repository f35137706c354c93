// Serial reference kernels against their OpenMP counterparts.

#include "commsub/construct.hpp"
#include "commsub/search.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace commsub;

namespace {

// A tuple with no 4-dim isotropic subspace forces a full scan of all 11811.
const GenericityCertificate& hard_tuple() {
  static const auto c = certify_no_isotropic(7, 5, 4, PrimeField(2), 1, 1000);
  return c;
}

void BM_IsotropicScanSerial(benchmark::State& state) {
  const auto& forms = hard_tuple().forms;
  for (auto _ : state) benchmark::DoNotOptimize(find_common_isotropic_serial(forms, 4));
}

void BM_IsotropicScanParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto& forms = hard_tuple().forms;
  for (auto _ : state) benchmark::DoNotOptimize(find_common_isotropic(forms, 4));
}

void BM_IsotropicScanSerialGF3(benchmark::State& state) {
  const auto forms = sample_form_tuple(6, 6, FormKind::alternating, PrimeField(3), 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_common_isotropic_serial(forms, 3));
}

void BM_IsotropicScanParallelGF3(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto forms = sample_form_tuple(6, 6, FormKind::alternating, PrimeField(3), 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_common_isotropic(forms, 3));
}

void BM_ExactSearchSerial(benchmark::State& state) {
  const auto alg = build_lie_from_forms(hard_tuple().forms);
  for (auto _ : state) benchmark::DoNotOptimize(max_abelian_exact_serial(alg));
}

void BM_ExactSearchParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto alg = build_lie_from_forms(hard_tuple().forms);
  for (auto _ : state) benchmark::DoNotOptimize(max_abelian_exact(alg));
}

} // namespace

BENCHMARK(BM_IsotropicScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsotropicScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsotropicScanSerialGF3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsotropicScanParallelGF3)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSearchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
