// Serial reference vs OpenMP kernels.
//   bench_kernels --benchmark_filter=Jacobi

#include <benchmark/benchmark.h>

#include "omega/admissibility.hpp"
#include "omega/catalog.hpp"

using namespace omega;

namespace {

OmegaLieAlgebra p1_of_dim(std::size_t dim_h) {
  return instantiate_lie("P1", {{"dimH", std::to_string(dim_h)}});
}

std::vector<OmegaLieAlgebra> perfect_batch() {
  std::vector<OmegaLieAlgebra> out;
  for (const auto& e : list_entries(AlgebraKind::Lie))
    out.push_back(instantiate_lie(e.name, {}, has_alpha(e.name) ? Field::QAlpha : Field::Q));
  return out;
}

void BM_JacobiSerial(benchmark::State& state) {
  const OmegaLieAlgebra l = p1_of_dim(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_omega_lie_serial(l));
  state.SetLabel("dim " + std::to_string(l.dim()));
}

void BM_JacobiParallel(benchmark::State& state) {
  const OmegaLieAlgebra l = p1_of_dim(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_omega_lie(l));
  state.SetLabel("dim " + std::to_string(l.dim()));
}

void BM_LsaSerial(benchmark::State& state) {
  const OmegaLsaAlgebra a = instantiate_lsa("LSA3-1", {{"a1", "1/2"}, {"a2", "-3"}, {"a3", "2"}});
  for (auto _ : state) benchmark::DoNotOptimize(check_omega_lsa_serial(a));
}

void BM_LsaParallel(benchmark::State& state) {
  const OmegaLsaAlgebra a = instantiate_lsa("LSA3-1", {{"a1", "1/2"}, {"a2", "-3"}, {"a3", "2"}});
  for (auto _ : state) benchmark::DoNotOptimize(check_omega_lsa(a));
}

void BM_DecideBatchSerial(benchmark::State& state) {
  const auto batch = perfect_batch();
  for (auto _ : state) benchmark::DoNotOptimize(decide_batch_serial(batch, {}));
}

void BM_DecideBatchParallel(benchmark::State& state) {
  const auto batch = perfect_batch();
  for (auto _ : state) benchmark::DoNotOptimize(decide_batch(batch, {}));
}

}  // namespace

BENCHMARK(BM_JacobiSerial)->Arg(2)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(2)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LsaSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LsaParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DecideBatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideBatchParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
