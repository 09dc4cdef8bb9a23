// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernel against the OpenMP kernel, on a synthetic term and
// on the full pressure computation.

#include <cmath>

#include <benchmark/benchmark.h>

#include "casimir/dispersion.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/matsubara.hpp"

using namespace casimir;

namespace
{

// A few microseconds of work per term, geometric decay in m.
matsubara::Term synthetic(std::size_t m)
{
  double acc = 0.0;
  for (int i = 1; i <= 2000; ++i)
    acc += std::sin(1e-3 * i * static_cast<double>(m + 1)) / i;
  const double w = std::exp(-1e-3 * static_cast<double>(m));
  return {w * (1.0 + 1e-9 * acc), 0.5 * w};
}

matsubara::SumControl synthetic_control(int threads)
{
  matsubara::SumControl c;
  c.rel_tol = 1e-12;
  c.threads = threads;
  return c;
}

void BM_SyntheticSerial(benchmark::State& state)
{
  const auto c = synthetic_control(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(matsubara::reference::sum_terms(synthetic, c));
}
BENCHMARK(BM_SyntheticSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SyntheticParallel(benchmark::State& state)
{
  const auto c = synthetic_control(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(matsubara::sum_terms(synthetic, c));
}
BENCHMARK(BM_SyntheticParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

// Drude gold, 1 um at 10 K: about a thousand Matsubara terms.
void BM_PressureSerial(benchmark::State& state)
{
  const auto model = dispersion::DispersionModel::drude(dispersion::gold_drude());
  lifshitz::QuadratureConfig cfg;
  cfg.parallel = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(lifshitz::pressure(model, {1.0, 10.0}, cfg));
}
BENCHMARK(BM_PressureSerial)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PressureParallel(benchmark::State& state)
{
  const auto model = dispersion::DispersionModel::drude(dispersion::gold_drude());
  lifshitz::QuadratureConfig cfg;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(lifshitz::pressure(model, {1.0, 10.0}, cfg));
}
BENCHMARK(BM_PressureParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
