// Copyright (C) 2026 The logconcave Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "logconcave/maxprod.hpp"
#include "logconcave/series.hpp"
#include "logconcave/verify.hpp"

namespace {

using namespace logconcave;

void BM_ComputeRow(benchmark::State& state) {
  const auto seq = ExponentSequence::power(static_cast<unsigned>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_row(seq, n));
}
BENCHMARK(BM_ComputeRow)
    ->ArgsProduct({{1, 2, 8}, {250, 500, 1000, 2000}})
    ->Unit(benchmark::kMillisecond);

void BM_OracleRow(benchmark::State& state) {
  const auto seq = ExponentSequence::power(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_row(seq, n));
}
BENCHMARK(BM_OracleRow)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

void BM_ProductSpectrum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_spectrum(n, 3));
}
BENCHMARK(BM_ProductSpectrum)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_Landscape(benchmark::State& state) {
  VerifyOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(landscape(20, static_cast<std::uint64_t>(state.range(0)), opts));
}
BENCHMARK(BM_Landscape)->Args({26, 1})->Args({200, 1})->Args({200, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
