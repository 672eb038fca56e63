// Copyright 2026 The qwr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "qwr/kernels.hpp"

using namespace qwr::kernels;

namespace {

std::vector<cplx> random_field(std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

const Mat2 kCoin{cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)};

template <void (*Fn)(std::span<cplx>, const Mat2&)>
void BM_ApplyCoin(benchmark::State& st) {
  auto v = random_field(2 * static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    Fn(v, kCoin);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <void (*Fn)(std::span<cplx>, std::span<const cplx>)>
void BM_Multiply(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0)) * static_cast<std::size_t>(st.range(0));
  auto v = random_field(n);
  const auto m = random_field(n);
  for (auto _ : st) {
    Fn(v, m);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(n));
}

template <void (*Fn)(std::span<cplx>, const Grid2&, double, const PhaseFn&)>
void BM_PhaseMask(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Grid2 g{n, n, 1e-5, 1e-5};
  const PhaseFn fn = [](double x, double y) { return 3e3 * (y * std::atan2(y, x) - x * std::log(std::hypot(x, y) + 1e-9)); };
  std::vector<cplx> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (auto _ : st) {
    Fn(out, g, 1.0, fn);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * n * n);
}

template <void (*Fn)(std::span<const cplx>, int, int, std::span<double>)>
void BM_RowPower(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const auto f = random_field(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto _ : st) {
    Fn(f, n, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * n * n);
}

}  // namespace

BENCHMARK(BM_ApplyCoin<serial::apply_coin>)->Name("apply_coin/serial")->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(BM_ApplyCoin<omp::apply_coin>)->Name("apply_coin/omp")->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(BM_Multiply<serial::multiply>)->Name("multiply/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_Multiply<omp::multiply>)->Name("multiply/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_PhaseMask<serial::tabulate_phase_mask>)->Name("phase_mask/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_PhaseMask<omp::tabulate_phase_mask>)->Name("phase_mask/omp")->Arg(512)->Arg(1024);
BENCHMARK(BM_RowPower<serial::row_power>)->Name("row_power/serial")->Arg(512)->Arg(1024);
BENCHMARK(BM_RowPower<omp::row_power>)->Name("row_power/omp")->Arg(512)->Arg(1024);

BENCHMARK_MAIN();
