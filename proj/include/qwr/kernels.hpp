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

#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// reference kept for tests and benchmarks, `omp` is what the library calls.
// Both variants must produce bit-identical results (no cross-thread reductions).

#include <array>
#include <complex>
#include <functional>
#include <span>

namespace qwr::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

/// Sample geometry for tabulating functions of (x, y) on a centered grid:
/// x_i = (i - nx/2) dx, y_j = (j - ny/2) dy, stored row-major (x fastest).
struct Grid2 {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
};

using PhaseFn = std::function<double(double x, double y)>;

namespace serial {

/// Applies m to each interleaved (R, L) amplitude pair.
void apply_coin(std::span<cplx> amps, const Mat2& m);

/// field[i] *= mask[i].
void multiply(std::span<cplx> field, std::span<const cplx> mask);

/// out[i] = exp(i * sign * phase(x, y)).
void tabulate_phase_mask(std::span<cplx> out, const Grid2& g, double sign, const PhaseFn& phase);

/// out[j] = sum_i |field(i, j)|^2 (integrates out x for each row y).
void row_power(std::span<const cplx> field, int nx, int ny, std::span<double> out);

}  // namespace serial

namespace omp {

void apply_coin(std::span<cplx> amps, const Mat2& m);
void multiply(std::span<cplx> field, std::span<const cplx> mask);
void tabulate_phase_mask(std::span<cplx> out, const Grid2& g, double sign, const PhaseFn& phase);
void row_power(std::span<const cplx> field, int nx, int ny, std::span<double> out);

}  // namespace omp

}  // namespace qwr::kernels
