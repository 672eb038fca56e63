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

#include <stdexcept>

#include "qwr/kernels.hpp"

namespace qwr::kernels::omp {

void apply_coin(std::span<cplx> amps, const Mat2& m) {
  const auto sites = static_cast<std::ptrdiff_t>(amps.size() / 2);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static) if (sites > 4096)
  for (std::ptrdiff_t s = 0; s < sites; ++s) {
    const cplx r = a[2 * s];
    const cplx l = a[2 * s + 1];
    a[2 * s] = m[0] * r + m[1] * l;
    a[2 * s + 1] = m[2] * r + m[3] * l;
  }
}

void multiply(std::span<cplx> field, std::span<const cplx> mask) {
  if (field.size() != mask.size()) throw std::invalid_argument("mask size mismatch");
  const auto n = static_cast<std::ptrdiff_t>(field.size());
  cplx* f = field.data();
  const cplx* m = mask.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) f[i] *= m[i];
}

void tabulate_phase_mask(std::span<cplx> out, const Grid2& g, double sign,
                         const PhaseFn& phase) {
  if (out.size() != static_cast<std::size_t>(g.nx) * g.ny) {
    throw std::invalid_argument("mask size mismatch");
  }
  cplx* o = out.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < g.ny; ++j) {
    const double y = (j - g.ny / 2) * g.dy;
    for (int i = 0; i < g.nx; ++i) {
      const double x = (i - g.nx / 2) * g.dx;
      o[static_cast<std::size_t>(j) * g.nx + i] = std::polar(1.0, sign * phase(x, y));
    }
  }
}

void row_power(std::span<const cplx> field, int nx, int ny, std::span<double> out) {
  if (field.size() != static_cast<std::size_t>(nx) * ny || out.size() != static_cast<std::size_t>(ny)) {
    throw std::invalid_argument("row_power size mismatch");
  }
  const cplx* f = field.data();
  double* o = out.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) {
    double acc = 0.0;
    const cplx* row = f + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) acc += std::norm(row[i]);
    o[j] = acc;
  }
}

}  // namespace qwr::kernels::omp
