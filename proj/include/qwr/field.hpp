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

#include <complex>
#include <vector>

namespace qwr {

using cplx = std::complex<double>;

/// Sampled complex field on a centered grid: x_i = (i - nx/2) dx,
/// y_j = (j - ny/2) dy, row-major with x fastest.
struct FieldGrid {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  double wavelength = 0.0;
  std::vector<cplx> values;

  FieldGrid() = default;
  /// Zero field. Throws std::invalid_argument unless nx, ny are powers of two
  /// and dx, dy, wavelength are positive.
  FieldGrid(int nx, int ny, double dx, double dy, double wavelength);

  double x(int i) const { return (i - nx / 2) * dx; }
  double y(int j) const { return (j - ny / 2) * dy; }
  cplx& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
  const cplx& at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }

  /// sum |E|^2 dx dy
  double power() const;
};

bool is_power_of_two(int n);

/// Field in the back focal plane of a lens of focal length f:
/// F(u, v) = (dx dy / (lambda f)) * DFT[E](u, v), sampled at du = lambda f / (nx dx).
/// Power is conserved.
FieldGrid lens_fourier_transform(const FieldGrid& in, double focal_length);

}  // namespace qwr
