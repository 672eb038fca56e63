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

#include "qwr/field.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/fft.hpp"

namespace qwr {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

FieldGrid::FieldGrid(int nx_, int ny_, double dx_, double dy_, double wavelength_)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), wavelength(wavelength_) {
  if (!is_power_of_two(nx) || !is_power_of_two(ny)) {
    throw std::invalid_argument("field grid dimensions must be powers of two");
  }
  if (!(dx > 0.0 && dy > 0.0)) throw std::invalid_argument("field grid pitch must be positive");
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
  values.assign(static_cast<std::size_t>(nx) * ny, cplx{});
}

double FieldGrid::power() const {
  double acc = 0.0;
  for (const cplx& v : values) acc += std::norm(v);
  return acc * dx * dy;
}

FieldGrid lens_fourier_transform(const FieldGrid& in, double focal_length) {
  if (!(focal_length > 0.0)) throw std::invalid_argument("focal length must be positive");
  const double lf = in.wavelength * focal_length;
  FieldGrid out(in.nx, in.ny, lf / (in.nx * in.dx), lf / (in.ny * in.dy), in.wavelength);
  out.values = in.values;
  detail::fft2d_centered(out.values, out.nx, out.ny);
  const double scale = in.dx * in.dy / lf;
  for (cplx& v : out.values) v *= scale;
  return out;
}

}  // namespace qwr
