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

#include "detail/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qwr::detail {
namespace {

// FFTW's planner is not reentrant; execution is.
std::mutex planner_mutex;

struct Buffer {
  explicit Buffer(std::size_t n)
      : ptr(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (!ptr) throw std::bad_alloc();
  }
  ~Buffer() { fftw_free(ptr); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftw_complex* ptr;
};

// Moves index n/2 to 0 (inverse = true) or back.
void shift2d(const std::complex<double>* src, std::complex<double>* dst, int nx, int ny,
             bool inverse) {
  const int sx = inverse ? nx - nx / 2 : nx / 2;
  const int sy = inverse ? ny - ny / 2 : ny / 2;
  for (int j = 0; j < ny; ++j) {
    const int jd = (j + sy) % ny;
    for (int i = 0; i < nx; ++i) {
      dst[static_cast<std::size_t>(jd) * nx + (i + sx) % nx] = src[static_cast<std::size_t>(j) * nx + i];
    }
  }
}

}  // namespace

void fft2d_centered(std::span<std::complex<double>> data, int nx, int ny) {
  const std::size_t n = static_cast<std::size_t>(nx) * ny;
  if (data.size() != n) throw std::invalid_argument("fft2d_centered: size mismatch");
  Buffer buf(n);
  auto* b = reinterpret_cast<std::complex<double>*>(buf.ptr);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_2d(ny, nx, buf.ptr, buf.ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw planning failed");
  shift2d(data.data(), b, nx, ny, true);
  fftw_execute(plan);
  shift2d(b, data.data(), nx, ny, false);
  std::lock_guard lock(planner_mutex);
  fftw_destroy_plan(plan);
}

}  // namespace qwr::detail
