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
#include <span>

namespace qwr::detail {

/// Unnormalized forward 2-D DFT of a row-major (ny x nx) array with the zero
/// frequency and the zero coordinate both at index n/2. In place.
void fft2d_centered(std::span<std::complex<double>> data, int nx, int ny);

}  // namespace qwr::detail
