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

// Reference implementations used only by tests. They avoid the library's
// code paths on purpose: dense matrices, direct sums, brute-force quadrature.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Textbook walk: conditional translation T (R moves +1, L moves -1) followed
/// by `coin` on every site, as one dense matrix on [-n, n] x {R, L}.
inline Eigen::MatrixXcd walk_unitary(const Eigen::Matrix2cd& coin, int n) {
  const int sites = 2 * n + 1;
  const int dim = 2 * sites;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < sites; ++s) {
    if (s + 1 < sites) t(2 * (s + 1), 2 * s) = 1.0;
    if (s - 1 >= 0) t(2 * (s - 1) + 1, 2 * s + 1) = 1.0;
  }
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
  for (int s = 0; s < sites; ++s) c.block<2, 2>(2 * s, 2 * s) = coin;
  return c * t;
}

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

/// Binomial probability without dynamic programming.
inline double binomial_pmf(int n, int k, double p) {
  const double logc = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  return std::exp(logc + k * std::log(p) + (n - k) * std::log1p(-p));
}

/// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels = 20000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
