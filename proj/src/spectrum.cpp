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

#include "qwr/spectrum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qwr {

Spectrum::Spectrum(int lmin, std::vector<double> weights)
    : lmin_(lmin), weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("spectrum needs at least one site");
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("spectrum weights must be finite and nonnegative");
    }
  }
}

Spectrum Spectrum::zeros(int lmin, int lmax) {
  if (lmax < lmin) throw std::invalid_argument("spectrum bounds are inverted");
  return Spectrum(lmin, std::vector<double>(static_cast<std::size_t>(lmax - lmin + 1), 0.0));
}

Spectrum Spectrum::delta(int l, int lmin, int lmax) {
  if (l < lmin || l > lmax) throw std::invalid_argument("delta site outside bounds");
  Spectrum s = zeros(lmin, lmax);
  s.weights_[static_cast<std::size_t>(l - lmin)] = 1.0;
  return s;
}

double Spectrum::at(int l) const {
  if (l < lmin_ || l > lmax()) return 0.0;
  return weights_[static_cast<std::size_t>(l - lmin_)];
}

double Spectrum::total() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

Spectrum Spectrum::normalized() const {
  const double t = total();
  if (!(t > 0.0)) throw std::domain_error("cannot normalize a spectrum with zero total");
  std::vector<double> w = weights_;
  for (double& x : w) x /= t;
  return Spectrum(lmin_, std::move(w));
}

double mean(const Spectrum& spec) {
  double m = 0.0;
  for (int i = 0; i < spec.size(); ++i) m += spec.weights()[i] * (spec.lmin() + i);
  return m;
}

double variance(const Spectrum& spec) {
  double m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < spec.size(); ++i) {
    const double l = spec.lmin() + i;
    m1 += spec.weights()[i] * l;
    m2 += spec.weights()[i] * l * l;
  }
  return m2 - m1 * m1;
}

}  // namespace qwr
