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

#include <vector>

namespace qwr {

/// Nonnegative weight per OAM index l over [lmin, lmax].
class Spectrum {
 public:
  Spectrum() = default;
  /// Throws std::invalid_argument on an empty table or a negative/non-finite weight.
  Spectrum(int lmin, std::vector<double> weights);

  /// All-zero spectrum on [lmin, lmax].
  static Spectrum zeros(int lmin, int lmax);
  static Spectrum delta(int l, int lmin, int lmax);

  int lmin() const { return lmin_; }
  int lmax() const { return lmin_ + static_cast<int>(weights_.size()) - 1; }
  int size() const { return static_cast<int>(weights_.size()); }
  bool empty() const { return weights_.empty(); }

  /// Zero outside [lmin, lmax].
  double at(int l) const;
  const std::vector<double>& weights() const { return weights_; }

  double total() const;
  /// Throws std::domain_error when the total is zero.
  Spectrum normalized() const;
  bool same_support(const Spectrum& other) const {
    return lmin_ == other.lmin_ && weights_.size() == other.weights_.size();
  }

  bool operator==(const Spectrum&) const = default;

 private:
  int lmin_ = 0;
  std::vector<double> weights_;
};

/// sum P(l) l^2 - (sum P(l) l)^2.
double variance(const Spectrum& spec);
double mean(const Spectrum& spec);

}  // namespace qwr
