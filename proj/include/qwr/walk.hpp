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

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qwr/coin.hpp"
#include "qwr/spectrum.hpp"

namespace qwr {

enum class Coin : int { R = 0, L = 1 };

/// Raised when a nonzero amplitude would be shifted past the lattice bounds.
class LatticeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex amplitudes over (l, coin) for l in [lmin, lmax].
/// Storage is interleaved: index 2*(l - lmin) + coin.
class WalkerState {
 public:
  WalkerState(int lmin, int lmax);

  /// |l0> (x) coin, normalized, on [lmin, lmax] (defaults to the single site l0).
  static WalkerState localized(int l0, const Eigen::Vector2cd& coin);
  static WalkerState localized(int l0, const Eigen::Vector2cd& coin, int lmin, int lmax);

  int lmin() const { return lmin_; }
  int lmax() const { return lmax_; }
  int sites() const { return lmax_ - lmin_ + 1; }

  cplx amp(int l, Coin c) const;
  cplx& amp(int l, Coin c);

  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }

  double norm_squared() const;

  /// Smallest and largest l carrying a nonzero amplitude; nullopt for the zero state.
  std::optional<std::pair<int, int>> support() const;

  /// Same state on new bounds. Throws LatticeOverflow if the support does not fit.
  WalkerState embedded(int lmin, int lmax) const;

 private:
  int lmin_;
  int lmax_;
  std::vector<cplx> amps_;
};

/// q-plate: (l, R) -> (l + 2q, L) and (l, L) -> (l - 2q, R).
WalkerState shift_apply(const WalkerState& state, const QPlateSpec& qplate);

/// One walk step: shift, then `after_shift` on every site.
WalkerState step(const WalkerState& state, const CoinOperator& after_shift,
                 const QPlateSpec& qplate);

/// One walk step with an intracavity wave plate; no plate means the bare
/// q-plate, i.e. the NOT-coin walk.
WalkerState step(const WalkerState& state, const std::optional<WaveplateSpec>& plate,
                 const QPlateSpec& qplate);

/// States after steps 0..n inclusive. The lattice of `initial` must already
/// hold the support widened by n*|2q| on both sides (std::invalid_argument otherwise).
std::vector<WalkerState> evolve(const WalkerState& initial, const CoinOperator& after_shift,
                                const QPlateSpec& qplate, int n);
std::vector<WalkerState> evolve(const WalkerState& initial,
                                const std::optional<WaveplateSpec>& plate,
                                const QPlateSpec& qplate, int n);

/// Re-embeds `initial` on [min_support - n|2q|, max_support + n|2q|] before evolving.
std::vector<WalkerState> evolve_auto(const WalkerState& initial,
                                     const std::optional<WaveplateSpec>& plate,
                                     const QPlateSpec& qplate, int n);
std::vector<WalkerState> evolve_auto(const WalkerState& initial,
                                     const CoinOperator& after_shift,
                                     const QPlateSpec& qplate, int n);

/// P(l) = |amp(l, R)|^2 + |amp(l, L)|^2.
Spectrum probabilities(const WalkerState& state);

/// Binomial walk on {-n, -n+2, ..., n}, zero on off-parity sites, lattice [-n, n].
Spectrum classical_rw_distribution(int n, double p_right);

/// 2 s0 s1 for the singular values of the sites x 2 amplitude matrix
/// (0 for product states, 1 for maximally non-separable ones).
double nonseparability(const WalkerState& state);

}  // namespace qwr
