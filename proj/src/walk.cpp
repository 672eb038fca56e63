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

#include "qwr/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwr/kernels.hpp"

namespace qwr {
namespace {

std::size_t index_of(int l, int lmin, Coin c) {
  return 2 * static_cast<std::size_t>(l - lmin) + static_cast<std::size_t>(c);
}

kernels::Mat2 to_mat2(const CoinOperator& op) {
  return {op(0, 0), op(0, 1), op(1, 0), op(1, 1)};
}

CoinOperator plate_or_bare(const std::optional<WaveplateSpec>& plate) {
  return plate ? waveplate_operator(*plate) : identity_coin();
}

void require_room(const WalkerState& s, const QPlateSpec& qp, int n) {
  const auto supp = s.support();
  if (!supp) throw std::invalid_argument("evolve: initial state is zero");
  const long reach = static_cast<long>(n) * std::abs(qp.step());
  if (supp->first - reach < s.lmin() || supp->second + reach > s.lmax()) {
    throw std::invalid_argument(
        "evolve: lattice [" + std::to_string(s.lmin()) + ", " + std::to_string(s.lmax()) +
        "] too small for " + std::to_string(n) + " steps; need [" +
        std::to_string(supp->first - reach) + ", " + std::to_string(supp->second + reach) + "]");
  }
}

}  // namespace

WalkerState::WalkerState(int lmin, int lmax) : lmin_(lmin), lmax_(lmax) {
  if (lmax < lmin) throw std::invalid_argument("walker lattice bounds are inverted");
  amps_.assign(2 * static_cast<std::size_t>(lmax - lmin + 1), cplx{});
}

WalkerState WalkerState::localized(int l0, const Eigen::Vector2cd& coin) {
  return localized(l0, coin, l0, l0);
}

WalkerState WalkerState::localized(int l0, const Eigen::Vector2cd& coin, int lmin, int lmax) {
  if (l0 < lmin || l0 > lmax) throw std::invalid_argument("initial site outside lattice");
  const double nrm = coin.norm();
  if (!(nrm > 0.0)) throw std::invalid_argument("coin vector is zero");
  WalkerState s(lmin, lmax);
  s.amp(l0, Coin::R) = coin(0) / nrm;
  s.amp(l0, Coin::L) = coin(1) / nrm;
  return s;
}

cplx WalkerState::amp(int l, Coin c) const {
  if (l < lmin_ || l > lmax_) throw std::out_of_range("site outside lattice");
  return amps_[index_of(l, lmin_, c)];
}

cplx& WalkerState::amp(int l, Coin c) {
  if (l < lmin_ || l > lmax_) throw std::out_of_range("site outside lattice");
  return amps_[index_of(l, lmin_, c)];
}

double WalkerState::norm_squared() const {
  double acc = 0.0;
  for (const cplx& a : amps_) acc += std::norm(a);
  return acc;
}

std::optional<std::pair<int, int>> WalkerState::support() const {
  int lo = 0, hi = 0;
  bool any = false;
  for (int l = lmin_; l <= lmax_; ++l) {
    if (amp(l, Coin::R) != cplx{} || amp(l, Coin::L) != cplx{}) {
      if (!any) lo = l;
      hi = l;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return std::pair{lo, hi};
}

WalkerState WalkerState::embedded(int lmin, int lmax) const {
  WalkerState out(lmin, lmax);
  for (int l = lmin_; l <= lmax_; ++l) {
    const cplx r = amp(l, Coin::R);
    const cplx lft = amp(l, Coin::L);
    if (l < lmin || l > lmax) {
      if (r != cplx{} || lft != cplx{}) {
        throw LatticeOverflow("embedding drops nonzero amplitude at l = " + std::to_string(l));
      }
      continue;
    }
    out.amp(l, Coin::R) = r;
    out.amp(l, Coin::L) = lft;
  }
  return out;
}

WalkerState shift_apply(const WalkerState& state, const QPlateSpec& qplate) {
  const int s = qplate.step();
  WalkerState out(state.lmin(), state.lmax());
  for (int l = state.lmin(); l <= state.lmax(); ++l) {
    const cplx r = state.amp(l, Coin::R);
    const cplx lft = state.amp(l, Coin::L);
    if (r != cplx{}) {
      if (l + s < state.lmin() || l + s > state.lmax()) {
        throw LatticeOverflow("shift moves amplitude at (l=" + std::to_string(l) +
                              ", R) off the lattice; widen the truncation");
      }
      out.amp(l + s, Coin::L) = r;
    }
    if (lft != cplx{}) {
      if (l - s < state.lmin() || l - s > state.lmax()) {
        throw LatticeOverflow("shift moves amplitude at (l=" + std::to_string(l) +
                              ", L) off the lattice; widen the truncation");
      }
      out.amp(l - s, Coin::R) = lft;
    }
  }
  return out;
}

WalkerState step(const WalkerState& state, const CoinOperator& after_shift,
                 const QPlateSpec& qplate) {
  WalkerState out = shift_apply(state, qplate);
  kernels::omp::apply_coin(out.amplitudes(), to_mat2(after_shift));
  return out;
}

WalkerState step(const WalkerState& state, const std::optional<WaveplateSpec>& plate,
                 const QPlateSpec& qplate) {
  if (!plate) return shift_apply(state, qplate);
  return step(state, waveplate_operator(*plate), qplate);
}

std::vector<WalkerState> evolve(const WalkerState& initial, const CoinOperator& after_shift,
                                const QPlateSpec& qplate, int n) {
  if (n < 0) throw std::invalid_argument("evolve: negative step count");
  require_room(initial, qplate, n);
  std::vector<WalkerState> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(initial);
  for (int k = 0; k < n; ++k) out.push_back(step(out.back(), after_shift, qplate));
  return out;
}

std::vector<WalkerState> evolve(const WalkerState& initial,
                                const std::optional<WaveplateSpec>& plate,
                                const QPlateSpec& qplate, int n) {
  return evolve(initial, plate_or_bare(plate), qplate, n);
}

namespace {

WalkerState auto_embed(const WalkerState& initial, const QPlateSpec& qplate, int n) {
  if (n < 0) throw std::invalid_argument("evolve: negative step count");
  const auto supp = initial.support();
  if (!supp) throw std::invalid_argument("evolve: initial state is zero");
  const int reach = n * std::abs(qplate.step());
  return initial.embedded(supp->first - reach, supp->second + reach);
}

}  // namespace

std::vector<WalkerState> evolve_auto(const WalkerState& initial,
                                     const std::optional<WaveplateSpec>& plate,
                                     const QPlateSpec& qplate, int n) {
  return evolve(auto_embed(initial, qplate, n), plate, qplate, n);
}

std::vector<WalkerState> evolve_auto(const WalkerState& initial,
                                     const CoinOperator& after_shift,
                                     const QPlateSpec& qplate, int n) {
  return evolve(auto_embed(initial, qplate, n), after_shift, qplate, n);
}

Spectrum probabilities(const WalkerState& state) {
  std::vector<double> w(static_cast<std::size_t>(state.sites()));
  for (int l = state.lmin(); l <= state.lmax(); ++l) {
    w[static_cast<std::size_t>(l - state.lmin())] =
        std::norm(state.amp(l, Coin::R)) + std::norm(state.amp(l, Coin::L));
  }
  return Spectrum(state.lmin(), std::move(w));
}

Spectrum classical_rw_distribution(int n, double p_right) {
  if (n < 0) throw std::invalid_argument("classical walk: negative step count");
  if (!(p_right >= 0.0 && p_right <= 1.0)) {
    throw std::invalid_argument("classical walk: p_right must lie in [0, 1]");
  }
  // binom[k] = P(k right moves); dynamic programming keeps it exact to rounding.
  std::vector<double> binom(static_cast<std::size_t>(n) + 1, 0.0);
  binom[0] = 1.0;
  for (int step = 1; step <= n; ++step) {
    for (int k = step; k >= 1; --k) binom[k] = p_right * binom[k - 1] + (1.0 - p_right) * binom[k];
    binom[0] *= (1.0 - p_right);
  }
  std::vector<double> w(2 * static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(2 * k)] = binom[k];
  return Spectrum(-n, std::move(w));
}

double nonseparability(const WalkerState& state) {
  // det(M^dagger M) via Cauchy-Binet: a sum of nonnegative 2x2 minors, so
  // product states give exactly zero instead of a cancellation residue.
  const int n = state.sites();
  const auto a = state.amplitudes();
  double det = 0.0;
  for (int i = 0; i < n; ++i) {
    const cplx ri = a[2 * i], li = a[2 * i + 1];
    if (ri == cplx{} && li == cplx{}) continue;
    for (int j = i + 1; j < n; ++j) {
      det += std::norm(ri * a[2 * j + 1] - a[2 * j] * li);
    }
  }
  const double trace = state.norm_squared();
  if (!(trace > 0.0)) throw std::domain_error("nonseparability of the zero state");
  // s0 s1 = sqrt(det), s0^2 + s1^2 = trace.
  return std::min(1.0, 2.0 * std::sqrt(det) / trace);
}

}  // namespace qwr
