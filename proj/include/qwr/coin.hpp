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
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace qwr {

using cplx = std::complex<double>;

/// 2x2 unitary acting on the polarization (coin) space, ordered basis (|R>, |L>).
class CoinOperator {
 public:
  /// Throws std::invalid_argument when ||U^dagger U - I||_max exceeds `tol`.
  explicit CoinOperator(const Eigen::Matrix2cd& m, double tol = 1e-12);

  const Eigen::Matrix2cd& matrix() const { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

  /// Matrix product: (a * b) applies b first.
  CoinOperator operator*(const CoinOperator& rhs) const;

  double unitarity_error() const;

 private:
  Eigen::Matrix2cd m_;
};

enum class PlateKind { Quarter, Half };

/// Wave plate with its fast axis at `theta_deg` from horizontal, normalized to [0, 180).
class WaveplateSpec {
 public:
  WaveplateSpec(PlateKind kind, double theta_deg);

  PlateKind kind() const { return kind_; }
  double theta_deg() const { return theta_deg_; }

  bool operator==(const WaveplateSpec&) const = default;

 private:
  PlateKind kind_;
  double theta_deg_;
};

/// q-plate of charge q; the lattice step 2q must be a nonzero integer.
class QPlateSpec {
 public:
  explicit QPlateSpec(double q = 0.5);

  double q() const { return q_; }
  int step() const { return step_; }

 private:
  double q_;
  int step_;
};

// Quarter- and half-wave plates in the circular basis.
CoinOperator qwp_operator(double theta_deg);
CoinOperator hwp_operator(double theta_deg);
CoinOperator waveplate_operator(const WaveplateSpec& plate);

/// [[cos(t/2), i sin(t/2)], [i sin(t/2), cos(t/2)]]; coin_theta(90) is the balanced coin.
CoinOperator coin_theta(double theta_deg);

CoinOperator hadamard_coin();
CoinOperator balanced_coin();
CoinOperator not_coin();
CoinOperator identity_coin();

/// Product of `ops` with the first element acting first on the state.
/// Throws std::invalid_argument on an empty list.
CoinOperator compose(std::span<const CoinOperator> ops);
CoinOperator compose(std::initializer_list<CoinOperator> ops);

/// Unit-modulus lambda read off the largest-magnitude entry of b, returned
/// only when ||a - lambda b||_max <= tol.
std::optional<cplx> global_phase_between(const CoinOperator& a, const CoinOperator& b,
                                         double tol);

bool equal_up_to_global_phase(const CoinOperator& a, const CoinOperator& b, double tol);

/// Coin (polarization) vectors in the (|R>, |L>) basis.
Eigen::Vector2cd right_circular();
Eigen::Vector2cd left_circular();
Eigen::Vector2cd horizontal();  // i(|L> - |R>)/sqrt2
Eigen::Vector2cd vertical();    // -(|R> + |L>)/sqrt2

/// State prepared by a half-wave plate at `hwp_deg` acting on vertical polarization.
/// 45 deg gives horizontal, 67.5 deg gives diagonal.
Eigen::Vector2cd prepared_coin_state(double hwp_deg);

}  // namespace qwr
