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

#include "qwr/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwr {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr cplx kI{0.0, 1.0};

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

double max_abs(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

CoinOperator::CoinOperator(const Eigen::Matrix2cd& m, double tol) : m_(m) {
  const double err = unitarity_error();
  if (!(err <= tol)) {
    throw std::invalid_argument("coin operator is not unitary (||U'U - I||_max = " +
                                std::to_string(err) + ")");
  }
}

CoinOperator CoinOperator::operator*(const CoinOperator& rhs) const {
  // Products of unitaries drift by a few ulps; 1e-10 leaves room for long chains.
  return CoinOperator(m_ * rhs.m_, 1e-10);
}

double CoinOperator::unitarity_error() const {
  return max_abs(m_.adjoint() * m_ - Eigen::Matrix2cd::Identity());
}

WaveplateSpec::WaveplateSpec(PlateKind kind, double theta_deg) : kind_(kind) {
  if (!std::isfinite(theta_deg)) throw std::invalid_argument("wave plate angle must be finite");
  double t = std::fmod(theta_deg, 180.0);
  if (t < 0) t += 180.0;
  if (t >= 180.0) t = 0.0;
  theta_deg_ = t;
}

QPlateSpec::QPlateSpec(double q) : q_(q) {
  const double two_q = 2.0 * q;
  const double rounded = std::round(two_q);
  if (!std::isfinite(q) || std::abs(two_q - rounded) > 1e-12 || rounded == 0.0) {
    throw std::invalid_argument("q-plate charge must make 2q a nonzero integer, got q = " +
                                std::to_string(q));
  }
  step_ = static_cast<int>(rounded);
}

CoinOperator qwp_operator(double theta_deg) {
  const double t = deg2rad(theta_deg);
  Eigen::Matrix2cd m;
  m << 1.0, kI * std::exp(-2.0 * kI * t),
       kI * std::exp(2.0 * kI * t), 1.0;
  return CoinOperator(kInvSqrt2 * m);
}

CoinOperator hwp_operator(double theta_deg) {
  const double t = deg2rad(theta_deg);
  Eigen::Matrix2cd m;
  m << 0.0, kI * std::exp(-2.0 * kI * t),
       kI * std::exp(2.0 * kI * t), 0.0;
  return CoinOperator(m);
}

CoinOperator waveplate_operator(const WaveplateSpec& plate) {
  return plate.kind() == PlateKind::Quarter ? qwp_operator(plate.theta_deg())
                                            : hwp_operator(plate.theta_deg());
}

CoinOperator coin_theta(double theta_deg) {
  const double h = deg2rad(theta_deg) / 2.0;
  Eigen::Matrix2cd m;
  m << std::cos(h), kI * std::sin(h),
       kI * std::sin(h), std::cos(h);
  return CoinOperator(m);
}

CoinOperator hadamard_coin() {
  Eigen::Matrix2cd m;
  m << 1.0, 1.0,
       1.0, -1.0;
  return CoinOperator(kInvSqrt2 * m);
}

CoinOperator balanced_coin() {
  Eigen::Matrix2cd m;
  m << 1.0, kI,
       kI, 1.0;
  return CoinOperator(kInvSqrt2 * m);
}

CoinOperator not_coin() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0,
       1.0, 0.0;
  return CoinOperator(m);
}

CoinOperator identity_coin() { return CoinOperator(Eigen::Matrix2cd::Identity()); }

CoinOperator compose(std::span<const CoinOperator> ops) {
  if (ops.empty()) throw std::invalid_argument("compose: empty operator list");
  CoinOperator acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = ops[i] * acc;
  return acc;
}

CoinOperator compose(std::initializer_list<CoinOperator> ops) {
  return compose(std::span<const CoinOperator>(ops.begin(), ops.size()));
}

std::optional<cplx> global_phase_between(const CoinOperator& a, const CoinOperator& b,
                                         double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  Eigen::Index r = 0, c = 0;
  b.matrix().cwiseAbs().maxCoeff(&r, &c);
  const cplx ratio = a(r, c) / b(r, c);
  if (std::abs(ratio) == 0.0) return std::nullopt;
  const cplx lambda = ratio / std::abs(ratio);
  if (max_abs(a.matrix() - lambda * b.matrix()) <= tol) return lambda;
  return std::nullopt;
}

bool equal_up_to_global_phase(const CoinOperator& a, const CoinOperator& b, double tol) {
  return global_phase_between(a, b, tol).has_value();
}

Eigen::Vector2cd right_circular() { return {1.0, 0.0}; }
Eigen::Vector2cd left_circular() { return {0.0, 1.0}; }

Eigen::Vector2cd horizontal() {
  return Eigen::Vector2cd(-kI * kInvSqrt2, kI * kInvSqrt2);
}

Eigen::Vector2cd vertical() { return Eigen::Vector2cd(-kInvSqrt2, -kInvSqrt2); }

Eigen::Vector2cd prepared_coin_state(double hwp_deg) {
  return hwp_operator(hwp_deg).matrix() * vertical();
}

}  // namespace qwr
