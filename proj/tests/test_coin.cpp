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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qwr/coin.hpp"

using namespace qwr;

namespace {

const double s2 = std::numbers::sqrt2;
const cplx I(0.0, 1.0);

Eigen::Matrix2cd mat(cplx a, cplx b, cplx c, cplx d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

void expect_matrix_near(const CoinOperator& op, const Eigen::Matrix2cd& want, double tol = 1e-15) {
  EXPECT_LE((op.matrix() - want).cwiseAbs().maxCoeff(), tol) << op.matrix() << "\nvs\n" << want;
}

}  // namespace

TEST(Waveplate, QuarterWaveAt45IsHadamardLike) {
  expect_matrix_near(qwp_operator(45.0), mat(1, 1, -1, 1) / s2);
}

TEST(Waveplate, QuarterWaveAt0And90) {
  expect_matrix_near(qwp_operator(0.0), mat(1, I, I, 1) / s2);
  expect_matrix_near(qwp_operator(90.0), mat(1, -I, -I, 1) / s2);
}

TEST(Waveplate, HalfWaveIsAntiDiagonal) {
  expect_matrix_near(hwp_operator(0.0), I * mat(0, 1, 1, 0));
  expect_matrix_near(hwp_operator(90.0), -I * mat(0, 1, 1, 0));
  const cplx e = std::polar(1.0, std::numbers::pi / 4);
  expect_matrix_near(hwp_operator(22.5), mat(0, I * std::conj(e), I * e, 0));
}

TEST(Waveplate, AngleNormalizedToHalfTurn) {
  EXPECT_DOUBLE_EQ(WaveplateSpec(PlateKind::Quarter, 225.0).theta_deg(), 45.0);
  EXPECT_DOUBLE_EQ(WaveplateSpec(PlateKind::Half, -45.0).theta_deg(), 135.0);
  EXPECT_DOUBLE_EQ(WaveplateSpec(PlateKind::Half, 180.0).theta_deg(), 0.0);
  EXPECT_EQ(WaveplateSpec(PlateKind::Quarter, 405.0), WaveplateSpec(PlateKind::Quarter, 45.0));
}

TEST(Waveplate, EveryAngleGivesUnitary) {
  for (double th = -180.0; th <= 360.0; th += 7.5) {
    EXPECT_LT(qwp_operator(th).unitarity_error(), 1e-12);
    EXPECT_LT(hwp_operator(th).unitarity_error(), 1e-12);
    EXPECT_LT(coin_theta(th).unitarity_error(), 1e-12);
  }
}

TEST(CoinTheta, SpecialAngles) {
  expect_matrix_near(coin_theta(0.0), Eigen::Matrix2cd::Identity());
  expect_matrix_near(coin_theta(90.0), balanced_coin().matrix());
  expect_matrix_near(coin_theta(90.0), mat(1, I, I, 1) / s2);
  expect_matrix_near(coin_theta(180.0), I * mat(0, 1, 1, 0), 1e-15);
}

TEST(CoinOperator, RejectsNonUnitary) {
  EXPECT_THROW(CoinOperator(mat(1, 1, 1, 1) / s2), std::invalid_argument);
  EXPECT_THROW(CoinOperator(mat(1, I, I, 1) / 2.0), std::invalid_argument);
  EXPECT_NO_THROW(CoinOperator(mat(0, 1, 1, 0)));
}

TEST(Compose, FirstListedActsFirst) {
  expect_matrix_near(compose({not_coin(), not_coin()}), Eigen::Matrix2cd::Identity());
  expect_matrix_near(compose({not_coin(), hadamard_coin()}), mat(1, 1, -1, 1) / s2);
  // Non-commuting pair pins the order.
  const CoinOperator a = qwp_operator(10.0), b = hwp_operator(35.0);
  expect_matrix_near(compose({a, b}), b.matrix() * a.matrix());
}

TEST(Compose, EmptyListThrows) {
  EXPECT_THROW(compose(std::span<const CoinOperator>{}), std::invalid_argument);
}

TEST(Compose, TwoQuarterPlatesAroundHalfPlate) {
  const CoinOperator lhs = compose({qwp_operator(45.0), hwp_operator(22.5), qwp_operator(45.0)});
  const CoinOperator rhs = coin_theta(90.0) * not_coin();
  expect_matrix_near(lhs, I * rhs.matrix(), 1e-15);
}

TEST(GlobalPhase, SingleWavePlateRealizations) {
  EXPECT_TRUE(equal_up_to_global_phase(qwp_operator(45.0), hadamard_coin() * not_coin(), 1e-12));
  const auto lam = global_phase_between(hwp_operator(0.0), identity_coin() * not_coin(), 1e-12);
  ASSERT_TRUE(lam.has_value());
  EXPECT_NEAR(std::abs(*lam - I), 0.0, 1e-15);
  EXPECT_FALSE(equal_up_to_global_phase(hadamard_coin(), balanced_coin(), 1e-12));
}

TEST(GlobalPhase, BalancedCoinFromQuarterPlateAt90) {
  // C_B C_N = i Q_90; the half-wave realization does not hold.
  const auto lam = global_phase_between(balanced_coin() * not_coin(), qwp_operator(90.0), 1e-12);
  ASSERT_TRUE(lam.has_value());
  EXPECT_NEAR(std::abs(*lam - I), 0.0, 1e-15);
  EXPECT_FALSE(equal_up_to_global_phase(balanced_coin() * not_coin(), hwp_operator(90.0), 1e-6));
}

TEST(GlobalPhase, ToleranceIsRespected) {
  const CoinOperator a = qwp_operator(45.0);
  const CoinOperator b = qwp_operator(45.0 + 1e-6);
  EXPECT_FALSE(equal_up_to_global_phase(a, b, 1e-12));
  EXPECT_TRUE(equal_up_to_global_phase(a, b, 1e-6));
}

TEST(States, PreparedStatesFromVertical) {
  EXPECT_NEAR(std::abs(vertical().dot(prepared_coin_state(0.0))), 1.0, 1e-15);
  // Up to phase, HWP at 0 keeps vertical, at 45 gives horizontal and at 67.5 the diagonal.
  EXPECT_NEAR(std::abs(horizontal().dot(prepared_coin_state(45.0))), 1.0, 1e-15);
  const Eigen::Vector2cd d = (horizontal() + vertical()) / s2;
  EXPECT_NEAR(std::abs(d.dot(prepared_coin_state(67.5))), 1.0, 1e-15);
}

TEST(States, LinearStatesHaveEqualCircularWeights) {
  for (double th = 0.0; th < 180.0; th += 11.25) {
    const Eigen::Vector2cd v = prepared_coin_state(th);
    EXPECT_NEAR(std::norm(v(0)), 0.5, 1e-15);
    EXPECT_NEAR(std::norm(v(1)), 0.5, 1e-15);
  }
  EXPECT_NEAR(std::abs(horizontal().dot(vertical())), 0.0, 1e-16);
}

TEST(QPlate, StepMustBeNonzeroInteger) {
  EXPECT_EQ(QPlateSpec(0.5).step(), 1);
  EXPECT_EQ(QPlateSpec(1.0).step(), 2);
  EXPECT_EQ(QPlateSpec(-1.5).step(), -3);
  EXPECT_THROW(QPlateSpec(0.25), std::invalid_argument);
  EXPECT_THROW(QPlateSpec(0.0), std::invalid_argument);
}
