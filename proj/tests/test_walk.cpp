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

#include "oracles.hpp"
#include "qwr/walk.hpp"

using namespace qwr;

namespace {

const QPlateSpec kQ(0.5);
const double s2 = std::numbers::sqrt2;
const cplx I(0.0, 1.0);

Eigen::Vector2cd ket(cplx r, cplx l) { return Eigen::Vector2cd(r, l); }

Eigen::VectorXcd dense(const WalkerState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.amplitudes().size()));
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
  return v;
}

WalkerState from_dense(const Eigen::VectorXcd& v, int lmin) {
  WalkerState s(lmin, lmin + static_cast<int>(v.size() / 2) - 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) s.amplitudes()[static_cast<std::size_t>(i)] = v(i);
  return s;
}

double max_phase_free_error(const WalkerState& a, const WalkerState& b) {
  const Eigen::VectorXcd x = dense(a), y = dense(b);
  Eigen::Index k = 0;
  y.cwiseAbs().maxCoeff(&k);
  const cplx ph = x(k) / y(k);
  return (x - ph * y).cwiseAbs().maxCoeff();
}

double lobe(const Spectrum& p, int sign, int n) {
  double acc = 0.0;
  for (int l = p.lmin(); l <= p.lmax(); ++l) {
    if (sign * l > n / 2.0) acc += p.at(l);
  }
  return acc;
}

}  // namespace

TEST(Shift, SelectionRules) {
  const WalkerState r = shift_apply(WalkerState::localized(0, right_circular(), -1, 1), kQ);
  EXPECT_EQ(r.amp(1, Coin::L), cplx(1.0));
  EXPECT_NEAR(r.norm_squared(), 1.0, 0.0);
  const WalkerState l = shift_apply(WalkerState::localized(0, left_circular(), -1, 1), kQ);
  EXPECT_EQ(l.amp(-1, Coin::R), cplx(1.0));
}

TEST(Shift, HorizontalInputBecomesNonSeparable) {
  const WalkerState s = shift_apply(WalkerState::localized(0, horizontal(), -1, 1), kQ);
  EXPECT_NEAR(std::abs(s.amp(-1, Coin::R) - I / s2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amp(1, Coin::L) + I / s2), 0.0, 1e-15);
  EXPECT_NEAR(nonseparability(s), 1.0, 1e-15);
}

TEST(Shift, LargerChargeMovesFurther) {
  const WalkerState s = shift_apply(WalkerState::localized(0, right_circular(), -3, 3), QPlateSpec(1.5));
  EXPECT_EQ(s.amp(3, Coin::L), cplx(1.0));
}

TEST(Shift, OverflowIsAnError) {
  const WalkerState s = WalkerState::localized(1, right_circular(), -1, 1);
  EXPECT_THROW(shift_apply(s, kQ), LatticeOverflow);
  // Zero amplitude at the edge may sit there.
  EXPECT_NO_THROW(shift_apply(WalkerState::localized(1, left_circular(), -1, 1), kQ));
}

TEST(Step, QuarterPlateAt45FromRight) {
  const WalkerState s = step(WalkerState::localized(0, right_circular(), -1, 1),
                             WaveplateSpec(PlateKind::Quarter, 45.0), kQ);
  WalkerState want(-1, 1);
  want.amp(1, Coin::R) = 1.0 / s2;
  want.amp(1, Coin::L) = 1.0 / s2;
  EXPECT_LT(max_phase_free_error(s, want), 1e-15);
}

TEST(Step, NoPlateReturnsAfterTwoSteps) {
  const WalkerState s0 = WalkerState::localized(0, right_circular(), -2, 2);
  const WalkerState s2s = step(step(s0, std::nullopt, kQ), std::nullopt, kQ);
  EXPECT_EQ(s2s.amp(0, Coin::R), cplx(1.0));
  EXPECT_EQ(s2s.norm_squared(), 1.0);
}

TEST(Evolve, StrictBoundsAreChecked) {
  const WalkerState s = WalkerState::localized(0, right_circular(), -3, 3);
  EXPECT_THROW(evolve(s, hadamard_coin(), kQ, 4), std::invalid_argument);
  EXPECT_NO_THROW(evolve(s, hadamard_coin(), kQ, 3));
  EXPECT_THROW(evolve(s, hadamard_coin(), kQ, -1), std::invalid_argument);
}

TEST(Evolve, ZeroStepsIsIdentity) {
  const WalkerState s = WalkerState::localized(2, prepared_coin_state(30.0));
  const auto out = evolve_auto(s, WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].lmin(), 2);
  EXPECT_EQ(dense(out[0]), dense(s));
}

TEST(Evolve, AutoSizesAroundOffsetStart) {
  const auto out = evolve_auto(WalkerState::localized(3, right_circular()), hadamard_coin(), kQ, 4);
  EXPECT_EQ(out.back().lmin(), -1);
  EXPECT_EQ(out.back().lmax(), 7);
}

// Dense oracle: the q-plate equals the NOT coin after a conditional translation,
// so evolve(after_shift = C) must match (C C_N T)^n.
class DenseOracle : public ::testing::TestWithParam<int> {};

TEST_P(DenseOracle, AllCoinsAllStepsUpTo8) {
  const int which = GetParam();
  const CoinOperator coins[] = {hadamard_coin(), balanced_coin(), not_coin(), identity_coin()};
  const CoinOperator& c = coins[which];
  const Eigen::Vector2cd inputs[] = {right_circular(), left_circular(), prepared_coin_state(67.5),
                                     ket(0.6, cplx(0.0, 0.8))};
  for (const auto& in : inputs) {
    for (int n = 0; n <= 8; ++n) {
      const WalkerState start = WalkerState::localized(0, in, -n, n);
      const auto states = evolve(start, c, kQ, n);
      const Eigen::MatrixXcd u = oracle::walk_unitary(c.matrix() * oracle::pauli_x(), n);
      Eigen::VectorXcd v = dense(start);
      for (int k = 1; k <= n; ++k) {
        v = u * v;
        const double err = (dense(states[static_cast<std::size_t>(k)]) - v).cwiseAbs().maxCoeff();
        ASSERT_LT(err, 1e-12) << "coin " << which << " n " << n << " step " << k;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Coins, DenseOracle, ::testing::Values(0, 1, 2, 3));

TEST(Evolve, WavePlateWalkMatchesOracle) {
  const int n = 3;
  const auto states = evolve_auto(WalkerState::localized(0, right_circular()),
                                  WaveplateSpec(PlateKind::Quarter, 45.0), kQ, n);
  const Eigen::MatrixXcd u = oracle::walk_unitary(qwp_operator(45.0).matrix() * oracle::pauli_x(), n);
  Eigen::VectorXcd v = dense(states[0]);
  for (int k = 0; k < n; ++k) v = u * v;
  EXPECT_LT((dense(states.back()) - v).cwiseAbs().maxCoeff(), 1e-15);
  const Spectrum got = probabilities(states.back());
  const Spectrum want = probabilities(from_dense(v, -n));
  for (int l = -n; l <= n; ++l) EXPECT_NEAR(got.at(l), want.at(l), 1e-15);
}

TEST(Evolve, NormConservedOverHundredSteps) {
  for (double ang : {0.0, 30.0, 45.0, 90.0, 135.0}) {
    const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)),
                                    WaveplateSpec(PlateKind::Quarter, ang), kQ, 100);
    for (const auto& s : states) ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10);
  }
}

TEST(Evolve, ParityOfOccupiedSites) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)),
                                  WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 20);
  for (int n = 0; n <= 20; ++n) {
    const Spectrum p = probabilities(states[static_cast<std::size_t>(n)]);
    for (int l = p.lmin(); l <= p.lmax(); ++l) {
      if ((l + n) % 2 != 0) {
        ASSERT_EQ(p.at(l), 0.0) << "n " << n << " l " << l;
      }
    }
  }
}

TEST(Evolve, NotCoinIsPeriodTwo) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)), std::nullopt, kQ, 100);
  for (int k = 1; k <= 50; ++k) {
    ASSERT_LT(max_phase_free_error(states[2 * static_cast<std::size_t>(k)], states[0]), 1e-12);
  }
}

TEST(Evolve, IdentityCoinSplitsBallistically) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)),
                                  WaveplateSpec(PlateKind::Half, 0.0), kQ, 9);
  for (int n = 1; n <= 9; ++n) {
    const auto supp = states[static_cast<std::size_t>(n)].support();
    ASSERT_TRUE(supp);
    EXPECT_EQ(supp->first, -n);
    EXPECT_EQ(supp->second, n);
    const Spectrum p = probabilities(states[static_cast<std::size_t>(n)]);
    EXPECT_NEAR(p.at(n) + p.at(-n), 1.0, 1e-14);
  }
}

TEST(Evolve, HundredStepHadamardHasTwinPeaks) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)),
                                  WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 100);
  const Spectrum p = probabilities(states.back());
  int peak = 0;
  for (int l = 0; l <= 100; ++l) {
    if (p.at(l) > p.at(peak)) peak = l;
  }
  EXPECT_GT(peak, 60);
  EXPECT_LT(peak, 80);
  EXPECT_NEAR(p.at(peak), p.at(-peak), 1e-12);
  EXPECT_GT(p.at(peak), 5.0 * p.at(0));
}

TEST(Evolve, HorizontalInputLeansLeft) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(45.0)),
                                  WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 5);
  const Spectrum p = probabilities(states.back());
  // Frozen: 0.5625 / 0.1875 on |l| > 2.5.
  EXPECT_NEAR(lobe(p, -1, 5), 0.5625, 1e-14);
  EXPECT_NEAR(lobe(p, +1, 5), 0.1875, 1e-14);
}

TEST(Evolve, QuarterPlateAt135MirrorsAt45) {
  // Swapping R and L mirrors the lattice; the 135 deg plate is the mirrored 45 deg plate.
  const Eigen::Vector2cd in = prepared_coin_state(45.0);
  const Eigen::Vector2cd mirrored(in(1), in(0));
  const auto a = evolve_auto(WalkerState::localized(0, in), WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 12);
  const auto b = evolve_auto(WalkerState::localized(0, mirrored), WaveplateSpec(PlateKind::Quarter, 135.0), kQ, 12);
  const Spectrum pa = probabilities(a.back()), pb = probabilities(b.back());
  for (int l = -12; l <= 12; ++l) EXPECT_NEAR(pa.at(l), pb.at(-l), 1e-14);
}

TEST(Evolve, HadamardVarianceGrowsQuadratically) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)),
                                  WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 100);
  const double r50 = variance(probabilities(states[50])) / (50.0 * 50.0);
  const double r100 = variance(probabilities(states[100])) / (100.0 * 100.0);
  EXPECT_NEAR(r100 / r50, 1.0, 0.2);
  EXPECT_GT(variance(probabilities(states[100])), 10.0 * 100.0);
}

TEST(Probabilities, BornRule) {
  WalkerState s(-1, 1);
  s.amp(1, Coin::L) = 1.0 / s2;
  s.amp(-1, Coin::R) = 1.0 / s2;
  const Spectrum p = probabilities(s);
  EXPECT_NEAR(p.at(-1), 0.5, 1e-15);
  EXPECT_EQ(p.at(0), 0.0);
  EXPECT_NEAR(p.at(1), 0.5, 1e-15);
  EXPECT_NEAR(variance(p), 1.0, 1e-15);
}

TEST(ClassicalWalk, MatchesBinomialOracle) {
  for (int n : {0, 1, 2, 7, 50, 100}) {
    for (double p : {0.0, 0.3, 0.5, 1.0}) {
      const Spectrum s = classical_rw_distribution(n, p);
      ASSERT_EQ(s.lmin(), -n);
      ASSERT_EQ(s.lmax(), n);
      for (int k = 0; k <= n; ++k) {
        EXPECT_NEAR(s.at(2 * k - n), oracle::binomial_pmf(n, k, p), 1e-13) << n << " " << p << " " << k;
      }
      for (int l = -n + 1; l <= n; l += 2) EXPECT_EQ(s.at(l), 0.0);
    }
  }
}

TEST(ClassicalWalk, SmallCases) {
  const Spectrum s = classical_rw_distribution(2, 0.5);
  EXPECT_DOUBLE_EQ(s.at(-2), 0.25);
  EXPECT_DOUBLE_EQ(s.at(0), 0.5);
  EXPECT_DOUBLE_EQ(s.at(2), 0.25);
  EXPECT_DOUBLE_EQ(classical_rw_distribution(1, 1.0).at(1), 1.0);
}

TEST(ClassicalWalk, VarianceIsLinear) {
  EXPECT_NEAR(variance(classical_rw_distribution(50, 0.5)), 50.0, 1e-9);
  EXPECT_NEAR(variance(classical_rw_distribution(100, 0.5)), 100.0, 1e-9);
  const Spectrum s = classical_rw_distribution(50, 0.5);
  for (int l = -50; l <= 50; ++l) EXPECT_LE(s.at(l), s.at(0));
}

TEST(ClassicalWalk, RejectsBadArguments) {
  EXPECT_THROW(classical_rw_distribution(-1, 0.5), std::invalid_argument);
  EXPECT_THROW(classical_rw_distribution(3, 1.5), std::invalid_argument);
}

TEST(Nonseparability, ProductAndBellLikeStates) {
  EXPECT_EQ(nonseparability(WalkerState::localized(0, right_circular())), 0.0);
  WalkerState s(-1, 1);
  s.amp(-1, Coin::R) = 1.0 / s2;
  s.amp(1, Coin::L) = -1.0 / s2;
  EXPECT_NEAR(nonseparability(s), 1.0, 1e-15);
  // Coin-independent spatial spread is still a product state.
  WalkerState p(-2, 2);
  for (int l = -2; l <= 2; ++l) {
    p.amp(l, Coin::R) = 0.3 * (l + 3) * 0.5;
    p.amp(l, Coin::L) = 0.3 * (l + 3) * cplx(0.0, 0.5);
  }
  EXPECT_NEAR(nonseparability(p), 0.0, 1e-15);
}

TEST(Nonseparability, MatchesSvdOracle) {
  const auto states = evolve_auto(WalkerState::localized(0, prepared_coin_state(67.5)),
                                  WaveplateSpec(PlateKind::Quarter, 45.0), kQ, 8);
  for (const auto& s : states) {
    Eigen::MatrixXcd m(s.sites(), 2);
    for (int l = s.lmin(); l <= s.lmax(); ++l) {
      m(l - s.lmin(), 0) = s.amp(l, Coin::R);
      m(l - s.lmin(), 1) = s.amp(l, Coin::L);
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
    EXPECT_NEAR(nonseparability(s), 2.0 * sv(0) * sv(1), 1e-12);
  }
  EXPECT_GT(nonseparability(states[1]), 0.0);
  EXPECT_LE(nonseparability(states[1]), 1.0);
}

TEST(WalkerState, EmbeddingGuardsSupport) {
  const WalkerState s = WalkerState::localized(2, right_circular(), -3, 3);
  EXPECT_NO_THROW(s.embedded(1, 5));
  EXPECT_THROW(s.embedded(-3, 1), LatticeOverflow);
  EXPECT_THROW(WalkerState(2, 1), std::invalid_argument);
  EXPECT_THROW(WalkerState::localized(0, Eigen::Vector2cd::Zero()), std::invalid_argument);
}
