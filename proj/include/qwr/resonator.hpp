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

#include <array>
#include <utility>
#include <vector>

#include "qwr/spectrum.hpp"

namespace qwr {

/// Temporal pulse G(t) = a exp(-(t - b)^2 / (2 c^2)) + k, times in ns.
struct PulseModel {
  double a = 0.0605;
  double b_ns = 0.0;
  double c_ns = 6.107;
  double k = 0.0;

  /// Throws std::invalid_argument unless a > 0 and c > 0.
  void validate() const;
  bool operator==(const PulseModel&) const = default;
};

/// Ring cavity with a beam-splitter output coupler and a gated detector.
struct CavityConfig {
  double round_trip_ns = 10.0;
  double transmission = 0.5;
  PulseModel pulse{};
  double pulse_window_ns = 40.0;
  double gate_width_ns = 10.0;

  double reflection() const { return 1.0 - transmission; }
  /// Throws std::invalid_argument on 0 < T < 1, GW <= PW or round trip violations.
  void validate() const;
  bool operator==(const CavityConfig&) const = default;
};

/// Distributions for steps 0..N; entries share one lattice.
using StepSeries = std::vector<Spectrum>;

double pulse_value(const PulseModel& p, double t_ns);
/// 2 sqrt(2 ln 2) c
double fwhm(const PulseModel& p);
/// 2 sqrt(2 ln 10) c
double fwtm(const PulseModel& p);

/// Exact integral of G over [lo, hi] via the error function.
double pulse_integral(const PulseModel& p, double lo_ns, double hi_ns);

/// Round-trip intensity weight: 0 for n < 0, R for n = 0, T^2 R^(n-1) otherwise.
double bs_weight(double transmission, int n);
double bs_weight(const CavityConfig& cfg, int n);

/// a = (PW - GW) / 2. Throws std::invalid_argument when GW > PW.
double gate_offset(const CavityConfig& cfg);
/// Main captured window [-PW/2 + a, PW/2 - a].
std::pair<double, double> gate_window(const CavityConfig& cfg);

/// Time window (relative to pulse n's centre) over which pulse n + k is
/// captured while gating step n, k in [-2, 2].
std::pair<double, double> overlap_window(const CavityConfig& cfg, int k);

/// c_{n+k} = w(n + k) * integral of G over overlap_window(k), for k = -2..2
/// (index 0 holds c_{n-2}).
std::array<double, 5> overlap_coefficients(const CavityConfig& cfg, int n);

/// measured(n) = normalize(sum_k c_{n+k} series(n + k)); missing steps are zero.
StepSeries convolve_steps(const StepSeries& series, const CavityConfig& cfg);

/// Inverse of one convolution step before clamping. `neighbours` supplies the
/// distributions of steps n +- 1, n +- 2 (missing entries count as zero); the
/// step being recovered is taken to have unit sum. Throws std::domain_error when c_n = 0.
std::vector<double> deconvolve_step_raw(const StepSeries& measured, const CavityConfig& cfg,
                                        int n, const StepSeries& neighbours);

/// deconvolve_step_raw, negatives set to zero, then renormalized.
Spectrum deconvolve_step(const StepSeries& measured, const CavityConfig& cfg, int n,
                         const StepSeries& neighbours);

/// Recovers the whole series from measured data alone by solving the banded
/// overlap system for every l, then clamps and renormalizes each step.
StepSeries deconvolve_series(const StepSeries& measured, const CavityConfig& cfg);

/// Unclamped solution of the banded system; row n, column l - lmin.
std::vector<std::vector<double>> deconvolve_series_raw(const StepSeries& measured,
                                                       const CavityConfig& cfg);

}  // namespace qwr
