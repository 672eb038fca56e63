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

#include "qwr/resonator.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwr {
namespace {

constexpr int kStencil = 2;

void require_common_lattice(const StepSeries& s, const char* what) {
  for (const Spectrum& d : s) {
    if (!d.same_support(s.front())) {
      throw std::invalid_argument(std::string(what) + ": steps must share one lattice");
    }
  }
}

}  // namespace

void PulseModel::validate() const {
  if (!(a > 0.0)) throw std::invalid_argument("pulse: amplitude a must be positive");
  if (!(c_ns > 0.0)) throw std::invalid_argument("pulse: width c must be positive");
}

void CavityConfig::validate() const {
  if (!(transmission > 0.0 && transmission < 1.0)) {
    throw std::invalid_argument("cavity: transmission must lie strictly between 0 and 1");
  }
  if (!(round_trip_ns > 0.0)) throw std::invalid_argument("cavity: round_trip_ns must be positive");
  if (!(gate_width_ns > 0.0)) throw std::invalid_argument("cavity: gate_width_ns must be positive");
  if (gate_width_ns > pulse_window_ns) {
    throw std::invalid_argument("cavity: gate_width_ns exceeds pulse_window_ns");
  }
  pulse.validate();
}

double pulse_value(const PulseModel& p, double t_ns) {
  const double u = (t_ns - p.b_ns) / p.c_ns;
  return p.a * std::exp(-0.5 * u * u) + p.k;
}

double fwhm(const PulseModel& p) { return 2.0 * std::sqrt(2.0 * std::log(2.0)) * p.c_ns; }
double fwtm(const PulseModel& p) { return 2.0 * std::sqrt(2.0 * std::log(10.0)) * p.c_ns; }

double pulse_integral(const PulseModel& p, double lo_ns, double hi_ns) {
  const double s = p.c_ns * std::sqrt(2.0);
  const double gauss = p.a * p.c_ns * std::sqrt(M_PI / 2.0) *
                       (std::erf((hi_ns - p.b_ns) / s) - std::erf((lo_ns - p.b_ns) / s));
  return gauss + p.k * (hi_ns - lo_ns);
}

double bs_weight(double transmission, int n) {
  if (n < 0) return 0.0;
  const double r = 1.0 - transmission;
  if (n == 0) return r;
  return transmission * transmission * std::pow(r, n - 1);
}

double bs_weight(const CavityConfig& cfg, int n) { return bs_weight(cfg.transmission, n); }

double gate_offset(const CavityConfig& cfg) {
  if (cfg.gate_width_ns > cfg.pulse_window_ns) {
    throw std::invalid_argument("gate width exceeds pulse window");
  }
  return 0.5 * (cfg.pulse_window_ns - cfg.gate_width_ns);
}

std::pair<double, double> gate_window(const CavityConfig& cfg) {
  const double a = gate_offset(cfg);
  return {-0.5 * cfg.pulse_window_ns + a, 0.5 * cfg.pulse_window_ns - a};
}

std::pair<double, double> overlap_window(const CavityConfig& cfg, int k) {
  if (k < -kStencil || k > kStencil) throw std::out_of_range("overlap window index");
  const auto [lo, hi] = gate_window(cfg);
  const double rt = cfg.round_trip_ns;
  // Earlier pulses (k < 0) are seen through their trailing edge, later ones
  // through their leading edge.
  switch (k) {
    case -2: return {hi + rt, hi + 2 * rt};
    case -1: return {hi, hi + rt};
    case 1: return {lo - rt, lo};
    case 2: return {lo - 2 * rt, lo - rt};
    default: return {lo, hi};
  }
}

std::array<double, 5> overlap_coefficients(const CavityConfig& cfg, int n) {
  std::array<double, 5> c{};
  for (int k = -kStencil; k <= kStencil; ++k) {
    const double w = bs_weight(cfg, n + k);
    if (w == 0.0) continue;
    const auto [lo, hi] = overlap_window(cfg, k);
    c[static_cast<std::size_t>(k + kStencil)] = w * pulse_integral(cfg.pulse, lo, hi);
  }
  return c;
}

StepSeries convolve_steps(const StepSeries& series, const CavityConfig& cfg) {
  if (series.empty()) return {};
  require_common_lattice(series, "convolve_steps");
  const int last = static_cast<int>(series.size()) - 1;
  const std::size_t m = static_cast<std::size_t>(series.front().size());
  StepSeries out;
  out.reserve(series.size());
  for (int n = 0; n <= last; ++n) {
    const auto c = overlap_coefficients(cfg, n);
    std::vector<double> acc(m, 0.0);
    for (int k = -kStencil; k <= kStencil; ++k) {
      if (n + k < 0 || n + k > last) continue;
      const auto& w = series[static_cast<std::size_t>(n + k)].weights();
      const double ck = c[static_cast<std::size_t>(k + kStencil)];
      for (std::size_t i = 0; i < m; ++i) acc[i] += ck * w[i];
    }
    out.push_back(Spectrum(series.front().lmin(), std::move(acc)).normalized());
  }
  return out;
}

std::vector<double> deconvolve_step_raw(const StepSeries& measured, const CavityConfig& cfg, int n,
                                        const StepSeries& neighbours) {
  if (n < 0 || n >= static_cast<int>(measured.size())) {
    throw std::out_of_range("deconvolve_step: step outside measured series");
  }
  const Spectrum& mn = measured[static_cast<std::size_t>(n)];
  const auto c = overlap_coefficients(cfg, n);
  const double cn = c[kStencil];
  if (!(cn > 0.0)) throw std::domain_error("deconvolve_step: central coefficient is zero");

  const auto neighbour = [&](int step) -> const Spectrum* {
    if (step < 0 || step >= static_cast<int>(neighbours.size())) return nullptr;
    const Spectrum& s = neighbours[static_cast<std::size_t>(step)];
    if (!s.same_support(mn)) {
      throw std::invalid_argument("deconvolve_step: neighbour lattice differs from measurement");
    }
    return &s;
  };

  // Normalisation constant removed by convolve_steps.
  double scale = cn;
  for (int k = -kStencil; k <= kStencil; ++k) {
    if (k == 0) continue;
    if (const Spectrum* s = neighbour(n + k)) scale += c[static_cast<std::size_t>(k + kStencil)] * s->total();
  }

  const auto& m = mn.weights();
  std::vector<double> x(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) x[i] = m[i] * scale;
  for (int k = -kStencil; k <= kStencil; ++k) {
    if (k == 0) continue;
    const Spectrum* s = neighbour(n + k);
    if (!s) continue;
    const double ck = c[static_cast<std::size_t>(k + kStencil)];
    for (std::size_t i = 0; i < m.size(); ++i) x[i] -= ck * s->weights()[i];
  }
  for (double& v : x) v /= cn;
  return x;
}

namespace {

Spectrum clamp_normalize(int lmin, std::vector<double> x) {
  for (double& v : x) {
    if (!(v > 0.0)) v = 0.0;
  }
  return Spectrum(lmin, std::move(x)).normalized();
}

}  // namespace

Spectrum deconvolve_step(const StepSeries& measured, const CavityConfig& cfg, int n,
                         const StepSeries& neighbours) {
  return clamp_normalize(measured[static_cast<std::size_t>(n)].lmin(),
                         deconvolve_step_raw(measured, cfg, n, neighbours));
}

std::vector<std::vector<double>> deconvolve_series_raw(const StepSeries& measured,
                                                       const CavityConfig& cfg) {
  if (measured.empty()) return {};
  require_common_lattice(measured, "deconvolve_series");
  const int steps = static_cast<int>(measured.size());
  const int m = measured.front().size();

  // Row n: sum_k c_{n+k} x_{n+k} = measured(n) * sum_k c_{n+k}, each true step
  // having unit sum.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(steps, steps);
  Eigen::MatrixXd rhs(steps, m);
  for (int n = 0; n < steps; ++n) {
    const auto c = overlap_coefficients(cfg, n);
    if (!(c[kStencil] > 0.0)) throw std::domain_error("deconvolve_series: central coefficient is zero");
    double scale = 0.0;
    for (int k = -kStencil; k <= kStencil; ++k) {
      if (n + k < 0 || n + k >= steps) continue;
      const double ck = c[static_cast<std::size_t>(k + kStencil)];
      a(n, n + k) = ck;
      scale += ck;
    }
    const auto& w = measured[static_cast<std::size_t>(n)].weights();
    for (int i = 0; i < m; ++i) rhs(n, i) = w[static_cast<std::size_t>(i)] * scale;
  }
  const Eigen::MatrixXd x = a.partialPivLu().solve(rhs);

  std::vector<std::vector<double>> out(static_cast<std::size_t>(steps));
  for (int n = 0; n < steps; ++n) {
    out[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = x(n, i);
  }
  return out;
}

StepSeries deconvolve_series(const StepSeries& measured, const CavityConfig& cfg) {
  auto raw = deconvolve_series_raw(measured, cfg);
  StepSeries out;
  out.reserve(raw.size());
  for (auto& row : raw) out.push_back(clamp_normalize(measured.front().lmin(), std::move(row)));
  return out;
}

}  // namespace qwr
