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

#include "qwr/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "qwr/kernels.hpp"
#include "qwr/resonator.hpp"
#include "qwr/sorter.hpp"
#include "qwr/walk.hpp"

namespace qwr {
namespace {

std::string num(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

CheckResult bounded(std::string name, double err, double tol) {
  return {std::move(name), err <= tol, "error " + num(err) + " (tol " + num(tol) + ")"};
}

double phase_mismatch(const WalkerState& a, const WalkerState& b) {
  // min over phases of max |a - e^{i phi} b|, phase taken from the largest entry of b.
  std::size_t k = 0;
  const auto av = a.amplitudes(), bv = b.amplitudes();
  if (av.size() != bv.size()) return INFINITY;
  for (std::size_t i = 0; i < bv.size(); ++i) {
    if (std::abs(bv[i]) > std::abs(bv[k])) k = i;
  }
  const cplx ph = av[k] / bv[k];
  double e = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) e = std::max(e, std::abs(av[i] - ph * bv[i]));
  return e;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite() {
  std::vector<CheckResult> out;
  const auto guard = [&out](const std::string& name, const std::function<CheckResult()>& f) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  };
  const QPlateSpec qp(0.5);
  const auto diag = prepared_coin_state(67.5);

  guard("coin: QWP(45) = Hadamard * NOT up to phase", [] {
    const bool ok = equal_up_to_global_phase(qwp_operator(45.0), hadamard_coin() * not_coin(), 1e-12);
    return CheckResult{"coin: QWP(45) = Hadamard * NOT up to phase", ok, ok ? "ok" : "mismatch"};
  });
  guard("walk: norm preserved over 100 Hadamard steps", [&] {
    const auto s = evolve_auto(WalkerState::localized(0, diag), WaveplateSpec(PlateKind::Quarter, 45.0), qp, 100);
    double e = 0.0;
    for (const auto& st : s) e = std::max(e, std::abs(st.norm_squared() - 1.0));
    return bounded("walk: norm preserved over 100 Hadamard steps", e, 1e-12);
  });
  guard("walk: NOT coin has period 2", [&] {
    const auto s = evolve_auto(WalkerState::localized(0, diag), std::nullopt, qp, 100);
    double e = 0.0;
    for (int k = 1; k <= 50; ++k) e = std::max(e, phase_mismatch(s[2 * k], s[0]));
    return bounded("walk: NOT coin has period 2", e, 1e-12);
  });
  guard("walk: identity coin support is {-n, n}", [&] {
    const int n = 7;
    const auto s = evolve_auto(WalkerState::localized(0, diag), WaveplateSpec(PlateKind::Half, 0.0), qp, n);
    const Spectrum p = probabilities(s.back());
    double off = 0.0;
    for (int l = p.lmin(); l <= p.lmax(); ++l) {
      if (std::abs(l) != n) off += p.at(l);
    }
    return CheckResult{"walk: identity coin support is {-n, n}", off == 0.0, "weight off {-n, n}: " + num(off)};
  });
  guard("cavity: beam-splitter weights sum to 1", [] {
    double s = 0.0;
    for (int n = 0; n < 200; ++n) s += bs_weight(0.5, n);
    return bounded("cavity: beam-splitter weights sum to 1", std::abs(s - 1.0), 1e-9);
  });
  guard("cavity: FWTM / FWHM = sqrt(ln 10 / ln 2)", [] {
    const PulseModel p{};
    return bounded("cavity: FWTM / FWHM = sqrt(ln 10 / ln 2)",
                   std::abs(fwtm(p) / fwhm(p) - std::sqrt(std::log(10.0) / std::log(2.0))), 1e-14);
  });
  guard("cavity: deconvolution inverts convolution", [&] {
    const auto s = evolve_auto(WalkerState::localized(0, diag), WaveplateSpec(PlateKind::Quarter, 45.0), qp, 6);
    StepSeries ideal;
    for (const auto& st : s) ideal.push_back(probabilities(st));
    const CavityConfig cfg{};
    const auto raw = deconvolve_series_raw(convolve_steps(ideal, cfg), cfg);
    double e = 0.0;
    for (std::size_t n = 0; n < ideal.size(); ++n) {
      for (std::size_t i = 0; i < raw[n].size(); ++i) e = std::max(e, std::abs(raw[n][i] - ideal[n].weights()[i]));
    }
    return bounded("cavity: deconvolution inverts convolution", e, 1e-9);
  });
  guard("sorter: similarity of a spectrum with itself is 1", [] {
    const Spectrum w(-2, {0.1, 0.2, 0.3, 0.15, 0.25});
    return bounded("sorter: similarity of a spectrum with itself is 1", std::abs(similarity(w, w) - 1.0), 0.0);
  });
  guard("sorter: lens transform conserves power", [] {
    FieldGrid g(64, 64, 1e-5, 1e-5, 633e-9);
    const FieldGrid m = oam_mode(g, 2, 8e-5);
    const FieldGrid f = lens_fourier_transform(m, 0.1);
    return bounded("sorter: lens transform conserves power", std::abs(f.power() - m.power()), 1e-12);
  });
  guard("kernels: OpenMP matches serial bit for bit", [] {
    std::vector<cplx> a(4096), b;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = cplx(std::sin(0.1 * i), std::cos(0.37 * i));
    b = a;
    const kernels::Mat2 h{cplx(M_SQRT1_2), cplx(M_SQRT1_2), cplx(M_SQRT1_2), cplx(-M_SQRT1_2)};
    kernels::serial::apply_coin(a, h);
    kernels::omp::apply_coin(b, h);
    const bool ok = a == b;
    return CheckResult{"kernels: OpenMP matches serial bit for bit", ok, ok ? "identical" : "differs"};
  });
  return out;
}

}  // namespace qwr
