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

#include "qwr/sorter.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "qwr/kernels.hpp"

namespace qwr {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Sum of gamma_m exp(i(m x + alpha_m)) over m = -N..N, x in grating periods * 2 pi.
cplx fanout_sum(const std::vector<double>& gammas, const std::vector<double>& alphas, double x) {
  const int half = static_cast<int>(gammas.size() - 1) / 2;
  cplx z{};
  for (int m = -half; m <= half; ++m) {
    const std::size_t i = static_cast<std::size_t>(m + half);
    z += gammas[i] * std::polar(1.0, m * x + alphas[i]);
  }
  return z;
}

std::vector<cplx> order_amplitudes(const std::vector<double>& gammas,
                                   const std::vector<double>& alphas, int max_order, int samples) {
  std::vector<cplx> t(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    t[static_cast<std::size_t>(j)] = std::polar(1.0, std::arg(fanout_sum(gammas, alphas, kTwoPi * j / samples)));
  }
  std::vector<cplx> c(2 * static_cast<std::size_t>(max_order) + 1);
  for (int m = -max_order; m <= max_order; ++m) {
    cplx acc{};
    for (int j = 0; j < samples; ++j) {
      acc += t[static_cast<std::size_t>(j)] * std::polar(1.0, -kTwoPi * m * j / samples);
    }
    c[static_cast<std::size_t>(m + max_order)] = acc / static_cast<double>(samples);
  }
  return c;
}

struct FanoutScore {
  double score, efficiency, nonuniformity;
};

FanoutScore score_fanout(int half, const std::vector<double>& params, int samples) {
  std::vector<double> g(2 * static_cast<std::size_t>(half) + 1, 1.0);
  std::vector<double> a(g.size(), 0.0);
  for (int m = 1; m <= half; ++m) {
    g[static_cast<std::size_t>(half + m)] = g[static_cast<std::size_t>(half - m)] = params[2 * (m - 1)];
    a[static_cast<std::size_t>(half + m)] = a[static_cast<std::size_t>(half - m)] = params[2 * (m - 1) + 1];
  }
  const auto c = order_amplitudes(g, a, half, samples);
  double sum = 0.0, lo = 1.0, hi = 0.0;
  for (const cplx& v : c) {
    const double e = std::norm(v);
    sum += e;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  const double nonuni = hi > 0.0 ? (hi - lo) / hi : 1.0;
  return {sum - 10.0 * (hi - lo), sum, nonuni};
}

double sq(double v) { return v * v; }

}  // namespace

void SorterDesign::validate() const {
  if (!(d > 0.0 && b > 0.0 && f > 0.0 && wavelength > 0.0)) {
    throw std::invalid_argument("sorter design: d, b, f and wavelength must be positive");
  }
  if (copies < 1 || copies % 2 == 0) throw std::invalid_argument("sorter design: copies must be odd and positive");
  if (gammas.size() != static_cast<std::size_t>(copies) || alphas.size() != gammas.size()) {
    throw std::invalid_argument("sorter design: fan-out tables must have one entry per copy");
  }
  for (double g : gammas) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("sorter design: gammas must be nonnegative");
  }
  if (copies > 1 && !(omega > 0.0)) throw std::invalid_argument("sorter design: fan-out needs omega > 0");
  if (!is_power_of_two(grid_n)) throw std::invalid_argument("sorter design: grid_n must be a power of two");
  if (oversample < 1) throw std::invalid_argument("sorter design: oversample must be positive");
}

namespace {

SorterDesign single_copy(std::string name, double f, double d) {
  SorterDesign s;
  s.name = std::move(name);
  s.wavelength = 633e-9;
  s.f = f;
  s.d = d;
  s.b = 16.0 * s.spot_pitch();
  return s;
}

}  // namespace

SorterDesign SorterDesign::refractive() { return single_copy("refractive", 0.5, 10.5e-3); }

SorterDesign SorterDesign::diffractive_1copy() { return single_copy("diffractive-1copy", 0.1, 1.12e-3); }

SorterDesign SorterDesign::diffractive_3copy() {
  static const FanoutSolution fan = optimize_fanout(3);
  SorterDesign s = single_copy("diffractive-3copy", 0.1, 0.5e-3);
  s.copies = 3;
  s.omega = s.d / s.f;  // adjacent copies land one unwrapped length apart
  s.gammas = fan.gammas;
  s.alphas = fan.alphas;
  s.grid_n = 2048;
  s.oversample = 8;
  return s;
}

SorterDesign SorterDesign::preset(const std::string& name) {
  if (name == "refractive") return refractive();
  if (name == "diffractive-1copy") return diffractive_1copy();
  if (name == "diffractive-3copy") return diffractive_3copy();
  throw std::invalid_argument("unknown sorter preset '" + name +
                              "' (expected refractive, diffractive-1copy or diffractive-3copy)");
}

FanoutSolution optimize_fanout(int copies) {
  if (copies < 1 || copies % 2 == 0) throw std::invalid_argument("optimize_fanout: copies must be odd");
  const int half = (copies - 1) / 2;
  if (half == 0) return {{1.0}, {0.0}, 1.0, 0.0};

  constexpr int kFine = 1024;
  std::vector<double> p(2 * static_cast<std::size_t>(half));
  if (half == 1) {
    // Two parameters and one equality: follow the equal-intensity ridge,
    // gamma(alpha) by bisection, and maximize efficiency along it.
    const auto imbalance = [](double g, double a) {
      const auto c = order_amplitudes({g, 1.0, g}, {a, 0.0, a}, 1, kFine);
      return std::norm(c[2]) - std::norm(c[1]);
    };
    const auto ridge = [&](double a) {
      double lo = 0.05, hi = 5.0;
      if (imbalance(lo, a) > 0.0 || imbalance(hi, a) < 0.0) return -1.0;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (imbalance(mid, a) < 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    };
    const auto efficiency = [&](double a) {
      const double g = ridge(a);
      return g < 0.0 ? -1.0 : score_fanout(1, {g, a}, kFine).efficiency;
    };
    double best_a = 0.0, best = -1.0;
    for (int j = 0; j <= 18; ++j) {
      const double a = std::numbers::pi * j / 18.0;
      if (const double e = efficiency(a); e > best) {
        best = e;
        best_a = a;
      }
    }
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = std::max(0.0, best_a - std::numbers::pi / 18.0);
    double hi = std::min(std::numbers::pi, best_a + std::numbers::pi / 18.0);
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = efficiency(x1), f2 = efficiency(x2);
    while (hi - lo > 1e-8) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = efficiency(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = efficiency(x1);
      }
    }
    p = {ridge(0.5 * (lo + hi)), 0.5 * (lo + hi)};
  } else {
    for (int m = 1; m <= half; ++m) {
      p[2 * (m - 1)] = 1.0;
      p[2 * (m - 1) + 1] = std::numbers::pi * m * m / copies;
    }
    // Compass search on the fine sampling.
    double cur = score_fanout(half, p, kFine).score;
    for (double h = 0.05; h > 1e-9; h *= 0.5) {
      bool moved = true;
      while (moved) {
        moved = false;
        for (std::size_t k = 0; k < p.size(); ++k) {
          for (double dir : {1.0, -1.0}) {
            std::vector<double> q = p;
            q[k] += dir * h;
            if (k % 2 == 0 && q[k] < 0.0) continue;
            const double s = score_fanout(half, q, kFine).score;
            if (s > cur) {
              cur = s;
              p = q;
              moved = true;
            }
          }
        }
      }
    }
  }

  FanoutSolution out;
  out.gammas.assign(static_cast<std::size_t>(copies), 1.0);
  out.alphas.assign(static_cast<std::size_t>(copies), 0.0);
  for (int m = 1; m <= half; ++m) {
    out.gammas[static_cast<std::size_t>(half + m)] = out.gammas[static_cast<std::size_t>(half - m)] = p[2 * (m - 1)];
    out.alphas[static_cast<std::size_t>(half + m)] = out.alphas[static_cast<std::size_t>(half - m)] = p[2 * (m - 1) + 1];
  }
  const FanoutScore fs = score_fanout(half, p, kFine);
  out.efficiency = fs.efficiency;
  out.nonuniformity = fs.nonuniformity;
  return out;
}

std::vector<cplx> fanout_order_amplitudes(const SorterDesign& design, int max_order) {
  if (max_order < 0) throw std::invalid_argument("fanout_order_amplitudes: negative order");
  return order_amplitudes(design.gammas, design.alphas, max_order, 4096);
}

FieldGrid design_grid(const SorterDesign& design) {
  return design_grid(design, design.grid_n, design.oversample);
}

FieldGrid design_grid(const SorterDesign& design, int n, int oversample) {
  design.validate();
  if (oversample < 1) throw std::invalid_argument("design_grid: oversample must be positive");
  const double dx = design.spot_pitch() / oversample;
  return FieldGrid(n, n, dx, dx, design.wavelength);
}

FieldGrid oam_mode(const FieldGrid& grid, int l, double w0) {
  const double half_extent = 0.5 * std::min(grid.nx * grid.dx, grid.ny * grid.dy);
  if (!(w0 > 0.0) || w0 >= half_extent / 3.0) {
    throw std::invalid_argument("oam_mode: waist must be positive and below a third of the grid half-extent");
  }
  FieldGrid out(grid.nx, grid.ny, grid.dx, grid.dy, grid.wavelength);
  const int al = std::abs(l);
  for (int j = 0; j < out.ny; ++j) {
    const double y = out.y(j);
    for (int i = 0; i < out.nx; ++i) {
      const double x = out.x(i);
      const double rho = std::hypot(x, y) / w0;
      const double amp = (al == 0 ? 1.0 : std::pow(rho, al)) * std::exp(-rho * rho);
      out.at(i, j) = amp * std::polar(1.0, l * std::atan2(y, x));
    }
  }
  const double p = out.power();
  const double s = 1.0 / std::sqrt(p);
  for (cplx& v : out.values) v *= s;
  return out;
}

double unwrapper_phase(const SorterDesign& design, double x, double y) {
  if (x == 0.0 && y == 0.0) return 0.0;
  const double r = std::hypot(x, y);
  return design.d / (design.wavelength * design.f) *
         (y * std::atan2(y, x) - x * std::log(r / design.b) + x);
}

double corrector_phase(const SorterDesign& design, double u, double v) {
  return design.d * design.b / (design.wavelength * design.f) * std::exp(-kTwoPi * u / design.d) *
         std::cos(kTwoPi * v / design.d);
}

double fanout_phase(const SorterDesign& design, double y) {
  const double k = kTwoPi * design.omega / design.wavelength;
  return std::arg(fanout_sum(design.gammas, design.alphas, k * y));
}

ModeSorter::ModeSorter(SorterDesign design, const FieldGrid& geometry)
    : design_(std::move(design)),
      geometry_(geometry.nx, geometry.ny, geometry.dx, geometry.dy, design_.wavelength) {
  design_.validate();
  const int nx = geometry_.nx, ny = geometry_.ny;
  const double dx = geometry_.dx, dy = geometry_.dy;
  const double scale = design_.d / (design_.wavelength * design_.f);
  const double k = kTwoPi * design_.omega / design_.wavelength;
  const int half = design_.half_orders();

  // Element 1 phase gradient: (d / lambda f)(-ln(r / b), theta) plus the fan-out slope along y.
  double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (int j = 0; j < ny; ++j) {
    const double y = (j - ny / 2) * dy;
    double fan_slope = 0.0;
    if (half > 0) {
      const cplx z = fanout_sum(design_.gammas, design_.alphas, k * y);
      cplx dz{};
      for (int m = -half; m <= half; ++m) {
        const std::size_t i = static_cast<std::size_t>(m + half);
        dz += design_.gammas[i] * cplx(0.0, k * m) * std::polar(1.0, m * k * y + design_.alphas[i]);
      }
      fan_slope = std::abs(z) > 0.0 ? (dz / z).imag() : 1e300;
    }
    for (int i = 0; i < nx; ++i) {
      const double x = (i - nx / 2) * dx;
      if (x == 0.0 && y == 0.0) continue;
      const double gx = scale * std::abs(std::log(std::hypot(x, y) / design_.b));
      const double gy = std::abs(scale * std::atan2(y, x) + fan_slope);
      worst = std::max({worst, gx * dx, gy * dy});
    }
  }
  max_step_ = worst;
  if (max_step_ > std::numbers::pi) {
    throw SamplingError("sorter '" + design_.name + "': element phase changes by " +
                        std::to_string(max_step_) + " rad per sample (> pi); refine the grid");
  }

  const kernels::Grid2 g1{nx, ny, dx, dy};
  element1_.resize(geometry_.values.size());
  const SorterDesign& des = design_;
  kernels::omp::tabulate_phase_mask(element1_, g1, 1.0, [&des, half](double x, double y) {
    const double p = unwrapper_phase(des, x, y);
    return half > 0 ? p + fanout_phase(des, y) : p;
  });

  // Corrector plane, one focal length on: pitch lambda f / (n dx). Each copy
  // also gets the piston of its diffraction order removed.
  const double du = design_.wavelength * design_.f / (nx * dx);
  const double dv = design_.wavelength * design_.f / (ny * dy);
  std::vector<double> piston(static_cast<std::size_t>(2 * half + 1), 0.0);
  if (half > 0) {
    const auto c = fanout_order_amplitudes(design_, half);
    for (std::size_t m = 0; m < c.size(); ++m) piston[m] = std::arg(c[m]);
  }
  const double copy_pitch = design_.omega * design_.f;
  const kernels::Grid2 g2{nx, ny, du, dv};
  element2_.resize(geometry_.values.size());
  kernels::omp::tabulate_phase_mask(
      element2_, g2, -1.0, [&des, half, copy_pitch, &piston](double u, double v) {
        double p = corrector_phase(des, u, v);
        if (half > 0) {
          const int m = std::clamp(static_cast<int>(std::lround(v / copy_pitch)), -half, half);
          p += piston[static_cast<std::size_t>(m + half)];
        }
        return p;
      });
}

FieldGrid ModeSorter::run(const FieldGrid& input) const {
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
  if (input.nx != geometry_.nx || input.ny != geometry_.ny || !close(input.dx, geometry_.dx) ||
      !close(input.dy, geometry_.dy)) {
    throw std::invalid_argument("sorter: input grid does not match the design sampling");
  }
  FieldGrid e = input;
  e.wavelength = design_.wavelength;
  kernels::omp::multiply(e.values, element1_);
  FieldGrid mid = lens_fourier_transform(e, design_.f);
  kernels::omp::multiply(mid.values, element2_);
  return lens_fourier_transform(mid, design_.f);
}

std::vector<double> ModeSorter::profile(const FieldGrid& detected) const {
  std::vector<double> out(static_cast<std::size_t>(detected.ny));
  kernels::omp::row_power(detected.values, detected.nx, detected.ny, out);
  for (double& v : out) v *= detected.dx;
  return out;
}

std::vector<double> ModeSorter::profile_coordinates() const {
  // Two lens transforms return the input pitch.
  std::vector<double> t(static_cast<std::size_t>(geometry_.ny));
  for (int j = 0; j < geometry_.ny; ++j) t[static_cast<std::size_t>(j)] = geometry_.y(j);
  return t;
}

Spectrum ModeSorter::sort_mode(int l, int lmin, int lmax) const {
  const FieldGrid out = run(oam_mode(geometry_, l, waist()));
  return bin_spectrum(profile(out), profile_coordinates(), design_, lmin, lmax);
}

double ModeSorter::centroid(int l) const {
  const FieldGrid out = run(oam_mode(geometry_, l, waist()));
  return spot_centroid(profile(out), profile_coordinates(), design_.spot_pitch());
}

FieldGrid sorter_pipeline(const FieldGrid& input, const SorterDesign& design) {
  return ModeSorter(design, input).run(input);
}

double spot_position(const SorterDesign& design, int l) { return design.spot_pitch() * l; }

Spectrum bin_spectrum(const std::vector<double>& profile, const std::vector<double>& t,
                      const SorterDesign& design, int lmin, int lmax) {
  if (profile.size() != t.size() || t.size() < 2) {
    throw std::invalid_argument("bin_spectrum: profile and coordinates differ in size");
  }
  if (lmax < lmin) throw std::invalid_argument("bin_spectrum: empty OAM range");
  const double dt = t[1] - t[0];
  const double p = design.spot_pitch();
  const double first = t.front() - 0.5 * dt, last = t.back() + 0.5 * dt;
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(lmax - lmin + 1));
  for (int l = lmin; l <= lmax; ++l) {
    const double lo = spot_position(design, l) - 0.5 * p;
    const double hi = lo + p;
    if (lo < first || hi > last) {
      throw std::invalid_argument("bin_spectrum: bin for l = " + std::to_string(l) + " leaves the grid");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      const double ov = std::min(t[j] + 0.5 * dt, hi) - std::max(t[j] - 0.5 * dt, lo);
      if (ov > 0.0) acc += profile[j] * ov / dt;
    }
    w.push_back(acc);
  }
  return Spectrum(lmin, std::move(w)).normalized();
}

Spectrum bin_spectrum(const FieldGrid& detected, const SorterDesign& design, int lmin, int lmax) {
  std::vector<double> prof(static_cast<std::size_t>(detected.ny));
  kernels::omp::row_power(detected.values, detected.nx, detected.ny, prof);
  std::vector<double> t(prof.size());
  for (int j = 0; j < detected.ny; ++j) t[static_cast<std::size_t>(j)] = detected.y(j);
  return bin_spectrum(prof, t, design, lmin, lmax);
}

double spot_centroid(const std::vector<double>& profile, const std::vector<double>& t, double pitch) {
  if (profile.empty() || profile.size() != t.size()) {
    throw std::invalid_argument("spot_centroid: profile and coordinates differ in size");
  }
  const auto k = static_cast<std::size_t>(std::max_element(profile.begin(), profile.end()) - profile.begin());
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (std::abs(t[j] - t[k]) <= 1.5 * pitch) {
      m0 += profile[j];
      m1 += profile[j] * t[j];
    }
  }
  if (!(m0 > 0.0)) throw std::domain_error("spot_centroid: no detected power");
  return m1 / m0;
}

double CrosstalkMatrix::mean_offdiagonal() const { return 1.0 - mean_diagonal(); }

double CrosstalkMatrix::mean_diagonal() const {
  double acc = 0.0;
  for (int l = lmin; l <= lmax; ++l) acc += at(l, l);
  return acc / size();
}

CrosstalkMatrix crosstalk_matrix(const ModeSorter& sorter, int lmin, int lmax) {
  if (lmax < lmin) throw std::invalid_argument("crosstalk_matrix: empty OAM range");
  CrosstalkMatrix m{lmin, lmax, std::vector<std::vector<double>>(static_cast<std::size_t>(lmax - lmin + 1))};
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int l = lmin; l <= lmax; ++l) {
    try {
      m.rows[static_cast<std::size_t>(l - lmin)] = sorter.sort_mode(l, lmin, lmax).weights();
    } catch (...) {
#pragma omp critical(qwr_crosstalk_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return m;
}

CrosstalkMatrix crosstalk_matrix(const SorterDesign& design, int lmin, int lmax) {
  return crosstalk_matrix(ModeSorter(design), lmin, lmax);
}

double similarity(const Spectrum& w_exp, const Spectrum& w_th) {
  if (!w_exp.same_support(w_th)) throw std::invalid_argument("similarity: spectra have different supports");
  const double se = w_exp.total(), st = w_th.total();
  if (!(se > 0.0) || !(st > 0.0)) throw std::domain_error("similarity: spectrum with zero total");
  double acc = 0.0;
  for (int i = 0; i < w_exp.size(); ++i) {
    acc += std::sqrt(w_exp.weights()[static_cast<std::size_t>(i)] * w_th.weights()[static_cast<std::size_t>(i)]);
  }
  return acc * acc / (se * st);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need two or more paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += sq(x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += sq(y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_line: x values are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) ssr += sq(y[i] - (fit.intercept + fit.slope * x[i]));
  fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : (ssr == 0.0 ? 1.0 : 0.0);
  return fit;
}

}  // namespace qwr
